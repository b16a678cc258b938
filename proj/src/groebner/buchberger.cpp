#include "icl/groebner/buchberger.hpp"

#include <algorithm>
#include <cstdint>
#include <tuple>
#include <type_traits>

#include "icl/error.hpp"

namespace icl {

namespace {

thread_local std::uint64_t t_step_limit = kDefaultStepBudget;

class StepCounter {
  public:
    StepCounter() : limit_(t_step_limit) {}
    void tick()
    {
        if (++steps_ > limit_)
            raise(ErrorKind::BudgetExceeded, "Groebner computation exceeded " + std::to_string(limit_) + " reduction steps");
    }

  private:
    std::uint64_t steps_ = 0;
    std::uint64_t limit_;
};

template <class C>
struct ITerm {
    Monomial mono;
    C coeff;
};

template <class C>
using IPoly = std::vector<ITerm<C>>;

class Ordering {
  public:
    explicit Ordering(const MonomialOrder& o) : order_(o) {}
    bool greater(const Monomial& a, const Monomial& b) const { return order_.compare(a, b) > 0; }
    std::strong_ordering compare(const Monomial& a, const Monomial& b) const { return order_.compare(a, b); }

  private:
    MonomialOrder order_;
};

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1)
            r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

/* Arithmetic over Z (fraction-free) or F_p, selected by the coefficient type. */
class ZArith {
  public:
    using C = mpz_class;
    explicit ZArith(const Field&) {}

    IPoly<C> import(const Polynomial& f) const
    {
        mpz_class den = 1;
        for (const auto& t : f.terms())
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
        IPoly<C> out;
        out.reserve(f.size());
        for (const auto& t : f.terms()) {
            mpz_class c = t.coeff.get_num() * (den / t.coeff.get_den());
            out.push_back({t.mono, std::move(c)});
        }
        normalize(out);
        return out;
    }

    Polynomial export_monic(const IPoly<C>& p, const RingContext& ring) const
    {
        std::vector<Term> terms;
        terms.reserve(p.size());
        const mpz_class& lc = p.front().coeff;
        for (const auto& t : p) {
            Rational q(t.coeff, lc);
            q.canonicalize();
            terms.push_back(Term{t.mono, std::move(q)});
        }
        return Polynomial::from_terms(ring, std::move(terms));
    }

    Polynomial export_scaled(const IPoly<C>& p, const Rational& scale, const RingContext& ring) const
    {
        std::vector<Term> terms;
        terms.reserve(p.size());
        for (const auto& t : p)
            terms.push_back(Term{t.mono, Rational(t.coeff) * scale});
        return Polynomial::from_terms(ring, std::move(terms));
    }

    /* Divide by content, make the leading coefficient positive; returns the
     * divisor applied (signed). */
    mpz_class normalize(IPoly<C>& p) const
    {
        if (p.empty())
            return 1;
        mpz_class g = 0;
        for (const auto& t : p) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
            if (g == 1)
                break;
        }
        if (sgn(p.front().coeff) < 0)
            g = -g;
        if (g != 1)
            for (auto& t : p)
                mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), g.get_mpz_t());
        return g;
    }

    /* One reduction of the leading term of p by g (g's lead divides with
     * quotient m). The already-split remainder `rem` is scaled alongside.
     * Returns the scalar applied to p. */
    mpz_class step(IPoly<C>& p, IPoly<C>& rem, const IPoly<C>& g, const Monomial& m, const Ordering& ord) const
    {
        const mpz_class& lp = p.front().coeff;
        const mpz_class& lg = g.front().coeff;
        mpz_class d = gcd(lp, lg);
        mpz_class ca = lp / d;
        mpz_class cb = lg / d;
        if (sgn(cb) < 0) {
            cb = -cb;
            ca = -ca;
        }
        IPoly<C> out;
        out.reserve(p.size() + g.size());
        std::size_t i = 1, j = 1;
        Monomial mj;
        bool have_mj = false;
        mpz_class tmp;
        const bool scale_p = cb != 1;
        while (i < p.size() || j < g.size()) {
            if (j < g.size() && !have_mj) {
                mj = g[j].mono * m;
                have_mj = true;
            }
            std::strong_ordering c = i >= p.size()   ? std::strong_ordering::less
                                     : j >= g.size() ? std::strong_ordering::greater
                                                     : ord.compare(p[i].mono, mj);
            if (c > 0) {
                if (scale_p)
                    out.push_back({p[i].mono, p[i].coeff * cb});
                else
                    out.push_back(std::move(p[i]));
                ++i;
            } else if (c < 0) {
                tmp = g[j].coeff * ca;
                out.push_back({mj, -tmp});
                ++j;
                have_mj = false;
            } else {
                tmp = p[i].coeff * cb;
                mpz_submul(tmp.get_mpz_t(), g[j].coeff.get_mpz_t(), ca.get_mpz_t());
                if (sgn(tmp) != 0)
                    out.push_back({mj, tmp});
                ++i;
                ++j;
                have_mj = false;
            }
        }
        p = std::move(out);
        if (scale_p)
            for (auto& t : rem)
                t.coeff *= cb;
        return cb;
    }

    static bool leading_is_unit(const IPoly<C>& p) { return p.size() == 1 && p.front().mono.is_one(); }
};

class FpArith {
  public:
    using C = std::uint64_t;
    explicit FpArith(const Field& k) : p_(k.characteristic()) {}

    C inv(C a) const { return mod_pow(a, p_ - 2, p_); }

    IPoly<C> import(const Polynomial& f) const
    {
        IPoly<C> out;
        out.reserve(f.size());
        for (const auto& t : f.terms())
            out.push_back({t.mono, static_cast<C>(t.coeff.get_num().get_ui())});
        normalize(out);
        return out;
    }

    Polynomial export_monic(const IPoly<C>& p, const RingContext& ring) const
    {
        std::vector<Term> terms;
        terms.reserve(p.size());
        C li = inv(p.front().coeff);
        for (const auto& t : p)
            terms.push_back(Term{t.mono, Rational(static_cast<unsigned long>(t.coeff * li % p_))});
        return Polynomial::from_terms(ring, std::move(terms));
    }

    /* `scale` is an element of F_p held as an integral Rational. */
    Polynomial export_scaled(const IPoly<C>& p, const Rational& scale, const RingContext& ring) const
    {
        mpz_class s = scale.get_num() % static_cast<unsigned long>(p_);
        if (sgn(s) < 0)
            s += static_cast<unsigned long>(p_);
        const C c = s.get_ui();
        std::vector<Term> terms;
        terms.reserve(p.size());
        for (const auto& t : p)
            terms.push_back(Term{t.mono, Rational(static_cast<unsigned long>(t.coeff * c % p_))});
        return Polynomial::from_terms(ring, std::move(terms));
    }

    mpz_class normalize(IPoly<C>& p) const
    {
        if (p.empty() || p.front().coeff == 1)
            return 1;
        C li = inv(p.front().coeff);
        for (auto& t : p)
            t.coeff = t.coeff * li % p_;
        return 1;
    }

    /* Exact reduction; nothing is rescaled, so the factor is 1. */
    mpz_class step(IPoly<C>& p, IPoly<C>&, const IPoly<C>& g, const Monomial& m, const Ordering& ord) const
    {
        const C c = p.front().coeff * inv(g.front().coeff) % p_;
        IPoly<C> out;
        out.reserve(p.size() + g.size());
        std::size_t i = 1, j = 1;
        Monomial mj;
        bool have_mj = false;
        while (i < p.size() || j < g.size()) {
            if (j < g.size() && !have_mj) {
                mj = g[j].mono * m;
                have_mj = true;
            }
            std::strong_ordering cmp = i >= p.size()   ? std::strong_ordering::less
                                       : j >= g.size() ? std::strong_ordering::greater
                                                       : ord.compare(p[i].mono, mj);
            if (cmp > 0) {
                out.push_back(p[i]);
                ++i;
            } else if (cmp < 0) {
                out.push_back({mj, (p_ - g[j].coeff * c % p_) % p_});
                ++j;
                have_mj = false;
            } else {
                C v = (p[i].coeff + p_ - g[j].coeff * c % p_) % p_;
                if (v)
                    out.push_back({mj, v});
                ++i;
                ++j;
                have_mj = false;
            }
        }
        p = std::move(out);
        return 1;
    }

  private:
    C p_;
};

template <class Arith>
class Engine {
  public:
    using C = typename Arith::C;
    using Poly = IPoly<C>;

    explicit Engine(const RingContext& ring) : ring_(ring), arith_(ring.field()), ord_(ring.order()) {}

    struct Reducer {
        const Poly* poly;
        unsigned sugar;
    };

    /* Full reduction; the result is normalized. `scale` receives the factor
     * s with result = s * (true remainder), when requested. */
    Poly full_reduce(Poly p, const std::vector<Reducer>& reducers, unsigned* sugar = nullptr,
                     Rational* scale = nullptr)
    {
        Poly rem;
        std::size_t pos = 0;
        std::size_t since_shrink = 0;
        while (pos < p.size()) {
            const Monomial& lm = p[pos].mono;
            const Reducer* hit = nullptr;
            for (const auto& r : reducers)
                if (r.poly->front().mono.divides(lm)) {
                    hit = &r;
                    break;
                }
            if (!hit) {
                rem.push_back(std::move(p[pos]));
                ++pos;
                continue;
            }
            counter_.tick();
            Monomial m = lm / hit->poly->front().mono;
            if (sugar)
                *sugar = std::max(*sugar, hit->sugar + m.degree());
            if (pos > 0) {
                p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(pos));
                pos = 0;
            }
            mpz_class f = arith_.step(p, rem, *hit->poly, m, ord_);
            if (scale)
                *scale *= f;
            if (++since_shrink >= 8) {
                since_shrink = 0;
                mpz_class g = shrink(p, rem);
                if (scale && g != 1)
                    *scale /= g;
            }
        }
        if (!scale) {
            arith_.normalize(rem);
        } else if constexpr (std::is_same_v<C, mpz_class>) {
            *scale /= arith_.normalize(rem);
        }
        return rem;
    }

    std::vector<Polynomial> run(std::span<const Polynomial> gens)
    {
        for (const auto& g : gens) {
            if (g.is_zero())
                continue;
            if (!g.ring().identical(ring_))
                raise(ErrorKind::RingMismatch, "generators from different rings");
            unsigned sugar = g.total_degree();
            Poly h = full_reduce(arith_.import(g), active_reducers(), &sugar);
            if (h.empty())
                continue;
            if (add(std::move(h), sugar))
                return {Polynomial::constant(ring_, 1)};
        }
        while (!pairs_.empty()) {
            auto best = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
                if (a.sugar != b.sugar)
                    return a.sugar < b.sugar;
                auto c = ord_.compare(a.lcm, b.lcm);
                if (c != 0)
                    return c < 0;
                return std::tie(a.j, a.i) < std::tie(b.j, b.i);
            });
            Pair p = *best;
            pairs_.erase(best);
            unsigned sugar = p.sugar;
            Poly h = full_reduce(spoly(p), active_reducers(), &sugar);
            if (h.empty())
                continue;
            if (add(std::move(h), sugar))
                return {Polynomial::constant(ring_, 1)};
        }
        return finish();
    }

    Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis)
    {
        std::vector<Poly> stored;
        stored.reserve(basis.size());
        for (const auto& b : basis)
            if (!b.is_zero())
                stored.push_back(arith_.import(b.with_ring(ring_)));
        std::vector<Reducer> reducers;
        for (const auto& s : stored)
            reducers.push_back(Reducer{&s, 0});
        if (f.is_zero())
            return f;
        Poly p = arith_.import(f);
        Rational scale = 1;
        // import() divided f by a constant; recover it from the leading coefficients.
        Rational lead_ratio = import_factor(f, p);
        Poly r = full_reduce(std::move(p), reducers, nullptr, &scale);
        return arith_.export_scaled(r, lead_ratio / scale, ring_);
    }

  private:
    struct Pair {
        std::size_t i, j;
        Monomial lcm;
        unsigned sugar;
    };
    struct Entry {
        Poly poly;
        unsigned sugar;
        bool active;
    };

    Rational import_factor(const Polynomial& f, const Poly& p) const
    {
        if constexpr (std::is_same_v<C, mpz_class>) {
            Rational r = f.leading_coeff() / Rational(p.front().coeff);
            r.canonicalize();
            return r;
        } else {
            return f.leading_coeff();
        }
    }

    /* Divides p and rem by their common content; returns the divisor. */
    mpz_class shrink(Poly& p, Poly& rem)
    {
        if constexpr (std::is_same_v<C, mpz_class>) {
            mpz_class g = 0;
            for (const auto* part : {&p, &rem})
                for (const auto& t : *part) {
                    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
                    if (g == 1)
                        return 1;
                }
            if (g == 0 || g == 1)
                return 1;
            for (auto* part : {&p, &rem})
                for (auto& t : *part)
                    mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), g.get_mpz_t());
            return g;
        } else {
            return 1;
        }
    }

    std::vector<Reducer> active_reducers() const
    {
        std::vector<Reducer> out;
        for (const auto& e : entries_)
            if (e.active)
                out.push_back(Reducer{&e.poly, e.sugar});
        return out;
    }

    Poly spoly(const Pair& pr)
    {
        const Poly& f = entries_[pr.i].poly;
        const Poly& g = entries_[pr.j].poly;
        Monomial mf = pr.lcm / f.front().mono;
        Poly a;
        a.reserve(f.size());
        for (const auto& t : f)
            a.push_back({t.mono * mf, t.coeff});
        Poly none;
        arith_.step(a, none, g, pr.lcm / g.front().mono, ord_);
        return a;
    }

    Pair make_pair(std::size_t i, std::size_t j) const
    {
        const Monomial& mi = entries_[i].poly.front().mono;
        const Monomial& mj = entries_[j].poly.front().mono;
        Monomial l = mi.lcm(mj);
        unsigned s = std::max(entries_[i].sugar + l.degree() - mi.degree(), entries_[j].sugar + l.degree() - mj.degree());
        return Pair{i, j, l, s};
    }

    /* Gebauer-Moeller update; returns true if h is a unit. */
    bool add(Poly h, unsigned sugar)
    {
        if (h.size() == 1 && h.front().mono.is_one())
            return true;
        const std::size_t hi = entries_.size();
        entries_.push_back(Entry{std::move(h), sugar, true});
        const Monomial lh = entries_[hi].poly.front().mono;

        std::vector<Pair> fresh;
        for (std::size_t g = 0; g < hi; ++g)
            if (entries_[g].active)
                fresh.push_back(make_pair(g, hi));

        std::vector<Pair> kept;
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            const Pair& p = fresh[a];
            bool disjoint = entries_[p.i].poly.front().mono.coprime(lh);
            bool keep = true;
            if (!disjoint) {
                for (std::size_t b = a + 1; b < fresh.size() && keep; ++b)
                    if (fresh[b].lcm.divides(p.lcm))
                        keep = false;
                for (const auto& q : kept)
                    if (keep && q.lcm.divides(p.lcm))
                        keep = false;
            }
            if (keep)
                kept.push_back(p);
        }
        std::erase_if(kept, [&](const Pair& p) { return entries_[p.i].poly.front().mono.coprime(lh); });

        std::erase_if(pairs_, [&](const Pair& p) {
            if (!lh.divides(p.lcm))
                return false;
            Monomial l1 = entries_[p.i].poly.front().mono.lcm(lh);
            Monomial l2 = entries_[p.j].poly.front().mono.lcm(lh);
            return !(l1 == p.lcm) && !(l2 == p.lcm);
        });
        pairs_.insert(pairs_.end(), kept.begin(), kept.end());

        for (std::size_t g = 0; g < hi; ++g)
            if (entries_[g].active && lh.divides(entries_[g].poly.front().mono))
                entries_[g].active = false;
        return false;
    }

    std::vector<Polynomial> finish()
    {
        std::vector<std::size_t> live;
        for (std::size_t i = 0; i < entries_.size(); ++i)
            if (entries_[i].active)
                live.push_back(i);
        std::vector<Polynomial> out;
        for (std::size_t i : live) {
            std::vector<Reducer> others;
            for (std::size_t j : live)
                if (j != i)
                    others.push_back(Reducer{&entries_[j].poly, entries_[j].sugar});
            Poly g = entries_[i].poly;
            Poly tail(std::make_move_iterator(g.begin() + 1), std::make_move_iterator(g.end()));
            Rational scale = 1;
            Poly reduced = full_reduce(std::move(tail), others, nullptr, &scale);
            Rational lc;
            if constexpr (std::is_same_v<C, mpz_class>)
                lc = Rational(g.front().coeff);
            else
                lc = Rational(static_cast<unsigned long>(g.front().coeff));
            Polynomial full = Polynomial::monomial(ring_, g.front().mono, lc) + arith_.export_scaled(reduced, 1 / scale, ring_);
            out.push_back(full.monic());
        }
        std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
            return ord_.compare(a.leading_monomial(), b.leading_monomial()) < 0;
        });
        return out;
    }

    RingContext ring_;
    Arith arith_;
    Ordering ord_;
    std::vector<Entry> entries_;
    std::vector<Pair> pairs_;
    StepCounter counter_;
};

} // namespace

StepBudget::StepBudget(std::uint64_t limit) : previous_(t_step_limit)
{
    t_step_limit = limit;
}

StepBudget::~StepBudget()
{
    t_step_limit = previous_;
}

std::uint64_t StepBudget::current()
{
    return t_step_limit;
}

std::vector<Polynomial> buchberger(std::span<const Polynomial> gens)
{
    if (gens.empty())
        return {};
    const RingContext& ring = gens.front().ring();
    if (ring.field().is_rationals())
        return Engine<ZArith>(ring).run(gens);
    return Engine<FpArith>(ring).run(gens);
}

Polynomial reduce(const Polynomial& f, std::span<const Polynomial> basis)
{
    const RingContext& ring = f.ring();
    if (ring.field().is_rationals())
        return Engine<ZArith>(ring).normal_form(f, basis);
    return Engine<FpArith>(ring).normal_form(f, basis);
}

bool is_groebner_basis(std::span<const Polynomial> basis)
{
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            const Polynomial& f = basis[i];
            const Polynomial& g = basis[j];
            if (f.leading_monomial().coprime(g.leading_monomial()))
                continue;
            Monomial l = f.leading_monomial().lcm(g.leading_monomial());
            const Field& k = f.ring().field();
            Polynomial a = f.mul_term(l / f.leading_monomial(), k.inv(f.leading_coeff()));
            Polynomial s = a.sub_mul(k.inv(g.leading_coeff()), l / g.leading_monomial(), g);
            if (!reduce(s, basis).is_zero())
                return false;
        }
    return true;
}

} // namespace icl
