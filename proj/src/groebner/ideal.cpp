#include "icl/groebner/ideal.hpp"

#include <algorithm>
#include <functional>

#include "icl/error.hpp"
#include "icl/groebner/buchberger.hpp"

namespace icl {

namespace {

const char* const kTagVariable = "@s";

std::vector<Polynomial> convert_all(const std::vector<Polynomial>& polys, const RingContext& ring)
{
    std::vector<Polynomial> out;
    out.reserve(polys.size());
    for (const auto& p : polys)
        out.push_back(p.with_ring(ring));
    return out;
}

void require_same(const Ideal& I, const Ideal& J)
{
    if (!I.ring().same_ring(J.ring()))
        raise(ErrorKind::RingMismatch, "ideals over different rings: " + I.ring().to_string() + " vs " +
                                           J.ring().to_string());
}

bool all_monomial(const std::vector<Polynomial>& gens)
{
    return std::all_of(gens.begin(), gens.end(), [](const Polynomial& p) { return p.is_monomial(); });
}

/* Monic, deduplicated; monomial generator lists are also made minimal. */
std::vector<Polynomial> tidy(std::vector<Polynomial> gens)
{
    std::vector<Polynomial> out;
    for (auto& g : gens) {
        if (g.is_zero())
            continue;
        Polynomial m = g.monic();
        if (std::find(out.begin(), out.end(), m) == out.end())
            out.push_back(std::move(m));
    }
    if (!out.empty() && all_monomial(out)) {
        std::vector<Polynomial> minimal;
        for (std::size_t i = 0; i < out.size(); ++i) {
            bool redundant = false;
            for (std::size_t j = 0; j < out.size() && !redundant; ++j) {
                if (i == j)
                    continue;
                const Monomial& a = out[j].leading_monomial();
                const Monomial& b = out[i].leading_monomial();
                if (a.divides(b) && (!(a == b) || j < i))
                    redundant = true;
            }
            if (!redundant)
                minimal.push_back(out[i]);
        }
        out = std::move(minimal);
    }
    return out;
}

/* Ring with `front` variables first (in the given order), then the rest of
 * `ring`'s variables, under the block order with |front| leading. */
RingContext reorder_front(const RingContext& ring, const std::vector<std::string>& front)
{
    std::vector<std::string> vars = front;
    for (const auto& v : ring.variables())
        if (std::find(front.begin(), front.end(), v) == front.end())
            vars.push_back(v);
    return RingContext(std::move(vars), ring.field(), MonomialOrder::elimination(front.size()));
}

bool involves_first(const Monomial& m, std::size_t k)
{
    for (std::size_t i = 0; i < k; ++i)
        if (m[i] != 0)
            return true;
    return false;
}

} // namespace

Ideal::Ideal(RingContext ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>())
{
    for (auto& g : generators) {
        if (g.is_zero())
            continue;
        if (!g.ring().identical(ring_)) {
            if (!g.ring().same_ring(ring_))
                raise(ErrorKind::RingMismatch, "generator " + g.to_string() + " is not in " + ring_.to_string());
            g = g.with_ring(ring_);
        }
        gens_.push_back(std::move(g));
    }
}

Ideal Ideal::parse(std::string_view text, const RingContext& ring)
{
    return Ideal(ring, parse_polynomial_list(text, ring));
}

Ideal Ideal::unit(const RingContext& ring)
{
    return Ideal(ring, {Polynomial::constant(ring, 1)});
}

const std::vector<Polynomial>& Ideal::groebner_basis() const
{
    return groebner_basis(ring_.order());
}

const std::vector<Polynomial>& Ideal::groebner_basis(const MonomialOrder& order) const
{
    const std::string key = order.to_string();
    {
        std::lock_guard lock(cache_->mutex);
        auto it = cache_->bases.find(key);
        if (it != cache_->bases.end())
            return *it->second;
    }
    RingContext target = ring_.with_order(order);
    auto basis = std::make_shared<const std::vector<Polynomial>>(buchberger(convert_all(gens_, target)));
    std::lock_guard lock(cache_->mutex);
    auto [it, inserted] = cache_->bases.emplace(key, std::move(basis));
    return *it->second;
}

bool Ideal::is_unit() const
{
    const auto& gb = groebner_basis();
    return gb.size() == 1 && gb.front().is_unit();
}

Ideal Ideal::with_ring(const RingContext& ring) const
{
    if (!ring.same_ring(ring_))
        raise(ErrorKind::RingMismatch, "cannot move ideal from " + ring_.to_string() + " to " + ring.to_string());
    return Ideal(ring, convert_all(gens_, ring));
}

std::string Ideal::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i)
            out += ", ";
        out += gens_[i].to_string();
    }
    if (gens_.empty())
        out += "0";
    return out + ")";
}

std::vector<Polynomial> groebner_basis(const Ideal& I, const MonomialOrder& order)
{
    return I.groebner_basis(order);
}

Polynomial normal_form(const Polynomial& f, const Ideal& I)
{
    if (!f.ring().same_ring(I.ring()))
        raise(ErrorKind::RingMismatch, "polynomial and ideal over different rings");
    Polynomial g = f.with_ring(I.ring());
    const auto& gb = I.groebner_basis();
    return reduce(g, gb);
}

bool ideal_member(const Polynomial& f, const Ideal& I)
{
    if (f.is_zero())
        return true;
    return normal_form(f, I).is_zero();
}

bool ideal_contains(const Ideal& I, const Ideal& J)
{
    require_same(I, J);
    for (const auto& g : J.generators())
        if (!ideal_member(g, I))
            return false;
    return true;
}

bool ideal_equal(const Ideal& I, const Ideal& J)
{
    require_same(I, J);
    const auto& a = I.groebner_basis();
    const auto b = convert_all(J.with_ring(I.ring()).groebner_basis(), I.ring());
    return a == b;
}

Ideal ideal_sum(const Ideal& I, const Ideal& J)
{
    require_same(I, J);
    auto gens = I.generators();
    for (const auto& g : J.generators())
        gens.push_back(g.with_ring(I.ring()));
    return Ideal(I.ring(), tidy(std::move(gens)));
}

Ideal ideal_product(const Ideal& I, const Ideal& J)
{
    require_same(I, J);
    std::vector<Polynomial> gens;
    for (const auto& a : I.generators())
        for (const auto& b : J.generators())
            gens.push_back(a * b.with_ring(I.ring()));
    return Ideal(I.ring(), tidy(std::move(gens)));
}

Ideal ideal_power(const Ideal& I, unsigned n)
{
    Ideal out = Ideal::unit(I.ring());
    for (unsigned i = 0; i < n; ++i)
        out = i == 0 ? Ideal(I.ring(), tidy(I.generators())) : ideal_product(out, I);
    return out;
}

Ideal ideal_combine(const Ideal& I, const Ideal& J, CombineOp op, unsigned n)
{
    switch (op) {
    case CombineOp::Sum:
        return ideal_sum(I, J);
    case CombineOp::Product:
        return ideal_product(I, J);
    case CombineOp::Power:
        return ideal_power(I, n);
    }
    raise(ErrorKind::Unsupported, "unknown combine operation");
}

RingContext extend_ring_front(const RingContext& ring, const std::vector<std::string>& extra, MonomialOrder order)
{
    std::vector<std::string> vars = extra;
    vars.insert(vars.end(), ring.variables().begin(), ring.variables().end());
    return RingContext(std::move(vars), ring.field(), order);
}

Polynomial embed_by_name(const Polynomial& f, const RingContext& target)
{
    const RingContext& src = f.ring();
    std::vector<bool> used(src.nvars(), false);
    for (const auto& t : f.terms())
        for (std::size_t i = 0; i < src.nvars(); ++i)
            used[i] = used[i] || t.mono[i] != 0;
    std::vector<std::size_t> slot(src.nvars(), 0);
    for (std::size_t i = 0; i < src.nvars(); ++i)
        if (used[i])
            slot[i] = target.require_index(src.variables()[i]);
    std::vector<Term> terms;
    terms.reserve(f.size());
    for (const auto& t : f.terms()) {
        Monomial m(target.nvars());
        for (std::size_t i = 0; i < src.nvars(); ++i)
            if (used[i])
                m.set(slot[i], t.mono[i]);
        terms.push_back(Term{m, t.coeff});
    }
    return Polynomial::from_terms(target, std::move(terms));
}

Ideal ideal_intersect(const Ideal& I, const Ideal& J)
{
    require_same(I, J);
    const RingContext& ring = I.ring();
    if (I.is_zero() || J.is_zero())
        return Ideal(ring);
    RingContext big = extend_ring_front(ring, {kTagVariable}, MonomialOrder::elimination(1));
    Polynomial s = Polynomial::variable(big, 0);
    Polynomial one_minus_s = Polynomial::constant(big, 1) - s;
    std::vector<Polynomial> gens;
    for (const auto& f : I.generators())
        gens.push_back(s * embed_by_name(f, big));
    for (const auto& g : J.generators())
        gens.push_back(one_minus_s * embed_by_name(g, big));
    auto basis = buchberger(gens);
    std::vector<Polynomial> kept;
    for (auto& b : eliminate_with_basis(basis, {kTagVariable}))
        kept.push_back(embed_by_name(b, ring));
    return Ideal(ring, std::move(kept));
}

Ideal ideal_quotient(const Ideal& I, const Polynomial& g)
{
    const RingContext& ring = I.ring();
    if (g.is_zero())
        return Ideal::unit(ring);
    Polynomial gg = g.with_ring(ring);
    Ideal meet = ideal_intersect(I, Ideal(ring, {gg}));
    std::vector<Polynomial> gens;
    for (const auto& h : meet.generators()) {
        auto q = exact_divide(h, gg);
        if (!q)
            raise(ErrorKind::ZeroDivisor, "intersection generator not divisible by " + gg.to_string());
        gens.push_back(std::move(*q));
    }
    return Ideal(ring, tidy(std::move(gens)));
}

Ideal ideal_quotient(const Ideal& I, const Ideal& J)
{
    require_same(I, J);
    Ideal out = Ideal::unit(I.ring());
    bool first = true;
    for (const auto& g : J.generators()) {
        Ideal q = ideal_quotient(I, g);
        out = first ? q : ideal_intersect(out, q);
        first = false;
    }
    return out;
}

Ideal saturate(const Ideal& I, const Polynomial& g)
{
    Ideal current = I;
    for (;;) {
        Ideal next = ideal_quotient(current, g);
        if (ideal_contains(current, next))
            return current;
        current = next;
    }
}

std::vector<Polynomial> eliminate_with_basis(const std::vector<Polynomial>& basis, const std::set<std::string>& drop)
{
    if (basis.empty())
        return {};
    const RingContext& ring = basis.front().ring();
    const MonomialOrder& order = ring.order();
    const std::size_t k = drop.size();
    bool ok = k <= ring.nvars();
    for (std::size_t i = 0; ok && i < k; ++i)
        ok = drop.count(ring.variables()[i]) == 1;
    ok = ok && (order.kind == MonomialOrder::Kind::Lex || (order.kind == MonomialOrder::Kind::Block && order.block == k));
    if (!ok)
        raise(ErrorKind::OrderMismatch, "order " + order.to_string() + " of " + ring.to_string() +
                                            " does not eliminate the requested variables first");

    std::vector<Polynomial> out;
    for (const auto& b : basis)
        if (!involves_first(b.leading_monomial(), k))
            out.push_back(b);
    return out;
}

Ideal eliminate(const Ideal& I, const std::set<std::string>& drop)
{
    const RingContext& ring = I.ring();
    std::vector<std::string> front;
    for (const auto& v : ring.variables())
        if (drop.count(v))
            front.push_back(v);
    for (const auto& d : drop)
        ring.require_index(d);

    std::vector<std::string> rest;
    for (const auto& v : ring.variables())
        if (!drop.count(v))
            rest.push_back(v);
    MonomialOrder sub_order =
        ring.order().kind == MonomialOrder::Kind::Block ? MonomialOrder::grevlex() : ring.order();
    RingContext sub(rest, ring.field(), sub_order);

    RingContext big = reorder_front(ring, front);
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators())
        gens.push_back(embed_by_name(g, big));
    auto basis = buchberger(gens);
    std::vector<Polynomial> out;
    for (const auto& b : eliminate_with_basis(basis, drop))
        out.push_back(embed_by_name(b, sub));
    return Ideal(sub, std::move(out));
}

int krull_dim(const Ideal& I)
{
    if (I.is_unit())
        raise(ErrorKind::UnitIdeal, "dimension of the unit ideal is undefined");
    const auto& gb = I.groebner_basis();
    const std::size_t n = I.ring().nvars();
    std::vector<std::uint32_t> supports;
    for (const auto& g : gb) {
        std::uint32_t mask = 0;
        const Monomial& m = g.leading_monomial();
        for (std::size_t i = 0; i < n; ++i)
            if (m[i])
                mask |= 1u << i;
        supports.push_back(mask);
    }
    int best = 0;
    std::function<void(std::size_t, std::uint32_t, int)> search = [&](std::size_t i, std::uint32_t set, int size) {
        if (size + static_cast<int>(n - i) <= best)
            return;
        if (i == n) {
            best = size;
            return;
        }
        std::uint32_t with = set | (1u << i);
        bool independent = std::none_of(supports.begin(), supports.end(),
                                        [&](std::uint32_t s) { return (s & ~with) == 0; });
        if (independent)
            search(i + 1, with, size + 1);
        search(i + 1, set, size);
    };
    search(0, 0, 0);
    return best;
}

int ideal_height(const Ideal& I)
{
    return static_cast<int>(I.ring().nvars()) - krull_dim(I);
}

long colength_0dim(const Ideal& I)
{
    const auto& gb = I.groebner_basis();
    const std::size_t n = I.ring().nvars();
    if (gb.size() == 1 && gb.front().is_unit())
        return 0;
    std::vector<unsigned> bound(n, 0);
    for (const auto& g : gb) {
        const Monomial& m = g.leading_monomial();
        std::size_t nonzero = 0, which = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (m[i]) {
                ++nonzero;
                which = i;
            }
        if (nonzero == 1 && (bound[which] == 0 || m[which] < bound[which]))
            bound[which] = m[which];
    }
    for (std::size_t i = 0; i < n; ++i)
        if (bound[i] == 0)
            raise(ErrorKind::NotZeroDimensional, I.to_string() + " is not zero-dimensional");

    long count = 0;
    Monomial cur(n);
    std::function<void(std::size_t)> walk = [&](std::size_t i) {
        if (i == n) {
            ++count;
            return;
        }
        for (unsigned e = 0; e < bound[i]; ++e) {
            cur.set(i, e);
            bool blocked = false;
            for (const auto& g : gb) {
                const Monomial& m = g.leading_monomial();
                bool fits = true;
                for (std::size_t j = 0; j <= i && fits; ++j)
                    fits = m[j] <= cur[j];
                for (std::size_t j = i + 1; j < n && fits; ++j)
                    fits = m[j] == 0;
                if (fits) {
                    blocked = true;
                    break;
                }
            }
            if (blocked)
                break;
            walk(i + 1);
        }
        cur.set(i, 0);
    };
    walk(0);
    return count;
}

Polynomial polynomial_lcm(const Polynomial& f, const Polynomial& g)
{
    const RingContext& ring = f.ring();
    if (f.is_zero() || g.is_zero())
        return Polynomial(ring);
    Ideal meet = ideal_intersect(Ideal(ring, {f}), Ideal(ring, {g.with_ring(ring)}));
    const auto& gb = meet.groebner_basis();
    return gb.front();
}

Polynomial polynomial_gcd(const Polynomial& f, const Polynomial& g)
{
    const RingContext& ring = f.ring();
    if (f.is_zero())
        return g.with_ring(ring).monic();
    if (g.is_zero())
        return f.monic();
    Polynomial l = polynomial_lcm(f, g);
    auto q = exact_divide(f * g.with_ring(ring), l);
    return q->monic();
}

} // namespace icl
