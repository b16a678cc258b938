#include "icl/rlr2/univariate.hpp"

#include <algorithm>

#include "icl/error.hpp"
#include "icl/util/rng.hpp"

namespace icl {

UPoly::UPoly(Field field, std::vector<Rational> coeffs) : field_(field), c_(std::move(coeffs))
{
    for (auto& c : c_)
        c = field_.normalize(c);
    trim();
}

void UPoly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

UPoly UPoly::from_polynomial(const Polynomial& f, std::size_t var)
{
    std::vector<Rational> c;
    for (const auto& t : f.terms()) {
        for (std::size_t i = 0; i < t.mono.size(); ++i)
            if (i != var && t.mono[i] != 0)
                raise(ErrorKind::Unsupported, "polynomial " + f.to_string() + " is not univariate");
        std::size_t e = t.mono[var];
        if (c.size() <= e)
            c.resize(e + 1);
        c[e] = t.coeff;
    }
    return UPoly(f.ring().field(), std::move(c));
}

Polynomial UPoly::to_polynomial(const RingContext& ring, std::size_t var) const
{
    std::vector<Term> terms;
    for (std::size_t e = 0; e < c_.size(); ++e)
        if (c_[e] != 0)
            terms.push_back(Term{Monomial::variable(ring.nvars(), var, static_cast<unsigned>(e)), c_[e]});
    return Polynomial::from_terms(ring, std::move(terms));
}

Rational UPoly::eval(const Rational& x) const
{
    Rational acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;)
        acc = field_.add(field_.mul(acc, x), c_[i]);
    return acc;
}

UPoly UPoly::derivative() const
{
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i)
        d.push_back(field_.mul(c_[i], field_.from_int(static_cast<long>(i))));
    return UPoly(field_, std::move(d));
}

UPoly UPoly::monic() const
{
    if (c_.empty())
        return *this;
    Rational li = field_.inv(c_.back());
    std::vector<Rational> out;
    for (const auto& c : c_)
        out.push_back(field_.mul(c, li));
    return UPoly(field_, std::move(out));
}

UPoly UPoly::operator+(const UPoly& o) const
{
    std::vector<Rational> out(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = field_.add(i < c_.size() ? c_[i] : Rational(0), i < o.c_.size() ? o.c_[i] : Rational(0));
    return UPoly(field_, std::move(out));
}

UPoly UPoly::operator-(const UPoly& o) const
{
    std::vector<Rational> out(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = field_.sub(i < c_.size() ? c_[i] : Rational(0), i < o.c_.size() ? o.c_[i] : Rational(0));
    return UPoly(field_, std::move(out));
}

UPoly UPoly::operator*(const UPoly& o) const
{
    if (c_.empty() || o.c_.empty())
        return UPoly(field_);
    std::vector<Rational> out(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            out[i + j] = field_.add(out[i + j], field_.mul(c_[i], o.c_[j]));
    return UPoly(field_, std::move(out));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const
{
    if (d.is_zero())
        raise(ErrorKind::ZeroDivisor, "division by the zero polynomial");
    std::vector<Rational> r = c_;
    std::vector<Rational> q(c_.size() >= d.c_.size() ? c_.size() - d.c_.size() + 1 : 0);
    Rational li = field_.inv(d.lead());
    for (std::size_t k = q.size(); k-- > 0;) {
        Rational f = field_.mul(r[k + d.c_.size() - 1], li);
        q[k] = f;
        if (f == 0)
            continue;
        for (std::size_t j = 0; j < d.c_.size(); ++j)
            r[k + j] = field_.sub(r[k + j], field_.mul(f, d.c_[j]));
    }
    return {UPoly(field_, std::move(q)), UPoly(field_, std::move(r))};
}

std::string UPoly::to_string(const std::string& var) const
{
    RingContext ring(std::vector<std::string>{var}, field_);
    return to_polynomial(ring, 0).to_string();
}

UPoly upoly_gcd(UPoly a, UPoly b)
{
    while (!b.is_zero()) {
        UPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

UPoly squarefree_part(const UPoly& f)
{
    if (f.degree() <= 0)
        return f.monic();
    UPoly d = f.derivative();
    if (d.is_zero()) // only in characteristic p; t^p-type polynomials
        return f.monic();
    UPoly g = upoly_gcd(f, d);
    return f.divmod(g).first.monic();
}

namespace {

/* base^e mod m over the field. */
UPoly powmod(UPoly base, Integer e, const UPoly& m)
{
    UPoly result(base.field(), {Rational(1)});
    base = base.divmod(m).second;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t()))
            result = (result * base).divmod(m).second;
        base = (base * base).divmod(m).second;
        e >>= 1;
    }
    return result;
}

void split_roots(const UPoly& g, Rng& rng, std::vector<Rational>& roots)
{
    if (g.degree() <= 0)
        return;
    if (g.degree() == 1) {
        roots.push_back(g.field().neg(g.monic().coeffs()[0]));
        return;
    }
    const Field& k = g.field();
    const std::uint32_t p = k.characteristic();
    for (;;) {
        Rational delta = k.from_int(rng.uniform(0, static_cast<long>(p) - 1));
        UPoly lin(k, {delta, Rational(1)});
        UPoly h = powmod(lin, Integer((p - 1) / 2), g) - UPoly(k, {Rational(1)});
        UPoly d = upoly_gcd(g, h);
        if (d.degree() > 0 && d.degree() < g.degree()) {
            split_roots(d, rng, roots);
            split_roots(g.divmod(d).first, rng, roots);
            return;
        }
    }
}

std::vector<Rational> prime_field_roots(const UPoly& f)
{
    const Field& k = f.field();
    const std::uint32_t p = k.characteristic();
    std::vector<Rational> roots;
    if (p <= 5000) {
        for (std::uint32_t x = 0; x < p; ++x)
            if (f.eval(Rational(x)) == 0)
                roots.push_back(Rational(x));
        return roots;
    }
    UPoly t(k, {Rational(0), Rational(1)});
    UPoly g = upoly_gcd(f, powmod(t, Integer(p), f) - t);
    Rng rng(p);
    split_roots(g, rng, roots);
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<Integer> integer_coeffs(const UPoly& f)
{
    Integer den = 1;
    for (const auto& c : f.coeffs())
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> out;
    Integer g = 0;
    for (const auto& c : f.coeffs()) {
        out.push_back(c.get_num() * (den / c.get_den()));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
    }
    for (auto& c : out)
        c /= g;
    return out;
}

Integer eval_mod(const std::vector<Integer>& a, const Integer& x, const Integer& m)
{
    Integer acc = 0;
    for (std::size_t i = a.size(); i-- > 0;) {
        acc = acc * x + a[i];
        mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
    }
    return acc;
}

/* n/d with n = d*r mod m and |n|, d <= sqrt(m/2); false if none. */
bool rational_reconstruct(const Integer& r, const Integer& m, Rational& out)
{
    Integer bound;
    Integer half = m / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    Integer r0 = m, r1 = r, s0 = 0, s1 = 1;
    while (r1 > bound) {
        Integer q = r0 / r1;
        Integer r2 = r0 - q * r1;
        Integer s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (s1 == 0 || abs(s1) > bound)
        return false;
    if (s1 < 0) {
        s1 = -s1;
        r1 = -r1;
    }
    out = Rational(r1, s1);
    out.canonicalize();
    return true;
}

std::vector<Rational> rational_roots(const UPoly& sq)
{
    std::vector<Rational> roots;
    UPoly f = sq;
    if (f.coeffs()[0] == 0) {
        roots.push_back(0);
        f = f.divmod(UPoly(f.field(), {Rational(0), Rational(1)})).first;
    }
    if (f.degree() <= 0)
        return roots;
    auto a = integer_coeffs(f);
    std::vector<Integer> da;
    for (std::size_t i = 1; i < a.size(); ++i)
        da.push_back(a[i] * static_cast<unsigned long>(i));
    Integer B = std::max(abs(a.front()), abs(a.back()));
    Integer need = 2 * B * B;

    std::uint32_t p = 1'000'003;
    for (;; p += 2) {
        if (!is_prime(p))
            continue;
        Integer lc = a.back() % p;
        if (lc == 0)
            continue;
        Field Fp = Field::prime(p);
        std::vector<Rational> cm;
        for (const auto& c : a)
            cm.push_back(Rational(c));
        UPoly fp(Fp, cm);
        if (upoly_gcd(fp, fp.derivative()).degree() > 0)
            continue;
        for (const auto& r0 : prime_field_roots(fp)) {
            Integer r = r0.get_num();
            Integer m = p;
            while (m <= need) {
                Integer m2 = m * m;
                Integer fv = eval_mod(a, r, m2);
                Integer dv = eval_mod(da, r, m2);
                Integer inv;
                mpz_invert(inv.get_mpz_t(), dv.get_mpz_t(), m2.get_mpz_t());
                r = r - fv * inv;
                mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m2.get_mpz_t());
                m = m2;
            }
            Rational cand;
            if (rational_reconstruct(r, m, cand) && f.eval(cand) == 0)
                roots.push_back(cand);
        }
        break;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace

RootSplit field_roots(const UPoly& f)
{
    if (f.is_zero())
        raise(ErrorKind::ZeroPolynomial, "roots of the zero polynomial");
    UPoly sq = squarefree_part(f);
    RootSplit out{{}, sq};
    if (sq.degree() <= 0)
        return out;
    out.roots = f.field().is_rationals() ? rational_roots(sq) : prime_field_roots(sq);
    UPoly rest = sq;
    for (const auto& r : out.roots)
        rest = rest.divmod(UPoly(f.field(), {f.field().neg(r), Rational(1)})).first;
    out.rest = rest.monic();
    return out;
}

} // namespace icl
