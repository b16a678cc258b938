#include "icl/monomial/monomial_ideal.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "icl/error.hpp"
#include "icl/monomial/lp.hpp"

namespace icl {

namespace {

constexpr std::size_t kFourierMotzkinMaxDim = 4;

std::vector<ExpVec> minimize(std::vector<ExpVec> gens)
{
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<ExpVec> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
            if (i != j && dominated(gens[j], gens[i]))
                redundant = true;
        if (!redundant)
            out.push_back(gens[i]);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

void require_same(const MonomialIdeal& I, const MonomialIdeal& J)
{
    if (!I.ring().same_ring(J.ring()))
        raise(ErrorKind::RingMismatch, "monomial ideals over different rings");
}

/* Some w >= 0, sum w = 1, with w.(n g - v) > 0 for every generator g. */
bool separated_fm(std::span<const int> v, const std::vector<ExpVec>& gens, unsigned n)
{
    const std::size_t d = v.size();
    const std::size_t k = d - 1;
    std::vector<lp::Inequality> sys;
    for (const auto& g : gens) {
        lp::Inequality q;
        q.a.resize(k);
        long last = long(n) * g[d - 1] - v[d - 1];
        for (std::size_t j = 0; j < k; ++j)
            q.a[j] = (long(n) * g[j] - v[j]) - last;
        q.b = last;
        q.strict = true;
        sys.push_back(std::move(q));
    }
    for (std::size_t j = 0; j < k; ++j) {
        lp::Inequality q;
        q.a.assign(k, 0);
        q.a[j] = 1;
        sys.push_back(std::move(q));
    }
    lp::Inequality rest;
    rest.a.assign(k, -1);
    rest.b = 1;
    sys.push_back(std::move(rest));
    return lp::fourier_motzkin_feasible(std::move(sys), k);
}

/* Some lambda >= 0, sum lambda = n, sum lambda_i g_i <= v. */
bool inside_simplex(std::span<const int> v, const std::vector<ExpVec>& gens, unsigned n)
{
    const std::size_t d = v.size();
    const std::size_t m = gens.size();
    std::vector<std::vector<Rational>> A(d + 1, std::vector<Rational>(m + d));
    std::vector<Rational> b(d + 1);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < m; ++i)
            A[j][i] = gens[i][j];
        A[j][m + j] = 1;
        b[j] = v[j];
    }
    for (std::size_t i = 0; i < m; ++i)
        A[d][i] = 1;
    b[d] = n;
    return lp::simplex_feasible(A, b);
}

} // namespace

bool dominated(std::span<const int> a, std::span<const int> b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

MonomialIdeal::MonomialIdeal(RingContext ring, std::vector<ExpVec> gens) : ring_(std::move(ring))
{
    for (const auto& g : gens) {
        if (g.size() != ring_.nvars())
            raise(ErrorKind::ArityMismatch, "exponent vector of length " + std::to_string(g.size()) + " in " +
                                                std::to_string(ring_.nvars()) + " variables");
        for (int e : g)
            if (e < 0)
                raise(ErrorKind::BadCoefficient, "negative exponent");
    }
    gens_ = minimize(std::move(gens));
}

MonomialIdeal MonomialIdeal::from_ideal(const Ideal& I)
{
    std::vector<ExpVec> gens;
    for (const auto& g : I.groebner_basis()) {
        if (!g.is_monomial())
            raise(ErrorKind::Unsupported, I.to_string() + " is not a monomial ideal");
        gens.push_back(g.leading_monomial().exponents());
    }
    return MonomialIdeal(I.ring(), std::move(gens));
}

MonomialIdeal MonomialIdeal::maximal_power(const RingContext& ring, unsigned r)
{
    std::vector<ExpVec> gens;
    const std::size_t d = ring.nvars();
    ExpVec cur(d, 0);
    std::function<void(std::size_t, int)> walk = [&](std::size_t i, int left) {
        if (i + 1 == d) {
            cur[i] = left;
            gens.push_back(cur);
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[i] = e;
            walk(i + 1, left - e);
        }
    };
    if (d > 0)
        walk(0, static_cast<int>(r));
    return MonomialIdeal(ring, std::move(gens));
}

bool MonomialIdeal::is_unit() const
{
    return std::any_of(gens_.begin(), gens_.end(),
                       [](const ExpVec& g) { return std::all_of(g.begin(), g.end(), [](int e) { return e == 0; }); });
}

bool MonomialIdeal::contains(std::span<const int> v) const
{
    return std::any_of(gens_.begin(), gens_.end(), [&](const ExpVec& g) { return dominated(g, v); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const
{
    require_same(*this, other);
    return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const ExpVec& g) { return contains(g); });
}

bool MonomialIdeal::is_m_primary() const
{
    for (std::size_t i = 0; i < dim(); ++i) {
        bool found = false;
        for (const auto& g : gens_) {
            bool pure = true;
            for (std::size_t j = 0; j < dim() && pure; ++j)
                pure = j == i || g[j] == 0;
            if (pure) {
                found = true;
                break;
            }
        }
        if (!found)
            return false;
    }
    return true;
}

unsigned MonomialIdeal::order() const
{
    if (gens_.empty())
        raise(ErrorKind::ZeroIdeal, "order of the zero ideal");
    unsigned best = ~0u;
    for (const auto& g : gens_)
        best = std::min(best, static_cast<unsigned>(std::accumulate(g.begin(), g.end(), 0)));
    return best;
}

long MonomialIdeal::colength() const
{
    if (!is_m_primary())
        raise(ErrorKind::NotMPrimary, to_string() + " is not primary to the maximal ideal");
    std::vector<int> bound(dim(), 0);
    for (const auto& g : gens_)
        for (std::size_t i = 0; i < dim(); ++i)
            bound[i] = std::max(bound[i], g[i]);
    long count = 0;
    ExpVec cur(dim(), 0);
    std::function<void(std::size_t)> walk = [&](std::size_t i) {
        if (i == dim()) {
            count += contains(cur) ? 0 : 1;
            return;
        }
        for (int e = 0; e < bound[i]; ++e) {
            cur[i] = e;
            walk(i + 1);
        }
        cur[i] = 0;
    };
    walk(0);
    return count;
}

Ideal MonomialIdeal::to_ideal() const
{
    std::vector<Polynomial> polys;
    for (const auto& g : gens_)
        polys.push_back(Polynomial::monomial(ring_, Monomial(std::span<const int>(g))));
    return Ideal(ring_, std::move(polys));
}

std::string MonomialIdeal::to_string() const
{
    return to_ideal().to_string();
}

MonomialIdeal monomial_product(const MonomialIdeal& I, const MonomialIdeal& J)
{
    require_same(I, J);
    std::vector<ExpVec> gens;
    for (const auto& a : I.gens())
        for (const auto& b : J.gens()) {
            ExpVec c(a.size());
            for (std::size_t i = 0; i < a.size(); ++i)
                c[i] = a[i] + b[i];
            gens.push_back(std::move(c));
        }
    return MonomialIdeal(I.ring(), std::move(gens));
}

MonomialIdeal monomial_power(const MonomialIdeal& I, unsigned n)
{
    MonomialIdeal out(I.ring(), {ExpVec(I.dim(), 0)});
    for (unsigned i = 0; i < n; ++i)
        out = monomial_product(out, I);
    return out;
}

MonomialIdeal monomial_sum(const MonomialIdeal& I, const MonomialIdeal& J)
{
    require_same(I, J);
    std::vector<ExpVec> gens = I.gens();
    gens.insert(gens.end(), J.gens().begin(), J.gens().end());
    return MonomialIdeal(I.ring(), std::move(gens));
}

MonomialIdeal monomial_intersect(const MonomialIdeal& I, const MonomialIdeal& J)
{
    require_same(I, J);
    std::vector<ExpVec> gens;
    for (const auto& a : I.gens())
        for (const auto& b : J.gens()) {
            ExpVec c(a.size());
            for (std::size_t i = 0; i < a.size(); ++i)
                c[i] = std::max(a[i], b[i]);
            gens.push_back(std::move(c));
        }
    return MonomialIdeal(I.ring(), std::move(gens));
}

bool np_membership(std::span<const int> v, const MonomialIdeal& I, unsigned n)
{
    return np_membership(v, I, n, LpMethod::Auto);
}

bool np_membership(std::span<const int> v, const MonomialIdeal& I, unsigned n, LpMethod method)
{
    if (v.size() != I.dim())
        raise(ErrorKind::ArityMismatch, "exponent vector length does not match the ring");
    if (I.is_zero())
        return false;
    if (n == 0)
        return true;
    for (const auto& g : I.gens()) {
        bool fits = true;
        for (std::size_t j = 0; j < v.size() && fits; ++j)
            fits = long(n) * g[j] <= v[j];
        if (fits)
            return true;
    }
    if (I.dim() == 1)
        return false;
    if (method == LpMethod::Auto)
        method = I.dim() <= kFourierMotzkinMaxDim ? LpMethod::FourierMotzkin : LpMethod::Simplex;
    if (method == LpMethod::FourierMotzkin)
        return !separated_fm(v, I.gens(), n);
    return inside_simplex(v, I.gens(), n);
}

MonomialIdeal monomial_closure_power(const MonomialIdeal& I, unsigned n)
{
    if (I.is_zero())
        raise(ErrorKind::ZeroIdeal, "closure of the zero ideal");
    const std::size_t d = I.dim();
    if (n == 0 || I.is_unit())
        return MonomialIdeal(I.ring(), {ExpVec(d, 0)});

    std::vector<int> bound(d, 0);
    for (const auto& g : I.gens())
        for (std::size_t i = 0; i < d; ++i)
            bound[i] = std::max(bound[i], static_cast<int>(n) * g[i]);

    std::vector<ExpVec> points;
    ExpVec cur(d, 0);
    std::function<void(std::size_t)> walk = [&](std::size_t i) {
        if (i == d) {
            points.push_back(cur);
            return;
        }
        for (int e = 0; e <= bound[i]; ++e) {
            cur[i] = e;
            walk(i + 1);
        }
    };
    walk(0);
    std::stable_sort(points.begin(), points.end(), [](const ExpVec& a, const ExpVec& b) {
        return std::accumulate(a.begin(), a.end(), 0) < std::accumulate(b.begin(), b.end(), 0);
    });

    std::vector<ExpVec> found;
    for (const auto& p : points) {
        bool covered = std::any_of(found.begin(), found.end(), [&](const ExpVec& f) { return dominated(f, p); });
        if (covered)
            continue;
        if (np_membership(p, I, n))
            found.push_back(p);
    }
    return MonomialIdeal(I.ring(), std::move(found));
}

bool is_monomial_closed(const MonomialIdeal& I)
{
    if (I.is_zero() || I.is_unit())
        return true;
    return monomial_closure_power(I, 1) == I;
}

} // namespace icl
