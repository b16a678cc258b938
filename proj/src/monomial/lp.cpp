#include "icl/monomial/lp.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace icl::lp {

namespace {

/* Scale so the largest |coefficient| (including b) is 1; makes duplicates
 * comparable. */
void normalize(Inequality& q)
{
    Rational m = abs(q.b);
    for (const auto& c : q.a)
        m = std::max(m, Rational(abs(c)));
    if (m == 0 || m == 1)
        return;
    for (auto& c : q.a)
        c /= m;
    q.b /= m;
}

struct Key {
    std::vector<Rational> a;
    Rational b;
    bool strict;
    friend bool operator<(const Key& x, const Key& y)
    {
        if (x.strict != y.strict)
            return x.strict < y.strict;
        if (x.a != y.a)
            return std::lexicographical_compare(x.a.begin(), x.a.end(), y.a.begin(), y.a.end());
        return x.b < y.b;
    }
};

void dedupe(std::vector<Inequality>& sys)
{
    std::set<Key> seen;
    std::vector<Inequality> out;
    for (auto& q : sys) {
        normalize(q);
        if (seen.insert(Key{q.a, q.b, q.strict}).second)
            out.push_back(std::move(q));
    }
    sys = std::move(out);
}

} // namespace

bool fourier_motzkin_feasible(std::vector<Inequality> system, std::size_t nvars)
{
    for (std::size_t k = 0; k < nvars; ++k) {
        std::vector<Inequality> pos, neg, next;
        for (auto& q : system) {
            int s = sgn(q.a[k]);
            if (s > 0)
                pos.push_back(std::move(q));
            else if (s < 0)
                neg.push_back(std::move(q));
            else
                next.push_back(std::move(q));
        }
        for (const auto& p : pos)
            for (const auto& n : neg) {
                // p.a[k] > 0 > n.a[k]: combine (-n.a[k]) * p + p.a[k] * n.
                Rational cp = -n.a[k];
                Rational cn = p.a[k];
                Inequality r;
                r.a.resize(p.a.size());
                for (std::size_t j = 0; j < p.a.size(); ++j)
                    r.a[j] = cp * p.a[j] + cn * n.a[j];
                r.a[k] = 0;
                r.b = cp * p.b + cn * n.b;
                r.strict = p.strict || n.strict;
                next.push_back(std::move(r));
            }
        dedupe(next);
        system = std::move(next);
    }
    for (const auto& q : system) {
        if (q.strict ? !(q.b > 0) : !(q.b >= 0))
            return false;
    }
    return true;
}

bool simplex_feasible(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b)
{
    const std::size_t m = A.size();
    if (m == 0)
        return true;
    const std::size_t n = A.front().size();
    // Tableau over columns: n structural, m artificial, then rhs.
    const std::size_t cols = n + m + 1;
    std::vector<std::vector<Rational>> T(m, std::vector<Rational>(cols));
    for (std::size_t i = 0; i < m; ++i) {
        bool flip = b[i] < 0;
        for (std::size_t j = 0; j < n; ++j)
            T[i][j] = flip ? Rational(-A[i][j]) : A[i][j];
        T[i][n + i] = 1;
        T[i][cols - 1] = flip ? Rational(-b[i]) : b[i];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i)
        basis[i] = n + i;

    // Objective: minimize the sum of artificials; reduced costs row.
    std::vector<Rational> z(cols);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (j < n || j == cols - 1)
                z[j] -= T[i][j];

    for (;;) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j + 1 < cols; ++j)
            if (z[j] < 0) {
                enter = j;
                break;
            }
        if (enter == cols)
            break;
        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (T[i][enter] <= 0)
                continue;
            Rational ratio = T[i][cols - 1] / T[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m)
            break; // unbounded in phase one cannot happen; defensive
        Rational piv = T[leave][enter];
        for (auto& c : T[leave])
            c /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || T[i][enter] == 0)
                continue;
            Rational f = T[i][enter];
            for (std::size_t j = 0; j < cols; ++j)
                T[i][j] -= f * T[leave][j];
        }
        if (z[enter] != 0) {
            Rational f = z[enter];
            for (std::size_t j = 0; j < cols; ++j)
                z[j] -= f * T[leave][j];
        }
        basis[leave] = enter;
    }
    return z[cols - 1] == 0;
}

} // namespace icl::lp
