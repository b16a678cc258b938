#pragma once

// Hand-rolled generators for property-style tests.

#include <vector>

#include "icl/poly/polynomial.hpp"
#include "icl/util/rng.hpp"

namespace icl::testing {

inline Polynomial random_polynomial(const RingContext& ring, Rng& rng, int max_terms = 4, int max_exp = 3,
                                    long coeff_bound = 5)
{
    std::vector<Term> terms;
    int n = static_cast<int>(rng.uniform(0, max_terms));
    for (int i = 0; i < n; ++i) {
        Monomial m(ring.nvars());
        for (std::size_t v = 0; v < ring.nvars(); ++v)
            m.set(v, static_cast<unsigned>(rng.uniform(0, max_exp)));
        long num = rng.uniform(-coeff_bound, coeff_bound);
        long den = rng.uniform(1, 3);
        terms.push_back(Term{m, Rational(num, den)});
        terms.back().coeff.canonicalize();
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

inline Polynomial random_nonzero_polynomial(const RingContext& ring, Rng& rng, int max_terms = 4, int max_exp = 3)
{
    while (true) {
        auto p = random_polynomial(ring, rng, max_terms, max_exp);
        if (!p.is_zero())
            return p;
    }
}

/* Random monomial exponent vectors, each coordinate in [0, max_exp]. */
inline std::vector<std::vector<int>> random_exponents(Rng& rng, std::size_t dim, int count, int max_exp)
{
    std::vector<std::vector<int>> out;
    for (int i = 0; i < count; ++i) {
        std::vector<int> v(dim);
        for (auto& e : v)
            e = static_cast<int>(rng.uniform(0, max_exp));
        out.push_back(v);
    }
    return out;
}

} // namespace icl::testing
