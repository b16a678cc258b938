#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "icl/groebner/ideal.hpp"
#include "icl/rees/rees.hpp"
#include "icl/verify/report.hpp"

namespace icl {

inline constexpr long kDegreeSlack = 6;

struct VerifyCaps {
    unsigned reduction_cap = kDefaultReductionCap;
    long degree_bound = -1; // candidate degree; negative means o(closure) + kDegreeSlack
};

/* seed and one derived from it. */
std::vector<std::uint64_t> default_seeds(std::uint64_t seed);

/*
 * closure(I^{n+1}) ∩ I^n == closure(I) I^n for n = 0..n_max, where
 * I = (x1^a1, .., xg^ag). Closures by the Newton polyhedron, intersections
 * and products by Groebner bases.
 */
VerificationReport verify_itoh(const std::vector<int>& exponents, unsigned n_max);

/*
 * For each seed, x = sum z_i a_i with drawn z. Every generator of the
 * closure must be certified integral over I modulo (x); no monomial of
 * degree <= D outside closure(I) + (x) may be. I must be monomial or
 * m-primary in two variables. Throws HeightTooSmall, GenericityFailure
 * (the seeds disagree on a certificate).
 */
VerificationReport verify_specialization(const Ideal& I, const std::vector<std::uint64_t>& seeds,
                                         const VerifyCaps& caps = {});

/*
 * sqrt((x)) inside closure(I) for x = sum z_i a_i. With `draws` the z are
 * taken as given instead of drawn from `seed`. No certificate for the
 * squarefree part of x is INCONCLUSIVE: the draw is not generic for I.
 */
VerificationReport verify_radical(const Ideal& I, std::uint64_t seed, const VerifyCaps& caps = {},
                                  const std::optional<std::vector<Rational>>& draws = std::nullopt);

/* closure(I) closure(J) closed for `count` seeded pairs of m-primary ideals
 * of k[x,y]: monomial ideals with exponents <= 4, some moved by x -> x + c y^k. */
VerificationReport verify_product_closure(std::size_t count, std::uint64_t seed, unsigned threads = 0);

/* The ideal drawn for pair slot `index` (exposed for tests and the CLI). */
Ideal sample_product_ideal(const RingContext& ring, std::uint64_t seed, std::size_t index);

} // namespace icl
