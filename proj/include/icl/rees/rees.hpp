#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "icl/groebner/ideal.hpp"

namespace icl {

inline constexpr unsigned kDefaultReductionCap = 6;
inline constexpr long kDefaultGenericBound = 10'000;

/* Defining ideal of R[It] in k[vars, T1..Tn], Ti -> a_i t. */
Ideal rees_presentation(const Ideal& I);

/* Yes(n): least n <= cap with I^{n+1} = U I^n. Otherwise NoUpTo(cap). */
struct ReductionResult {
    bool found = false;
    unsigned n = 0;
    unsigned cap = 0;

    std::string to_string() const;
};

ReductionResult is_reduction(const Ideal& U, const Ideal& I, unsigned cap = kDefaultReductionCap);

/* Integral(n): f^{n+1} lies in I (I, f)^n (+ modulo), a certificate that f is
 * integral over I (over I + modulo, in R/modulo). UnknownUpTo(cap) is not a
 * disproof. */
struct IntegralityResult {
    bool integral = false;
    unsigned n = 0;
    unsigned cap = 0;

    std::string to_string() const;
};

IntegralityResult is_integral_element(const Polynomial& f, const Ideal& I, unsigned cap = kDefaultReductionCap);
IntegralityResult is_integral_element(const Polynomial& f, const Ideal& I, const Ideal& modulo, unsigned cap);

/* Length of (R/J) localized at the origin, by stabilization of
 * lambda(R/(J + m^N)). nullopt when the length exceeds `cap` (including
 * when the origin is not an isolated point of V(J)). */
std::optional<long> local_length_at_origin(const Ideal& J, long cap);

/* Hilbert-Samuel multiplicity of an m-primary ideal of k[x,y]: minimum over
 * `trials` random pairs of combinations of the generators of their local
 * length. Throws NotMPrimary. */
long multiplicity_2d(const Ideal& I, int trials, std::uint64_t seed);

/* Certifies m-primary: returns N with x_i^N in I for all i (N = colength),
 * or throws NotMPrimary. */
long certify_m_primary(const Ideal& I);

struct GenericExtension {
    enum class Mode { Symbolic, Random };

    RingContext base_ring;
    RingContext ring; // base ring, plus z1..zn in symbolic mode
    std::size_t z_count = 0;
    Mode mode = Mode::Random;
    std::uint64_t seed = 0;
    long bound = kDefaultGenericBound;
    std::vector<Rational> draws; // random mode
    Polynomial element;

    GenericExtension() : base_ring(std::vector<std::string>{}, Field::rationals()), ring(base_ring), element(ring) {}
};

GenericExtension generic_element(const Ideal& I, GenericExtension::Mode mode, std::uint64_t seed,
                                 long bound = kDefaultGenericBound);

/* Fresh variable names "<stem>1".."<stem>n" that do not clash with `ring`. */
std::vector<std::string> fresh_names(const RingContext& ring, const std::string& stem, std::size_t n);

} // namespace icl
