#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "icl/poly/polynomial.hpp"

namespace icl {

inline constexpr std::uint64_t kDefaultStepBudget = 1'000'000;

/* Per-thread limit on reduction steps for one Groebner basis computation.
 * Scoped: the previous limit is restored on destruction. */
class StepBudget {
  public:
    explicit StepBudget(std::uint64_t limit);
    ~StepBudget();
    StepBudget(const StepBudget&) = delete;
    StepBudget& operator=(const StepBudget&) = delete;

    static std::uint64_t current();

  private:
    std::uint64_t previous_;
};

/* Reduced Groebner basis of the ideal generated by `gens`, for the order of
 * their ring; monic, sorted by ascending leading monomial. Throws
 * BudgetExceeded when the reduction-step budget runs out. */
std::vector<Polynomial> buchberger(std::span<const Polynomial> gens);

/* Full normal form (leading and tail terms) of f by `basis`. */
Polynomial reduce(const Polynomial& f, std::span<const Polynomial> basis);

/* True if every S-pair of `basis` reduces to zero. */
bool is_groebner_basis(std::span<const Polynomial> basis);

} // namespace icl
