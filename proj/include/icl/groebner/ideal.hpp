#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "icl/poly/polynomial.hpp"

namespace icl {

/*
 * Ideal given by generators, with a lazily filled cache of reduced Groebner
 * bases keyed by monomial order. Copies share the cache; the generator
 * list never changes after construction.
 */
class Ideal {
  public:
    explicit Ideal(RingContext ring, std::vector<Polynomial> generators = {});
    static Ideal parse(std::string_view text, const RingContext& ring);
    static Ideal unit(const RingContext& ring);

    const RingContext& ring() const noexcept { return ring_; }
    const std::vector<Polynomial>& generators() const noexcept { return gens_; }

    /* Reduced basis for the ring's own order, or for `order`. The basis
     * polynomials live in ring().with_order(order). */
    const std::vector<Polynomial>& groebner_basis() const;
    const std::vector<Polynomial>& groebner_basis(const MonomialOrder& order) const;

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const;

    /* Same ideal, generators expressed for another order of the same ring. */
    Ideal with_ring(const RingContext& ring) const;

    std::string to_string() const;

  private:
    struct Cache {
        std::mutex mutex;
        std::map<std::string, std::shared_ptr<const std::vector<Polynomial>>> bases;
    };

    RingContext ring_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_;
};

std::vector<Polynomial> groebner_basis(const Ideal& I, const MonomialOrder& order);
Polynomial normal_form(const Polynomial& f, const Ideal& I);
bool ideal_member(const Polynomial& f, const Ideal& I);
/* J contained in I. */
bool ideal_contains(const Ideal& I, const Ideal& J);
bool ideal_equal(const Ideal& I, const Ideal& J);

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
Ideal ideal_power(const Ideal& I, unsigned n);

enum class CombineOp { Sum, Product, Power };
Ideal ideal_combine(const Ideal& I, const Ideal& J, CombineOp op, unsigned n = 1);

Ideal ideal_intersect(const Ideal& I, const Ideal& J);
Ideal ideal_quotient(const Ideal& I, const Ideal& J);
Ideal ideal_quotient(const Ideal& I, const Polynomial& g);
/* I : g^infinity. */
Ideal saturate(const Ideal& I, const Polynomial& g);

/* I intersected with k[remaining variables]; the result lives in the ring
 * of the remaining variables (original relative order). */
Ideal eliminate(const Ideal& I, const std::set<std::string>& drop);

/* Low-level form: `basis` must be a Groebner basis for an elimination order
 * whose leading block is exactly `drop`. Throws OrderMismatch otherwise. */
std::vector<Polynomial> eliminate_with_basis(const std::vector<Polynomial>& basis, const std::set<std::string>& drop);

/* Krull dimension of R/I. Throws UnitIdeal. */
int krull_dim(const Ideal& I);
/* Height of I in the polynomial ring: nvars - dim R/I. */
int ideal_height(const Ideal& I);
/* Vector-space dimension of R/I. Throws NotZeroDimensional. */
long colength_0dim(const Ideal& I);

/* Generators of the form gcd/lcm via principal-ideal intersection. */
Polynomial polynomial_lcm(const Polynomial& f, const Polynomial& g);
Polynomial polynomial_gcd(const Polynomial& f, const Polynomial& g);

/* The ring `ring` with the extra variables prepended (for elimination). */
RingContext extend_ring_front(const RingContext& ring, const std::vector<std::string>& extra, MonomialOrder order);
/* Move a polynomial into a ring containing every variable it actually uses,
 * matched by name. */
Polynomial embed_by_name(const Polynomial& f, const RingContext& target);

} // namespace icl
