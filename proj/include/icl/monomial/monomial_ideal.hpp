#pragma once

#include <span>
#include <string>
#include <vector>

#include "icl/groebner/ideal.hpp"

namespace icl {

using ExpVec = std::vector<int>;

/* Componentwise a <= b. */
bool dominated(std::span<const int> a, std::span<const int> b);

/*
 * Monomial ideal stored as its minimal generators (an antichain under the
 * componentwise order), sorted in descending lex order.
 */
class MonomialIdeal {
  public:
    MonomialIdeal(RingContext ring, std::vector<ExpVec> gens);
    /* Throws Unsupported if the reduced basis is not made of monomials. */
    static MonomialIdeal from_ideal(const Ideal& I);
    static MonomialIdeal maximal_power(const RingContext& ring, unsigned r);

    const RingContext& ring() const noexcept { return ring_; }
    std::size_t dim() const noexcept { return ring_.nvars(); }
    const std::vector<ExpVec>& gens() const noexcept { return gens_; }

    bool is_zero() const noexcept { return gens_.empty(); }
    bool is_unit() const;
    bool contains(std::span<const int> v) const;
    bool contains(const MonomialIdeal& other) const;
    /* Every variable has a pure power among the generators. */
    bool is_m_primary() const;
    /* Least total degree of a generator. Throws ZeroIdeal. */
    unsigned order() const;
    /* Number of standard monomials. Throws NotMPrimary. */
    long colength() const;

    Ideal to_ideal() const;
    std::string to_string() const;

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b)
    {
        return a.ring_.same_ring(b.ring_) && a.gens_ == b.gens_;
    }

  private:
    RingContext ring_;
    std::vector<ExpVec> gens_;
};

MonomialIdeal monomial_product(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal monomial_power(const MonomialIdeal& I, unsigned n);
MonomialIdeal monomial_sum(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal monomial_intersect(const MonomialIdeal& I, const MonomialIdeal& J);

/* x^v in the integral closure of I^n, i.e. v in n * NP(I). */
bool np_membership(std::span<const int> v, const MonomialIdeal& I, unsigned n);

enum class LpMethod { Auto, FourierMotzkin, Simplex };
bool np_membership(std::span<const int> v, const MonomialIdeal& I, unsigned n, LpMethod method);

/* Integral closure of I^n. Throws ZeroIdeal. */
MonomialIdeal monomial_closure_power(const MonomialIdeal& I, unsigned n);
bool is_monomial_closed(const MonomialIdeal& I);

} // namespace icl
