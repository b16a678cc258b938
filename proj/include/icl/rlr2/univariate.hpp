#pragma once

#include <vector>

#include "icl/poly/polynomial.hpp"

namespace icl {

/* Dense univariate polynomial over a Field; coefficient i multiplies t^i.
 * No trailing zeros. */
class UPoly {
  public:
    explicit UPoly(Field field) : field_(field) {}
    UPoly(Field field, std::vector<Rational> coeffs);

    /* f must only involve variable `var` of its ring. */
    static UPoly from_polynomial(const Polynomial& f, std::size_t var);
    Polynomial to_polynomial(const RingContext& ring, std::size_t var) const;

    const Field& field() const noexcept { return field_; }
    const std::vector<Rational>& coeffs() const noexcept { return c_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const Rational& lead() const { return c_.back(); }

    Rational eval(const Rational& x) const;
    UPoly derivative() const;
    UPoly monic() const;

    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    /* Quotient and remainder. */
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const;

    std::string to_string(const std::string& var) const;

  private:
    void trim();

    Field field_;
    std::vector<Rational> c_;
};

UPoly upoly_gcd(UPoly a, UPoly b);
/* Product of the distinct irreducible factors. */
UPoly squarefree_part(const UPoly& f);

struct RootSplit {
    std::vector<Rational> roots; // sorted ascending (by integer value over F_p)
    UPoly rest;                  // squarefree cofactor with no roots in the field
};

/* Distinct roots in the coefficient field of a nonzero f. */
RootSplit field_roots(const UPoly& f);

} // namespace icl
