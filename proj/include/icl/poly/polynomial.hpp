#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "icl/poly/field.hpp"
#include "icl/poly/monomial.hpp"
#include "icl/poly/ring.hpp"

namespace icl {

struct Term {
    Monomial mono;
    Rational coeff;
};

/*
 * Sparse multivariate polynomial. Terms are kept sorted in descending
 * order for the ring's monomial order, with no zero coefficients, so two
 * polynomials over the same ring are equal iff their term lists are.
 */
class Polynomial {
  public:
    explicit Polynomial(RingContext ring) : ring_(std::move(ring)) {}

    static Polynomial constant(const RingContext& ring, const Rational& c);
    static Polynomial variable(const RingContext& ring, std::size_t index);
    static Polynomial variable(const RingContext& ring, std::string_view name);
    static Polynomial monomial(const RingContext& ring, const Monomial& m, const Rational& c = 1);
    /* Sorts, merges equal monomials, reduces coefficients into the field. */
    static Polynomial from_terms(const RingContext& ring, std::vector<Term> terms);

    const RingContext& ring() const noexcept { return ring_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    bool is_unit() const noexcept { return terms_.size() == 1 && terms_[0].mono.is_one(); }
    bool is_monomial() const noexcept { return terms_.size() == 1; }

    /* Leading data; undefined on the zero polynomial. */
    const Term& leading_term() const { return terms_.front(); }
    const Monomial& leading_monomial() const { return terms_.front().mono; }
    const Rational& leading_coeff() const { return terms_.front().coeff; }

    unsigned total_degree() const;
    Rational coefficient(const Monomial& m) const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
    Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }
    Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }

    Polynomial scale(const Rational& c) const;
    Polynomial mul_term(const Monomial& m, const Rational& c) const;
    Polynomial pow(unsigned n) const;
    /* Leading coefficient 1 (zero stays zero). */
    Polynomial monic() const;
    Polynomial derivative(std::size_t var) const;

    /* Everything but the leading term. */
    Polynomial tail() const;
    /* this - c*m*g, the elementary reduction step. */
    Polynomial sub_mul(const Rational& c, const Monomial& m, const Polynomial& g) const;

    /* Same variables, different monomial order: terms are re-sorted. */
    Polynomial with_ring(const RingContext& ring) const;

    std::string to_string() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);

  private:
    Polynomial(RingContext ring, std::vector<Term> sorted) : ring_(std::move(ring)), terms_(std::move(sorted)) {}
    void require_same_ring(const Polynomial& other) const;

    RingContext ring_;
    std::vector<Term> terms_;
};

/* Parses the polynomial grammar: terms joined by + and -, each term a
 * product of an optional integer or integer/integer coefficient and
 * variables with optional ^exponent; '*' between factors is optional. */
Polynomial parse_polynomial(std::string_view text, const RingContext& ring);
std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingContext& ring);

/* (order, lowest-degree homogeneous part). Throws ZeroPolynomial on 0. */
std::pair<unsigned, Polynomial> lowest_degree_form(const Polynomial& f);

/* Ring homomorphism sending source variable i to images[i]. */
Polynomial ring_map_apply(const Polynomial& f, std::span<const Polynomial> images, const RingContext& target);
Polynomial ring_map_apply(const Polynomial& f, const std::map<std::string, Polynomial>& images,
                          const RingContext& target);

/* q with f = q*g, or nullopt when g does not divide f. */
std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g);

std::string format_rational(const Rational& q);

} // namespace icl
