#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace icl {

using Rational = mpq_class;
using Integer = mpz_class;

/* Coefficient field: the rationals, or a prime field F_p with p < 2^31.
 * Elements of F_p are stored as Rationals with integral value in [0, p). */
class Field {
  public:
    static Field rationals() { return Field(0); }
    static Field prime(std::uint32_t p);
    /* "Q" or "Fp:<p>" */
    static Field parse(std::string_view text);

    bool is_rationals() const noexcept { return p_ == 0; }
    bool is_prime_field() const noexcept { return p_ != 0; }
    std::uint32_t characteristic() const noexcept { return p_; }

    /* Canonical representative of q in this field. */
    Rational normalize(const Rational& q) const;
    Rational from_int(long v) const { return normalize(Rational(v)); }

    Rational add(const Rational& a, const Rational& b) const;
    Rational sub(const Rational& a, const Rational& b) const;
    Rational mul(const Rational& a, const Rational& b) const;
    Rational neg(const Rational& a) const;
    Rational inv(const Rational& a) const;
    Rational div(const Rational& a, const Rational& b) const { return mul(a, inv(b)); }

    std::string to_string() const;

    friend bool operator==(const Field& a, const Field& b) noexcept { return a.p_ == b.p_; }

  private:
    explicit Field(std::uint32_t p) : p_(p) {}
    Rational reduce_int(const Integer& v) const;

    std::uint32_t p_;
};

bool is_prime(std::uint32_t p);

} // namespace icl
