#include "icl/poly/field.hpp"

#include <charconv>

#include "icl/error.hpp"

namespace icl {

bool is_prime(std::uint32_t p)
{
    if (p < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

Field Field::prime(std::uint32_t p)
{
    if (!is_prime(p) || p >= (1u << 31))
        raise(ErrorKind::BadCoefficient, "field characteristic " + std::to_string(p) + " is not a prime below 2^31");
    return Field(p);
}

Field Field::parse(std::string_view text)
{
    if (text == "Q" || text == "QQ")
        return rationals();
    if (text.starts_with("Fp:")) {
        auto digits = text.substr(3);
        std::uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec != std::errc() || ptr != digits.data() + digits.size() || p >= (1ull << 31))
            raise(ErrorKind::SyntaxError, "bad prime field '" + std::string(text) + "'");
        return prime(static_cast<std::uint32_t>(p));
    }
    raise(ErrorKind::SyntaxError, "unknown coefficient field '" + std::string(text) + "' (expected Q or Fp:<p>)");
}

Rational Field::reduce_int(const Integer& v) const
{
    Integer r = v % p_;
    if (r < 0)
        r += p_;
    return Rational(r);
}

Rational Field::normalize(const Rational& q) const
{
    if (p_ == 0) {
        Rational r = q;
        r.canonicalize();
        return r;
    }
    if (q.get_den() == 1)
        return reduce_int(q.get_num());
    Integer den = q.get_den() % p_;
    if (den == 0)
        raise(ErrorKind::ZeroDivisor, "denominator divisible by the characteristic");
    Integer inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), Integer(p_).get_mpz_t());
    return reduce_int(Integer(q.get_num() * inv));
}

Rational Field::add(const Rational& a, const Rational& b) const
{
    if (p_ == 0)
        return a + b;
    Integer s = a.get_num() + b.get_num();
    if (s >= p_)
        s -= p_;
    return Rational(s);
}

Rational Field::sub(const Rational& a, const Rational& b) const
{
    if (p_ == 0)
        return a - b;
    Integer s = a.get_num() - b.get_num();
    if (s < 0)
        s += p_;
    return Rational(s);
}

Rational Field::mul(const Rational& a, const Rational& b) const
{
    if (p_ == 0)
        return a * b;
    return reduce_int(Integer(a.get_num() * b.get_num()));
}

Rational Field::neg(const Rational& a) const
{
    if (p_ == 0)
        return -a;
    if (a == 0)
        return a;
    return Rational(Integer(p_) - a.get_num());
}

Rational Field::inv(const Rational& a) const
{
    if (a == 0)
        raise(ErrorKind::ZeroDivisor, "inverse of zero");
    if (p_ == 0)
        return 1 / a;
    Integer r;
    mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), Integer(p_).get_mpz_t());
    return Rational(r);
}

std::string Field::to_string() const
{
    if (p_ == 0)
        return "Q";
    return "Fp:" + std::to_string(p_);
}

} // namespace icl
