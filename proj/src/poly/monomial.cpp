#include "icl/poly/monomial.hpp"

#include <algorithm>
#include <limits>

#include "icl/error.hpp"

namespace icl {

Monomial::Monomial(std::size_t nvars) : size_(static_cast<std::uint8_t>(nvars))
{
    if (nvars > kMaxVariables)
        raise(ErrorKind::ArityMismatch, "too many variables (" + std::to_string(nvars) + ")");
}

Monomial::Monomial(std::span<const int> exponents) : Monomial(exponents.size())
{
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] < 0)
            raise(ErrorKind::SyntaxError, "negative exponent");
        set(i, static_cast<unsigned>(exponents[i]));
    }
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, unsigned power)
{
    Monomial m(nvars);
    m.set(index, power);
    return m;
}

void Monomial::set(std::size_t i, unsigned value)
{
    if (value > std::numeric_limits<std::uint16_t>::max())
        raise(ErrorKind::ArityMismatch, "exponent overflow");
    degree_ = degree_ - exps_[i] + value;
    exps_[i] = static_cast<std::uint16_t>(value);
}

bool Monomial::divides(const Monomial& other) const noexcept
{
    if (degree_ > other.degree_)
        return false;
    for (std::size_t i = 0; i < size_; ++i)
        if (exps_[i] > other.exps_[i])
            return false;
    return true;
}

bool Monomial::coprime(const Monomial& other) const noexcept
{
    for (std::size_t i = 0; i < size_; ++i)
        if (exps_[i] != 0 && other.exps_[i] != 0)
            return false;
    return true;
}

Monomial Monomial::lcm(const Monomial& other) const
{
    Monomial r(size_);
    for (std::size_t i = 0; i < size_; ++i)
        r.set(i, std::max(exps_[i], other.exps_[i]));
    return r;
}

Monomial Monomial::gcd(const Monomial& other) const
{
    Monomial r(size_);
    for (std::size_t i = 0; i < size_; ++i)
        r.set(i, std::min(exps_[i], other.exps_[i]));
    return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const
{
    Monomial r(size_);
    for (std::size_t i = 0; i < size_; ++i)
        r.exps_[i] = static_cast<std::uint16_t>(exps_[i] - divisor.exps_[i]);
    r.degree_ = degree_ - divisor.degree_;
    return r;
}

Monomial Monomial::operator*(const Monomial& other) const
{
    Monomial r(size_);
    for (std::size_t i = 0; i < size_; ++i)
        r.set(i, unsigned(exps_[i]) + other.exps_[i]);
    return r;
}

Monomial Monomial::pow(unsigned n) const
{
    Monomial r(size_);
    for (std::size_t i = 0; i < size_; ++i)
        r.set(i, unsigned(exps_[i]) * n);
    return r;
}

std::vector<int> Monomial::exponents() const
{
    return std::vector<int>(exps_.begin(), exps_.begin() + size_);
}

std::size_t Monomial::hash() const noexcept
{
    std::size_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < size_; ++i) {
        h ^= exps_[i];
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

std::strong_ordering lex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi)
{
    for (std::size_t i = lo; i < hi; ++i)
        if (a[i] != b[i])
            return a[i] <=> b[i];
    return std::strong_ordering::equal;
}

std::strong_ordering grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi)
{
    unsigned da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db)
        return da <=> db;
    for (std::size_t i = hi; i-- > lo;)
        if (a[i] != b[i])
            return b[i] <=> a[i];
    return std::strong_ordering::equal;
}

} // namespace

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const noexcept
{
    switch (kind) {
    case Kind::Lex:
        return lex_range(a, b, 0, a.size());
    case Kind::GRevLex:
        if (a.degree() != b.degree())
            return a.degree() <=> b.degree();
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i])
                return b[i] <=> a[i];
        return std::strong_ordering::equal;
    case Kind::Block: {
        auto c = grevlex_range(a, b, 0, block);
        if (c != 0)
            return c;
        return grevlex_range(a, b, block, a.size());
    }
    }
    return std::strong_ordering::equal;
}

std::string MonomialOrder::to_string() const
{
    switch (kind) {
    case Kind::Lex: return "lex";
    case Kind::GRevLex: return "grevlex";
    case Kind::Block: return "block(" + std::to_string(block) + ")";
    }
    return "?";
}

} // namespace icl
