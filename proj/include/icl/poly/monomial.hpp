#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace icl {

inline constexpr std::size_t kMaxVariables = 24;

/* Exponent vector with inline storage; the length is fixed by the ring. */
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars);
    explicit Monomial(std::span<const int> exponents);

    static Monomial variable(std::size_t nvars, std::size_t index, unsigned power = 1);

    std::size_t size() const noexcept { return size_; }
    unsigned operator[](std::size_t i) const noexcept { return exps_[i]; }
    void set(std::size_t i, unsigned value);
    unsigned degree() const noexcept { return degree_; }
    bool is_one() const noexcept { return degree_ == 0; }

    bool divides(const Monomial& other) const noexcept;
    bool coprime(const Monomial& other) const noexcept;
    Monomial lcm(const Monomial& other) const;
    Monomial gcd(const Monomial& other) const;
    /* Requires divisor.divides(*this). */
    Monomial operator/(const Monomial& divisor) const;
    Monomial operator*(const Monomial& other) const;
    Monomial pow(unsigned n) const;

    std::vector<int> exponents() const;
    std::size_t hash() const noexcept;

    friend bool operator==(const Monomial& a, const Monomial& b) noexcept
    {
        return a.size_ == b.size_ && a.degree_ == b.degree_ && a.exps_ == b.exps_;
    }

  private:
    std::array<std::uint16_t, kMaxVariables> exps_{};
    std::uint8_t size_ = 0;
    std::uint32_t degree_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/* Lex, graded reverse lex, or an elimination order: graded reverse lex on
 * the first `block` variables, ties broken by graded reverse lex on the
 * rest. */
struct MonomialOrder {
    enum class Kind { Lex, GRevLex, Block };
    Kind kind = Kind::GRevLex;
    std::size_t block = 0;

    static MonomialOrder lex() { return {Kind::Lex, 0}; }
    static MonomialOrder grevlex() { return {Kind::GRevLex, 0}; }
    static MonomialOrder elimination(std::size_t k) { return {Kind::Block, k}; }

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const noexcept;
    std::string to_string() const;

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

} // namespace icl
