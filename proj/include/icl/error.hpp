#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace icl {

enum class ErrorKind {
    SyntaxError,
    UnknownVariable,
    BadCoefficient,
    ZeroPolynomial,
    ArityMismatch,
    ZeroDivisor,
    RingMismatch,
    BudgetExceeded,
    OrderMismatch,
    UnitIdeal,
    NotZeroDimensional,
    ZeroIdeal,
    NotSubideal,
    NotMPrimary,
    OrderDrop,
    NonRationalBasePoint,
    GenericityFailure,
    NotTorsionfree,
    NotContracted,
    HeightTooSmall,
    SchemaError,
    Unsupported,
};

std::string_view error_kind_name(ErrorKind kind);

/* All library failures are reported through this one exception type; the
 * kind is what callers (and the CLI exit-code mapping) dispatch on. */
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what);

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& what);

} // namespace icl
