#include "icl/error.hpp"

namespace icl {

std::string_view error_kind_name(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::BadCoefficient: return "BadCoefficient";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::ZeroDivisor: return "ZeroDivisor";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::UnitIdeal: return "UnitIdeal";
    case ErrorKind::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorKind::ZeroIdeal: return "ZeroIdeal";
    case ErrorKind::NotSubideal: return "NotSubideal";
    case ErrorKind::NotMPrimary: return "NotMPrimary";
    case ErrorKind::OrderDrop: return "OrderDrop";
    case ErrorKind::NonRationalBasePoint: return "NonRationalBasePoint";
    case ErrorKind::GenericityFailure: return "GenericityFailure";
    case ErrorKind::NotTorsionfree: return "NotTorsionfree";
    case ErrorKind::NotContracted: return "NotContracted";
    case ErrorKind::HeightTooSmall: return "HeightTooSmall";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::Unsupported: return "Unsupported";
    }
    return "Error";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind)
{
}

void raise(ErrorKind kind, const std::string& what)
{
    throw Error(kind, what);
}

} // namespace icl
