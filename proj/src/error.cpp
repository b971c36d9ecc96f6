#include "riordan/error.hpp"

namespace riordan {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case ErrorKind::CompositionNeedsZeroConstant: return "CompositionNeedsZeroConstant";
    case ErrorKind::ReversionNeedsUnitLinearTerm: return "ReversionNeedsUnitLinearTerm";
    case ErrorKind::BadConstantTerm: return "BadConstantTerm";
    case ErrorKind::IndexAboveDiagonal: return "IndexAboveDiagonal";
    case ErrorKind::NotAppell: return "NotAppell";
    case ErrorKind::NotLagrange: return "NotLagrange";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::NonUnitDenominator: return "NonUnitDenominator";
    case ErrorKind::NoStabilization: return "NoStabilization";
    case ErrorKind::NotTriangular: return "NotTriangular";
    case ErrorKind::NotIntegral: return "NotIntegral";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
{
}

}  // namespace riordan
