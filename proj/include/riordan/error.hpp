#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace riordan {

enum class ErrorKind {
    NonUnitConstantTerm,
    CompositionNeedsZeroConstant,
    ReversionNeedsUnitLinearTerm,
    BadConstantTerm,
    IndexAboveDiagonal,
    NotAppell,
    NotLagrange,
    UnknownFamily,
    NonUnitDenominator,
    NoStabilization,
    NotTriangular,
    NotIntegral,
    ParseError,
    InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so callers (the corpus
// runner, the CLI, the Python module) can map it without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace riordan
