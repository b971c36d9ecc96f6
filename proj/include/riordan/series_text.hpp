#pragma once

#include <string_view>
#include <vector>

#include "riordan/closed_forms.hpp"
#include "riordan/supplier.hpp"

namespace riordan {

/// Parses a comma-separated list of rationals ("1,-2,3/4").
std::vector<Rational> parse_rational_list(std::string_view text);

/// Parses a textual series description:
///
///   1,-2,3           polynomial with these coefficients (also "poly:1,-2,3")
///   rat:N;D          N(x)/D(x), N and D coefficient lists
///   rat:N;D;p        N(x)/D(x)^p for an integer p
///   prefix:1,1,2,6   a sequence known only up to its length
///   x, fact, cosh, sinh, besseli1, exp, exp:a
///   x*S, -S          x times S, negation of S
///
/// Throws ParseError on malformed input.
RationalSupplier parse_series(std::string_view text);

/// "FAMILY:param", e.g. "PASCAL_LIKE:2".
FamilyParam parse_family_param(std::string_view text);

}  // namespace riordan
