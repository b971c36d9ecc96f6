#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "riordan/riordan_array.hpp"

namespace riordan {

/// A partial numerator or denominator: a polynomial in x (index = power of x)
/// with coefficients in Q[y].
using CFTerm = std::vector<PolyY>;

struct DepthPolicy {
    enum class Kind { Fixed, Stabilize };
    Kind kind = Kind::Stabilize;
    std::size_t depth = 0;  // used by Fixed

    static DepthPolicy fixed(std::size_t d) { return {Kind::Fixed, d}; }
    static DepthPolicy stabilize() { return {Kind::Stabilize, 0}; }
};

/// Continued fraction
///
///     1 / (b_0 - a_1 / (b_1 - a_2 / (b_2 - ...)))
///
/// with partial numerators a_i (i >= 1) and partial denominators b_i (i >= 0).
/// Each b_i must have a unit constant term. Signs live in the terms: a
/// fraction written with "+" between levels has negated numerators here.
struct CFSpec {
    std::function<CFTerm(std::size_t)> numerator;
    std::function<CFTerm(std::size_t)> denominator;
    DepthPolicy policy = DepthPolicy::stabilize();
    std::string name;
};

/// Jacobi-type fraction with numerators lambda_i x^2 and denominators 1 - b_i x.
CFSpec jacobi_cf(std::function<PolyY(std::size_t)> b, std::function<PolyY(std::size_t)> lambda,
                 std::string name = {});

/// Evaluates the fraction cut at the given depth (levels 0..depth) to order N.
Series<PolyY> eval_cf_at_depth(const CFSpec& spec, std::size_t depth, std::size_t N);

/// Evaluates to order N. Under stabilize, the depth grows until coefficients
/// 0..N agree between consecutive depths; more than 4N + 8 levels throws
/// NoStabilization.
Series<PolyY> eval_cf(const CFSpec& spec, std::size_t N);

/// eval_cf equals the bivariate gf of bang_riordan(spec) to order N.
bool verify_cf_against_bang(const CFSpec& cf, const RiordanSpec& spec, std::size_t N);
/// eval_cf equals the bivariate gf of the given triangle (order = rows - 1).
bool verify_cf_against_triangle(const CFSpec& cf, const Triangle& t);

}  // namespace riordan
