#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "riordan/riordan_array.hpp"

namespace riordan {

Integer catalan(std::size_t n);
/// (1/(k+1)) C(n,k) C(n+1,k)
Integer narayana(std::size_t n, std::size_t k);
/// ((n-k+1)/(n+1)) C(n+k,k), the ballot numbers of A009766.
Integer ballot(std::size_t n, std::size_t k);
/// (1/(n+1)) C(n+1,k) C((n+1)m, n-k); m may be any integer.
Rational fuss_narayana(long m, std::size_t n, std::size_t k);
/// Fibonacci with F(1) = F(2) = 1.
Integer fibonacci(std::size_t n);

/// One-parameter families of Riordan arrays with closed-form inversions.
enum class Family {
    OnePlusRx,      // (1 + r x, x)
    SecondFamily,   // ((1 - x(r-1))/(1+x), -x)
    PowerAppell,    // (1/(1-x)^m, x)
    PascalLike,     // (1/(1+x), -x(1 + r x)/(1+x))
    PowerLagrange,  // (1/(1-x)^m, x/(1-x))
};

struct FamilyParam {
    Family family;
    Rational param;  // r, or the integer m for the Power* families
};

std::string_view to_string(Family f);
/// Accepts the canonical upper-case names (ONE_PLUS_RX, SECOND_FAMILY,
/// POWER_APPELL, PASCAL_LIKE, POWER_LAGRANGE); UnknownFamily otherwise.
Family parse_family(std::string_view name);

/// The Riordan array of the family; InvalidArgument when m is not an integer.
RiordanSpec family_spec(const FamilyParam& p);

/// Closed-form inversion entry of the family.
Rational family_term(const FamilyParam& p, std::size_t n, std::size_t k);
Triangle family_bang_closed(const FamilyParam& p, std::size_t N);

/// Row sums of the Pascal-like inversion at parameter r, three ways.
std::vector<Rational> pascal_like_row_sums_via_bang(const Rational& r, std::size_t N);
/// n! [x^n] e^{2x} sum r^j x^{2j} / (j! (j+1)!)
std::vector<Rational> pascal_like_row_sums_via_egf(const Rational& r, std::size_t N);
/// sum_k C(n,2k) 2^{n-2k} C_k r^k
std::vector<Rational> pascal_like_row_sums_via_catalan(const Rational& r, std::size_t N);
/// sum_k C(n,2k) 2^{n-2k} C_k, the r-free form that only holds at r = 1.
std::vector<Integer> pascal_like_row_sums_printed_form(std::size_t N);
/// sum_k C_k C_{n-k} F_{k+1} F_{n-k+1}
std::vector<Integer> catalan_fibonacci_convolution(std::size_t N);

/// Compares bang row sums with the egf oracle to order N.
bool family_row_sum_egf_check(const Rational& r, std::size_t N);

}  // namespace riordan
