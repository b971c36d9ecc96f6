#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "riordan/rational.hpp"

namespace riordan {

/// Polynomial in the marker variable y with Rational coefficients.
///
/// Canonical form: no trailing zero coefficients, so the zero polynomial has
/// an empty coefficient list and equality is plain vector equality.
class PolyY {
public:
    PolyY() = default;
    PolyY(const Rational& constant);
    PolyY(long constant) : PolyY(Rational(constant)) {}
    PolyY(int constant) : PolyY(Rational(constant)) {}
    PolyY(std::initializer_list<Rational> coeffs);
    explicit PolyY(std::vector<Rational> coeffs);

    static PolyY y() { return PolyY({Rational(0), Rational(1)}); }
    static PolyY monomial(const Rational& c, std::size_t power);

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    /// Coefficient of y^k (zero beyond the stored degree).
    Rational coeff(std::size_t k) const;
    /// Number of stored coefficients (degree + 1; zero for the zero polynomial).
    std::size_t size() const { return coeffs_.size(); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_unit() const { return coeffs_.size() == 1; }
    PolyY unit_inverse() const;
    PolyY scaled(const Rational& factor) const;
    Rational evaluate(const Rational& at) const;

    std::string to_string() const;

    PolyY operator-() const;
    PolyY& operator+=(const PolyY& o);
    PolyY& operator-=(const PolyY& o);
    PolyY& operator*=(const PolyY& o);

    friend PolyY operator+(PolyY a, const PolyY& b) { return a += b; }
    friend PolyY operator-(PolyY a, const PolyY& b) { return a -= b; }
    friend PolyY operator*(const PolyY& a, const PolyY& b);

    friend bool operator==(const PolyY&, const PolyY&) = default;
    friend std::ostream& operator<<(std::ostream& os, const PolyY& p) { return os << p.to_string(); }

private:
    void normalize();

    std::vector<Rational> coeffs_;
};

}  // namespace riordan
