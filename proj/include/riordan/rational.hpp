#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace riordan {

using Integer = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// A thin value type over GMP's mpq_class. It exists so the rest of the
/// library can treat Rational and PolyY uniformly as coefficient rings
/// (is_unit / unit_inverse / scaled) without leaking GMP expression templates
/// into generic code.
class Rational {
public:
    Rational() = default;
    Rational(long value) : q_(value) {}
    Rational(int value) : q_(static_cast<long>(value)) {}
    Rational(const Integer& value) : q_(value) {}
    template <class Op>
    Rational(const __gmp_expr<mpz_t, Op>& value) : q_(Integer(value)) {}
    Rational(const Integer& num, const Integer& den);
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}
    explicit Rational(mpq_class value);

    /// Parses "p" or "p/q" (optional sign, decimal digits only).
    static Rational parse(std::string_view text);

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    bool is_unit() const { return !is_zero(); }
    Rational unit_inverse() const;
    Rational scaled(const Rational& factor) const { return *this * factor; }

    /// The integer value; throws NotIntegral when the denominator is not 1.
    Integer to_integer() const;
    std::string to_string() const { return q_.get_str(); }
    const mpq_class& raw() const { return q_; }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class q_;
};

Integer factorial(unsigned long n);

/// C(n, k) for any integer n and k >= 0 (falling-factorial definition, so
/// negative upper indices are allowed); zero when k < 0.
Integer binomial(const Integer& n, long k);
Integer binomial(long n, long k);

Rational power(const Rational& base, unsigned long exponent);

}  // namespace riordan
