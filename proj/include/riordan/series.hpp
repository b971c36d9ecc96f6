#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "riordan/error.hpp"
#include "riordan/poly_y.hpp"
#include "riordan/rational.hpp"

namespace riordan {

/// Commutative coefficient ring with decidable units and a Q-module action.
template <class R>
concept CoefficientRing = std::regular<R> && std::constructible_from<R, Rational> &&
    requires(const R& a, const R& b, const Rational& q) {
        { a + b } -> std::convertible_to<R>;
        { a - b } -> std::convertible_to<R>;
        { a * b } -> std::convertible_to<R>;
        { -a } -> std::convertible_to<R>;
        { a.is_zero() } -> std::same_as<bool>;
        { a.is_unit() } -> std::same_as<bool>;
        { a.unit_inverse() } -> std::convertible_to<R>;
        { a.scaled(q) } -> std::convertible_to<R>;
    };

/// Truncated power series in x: coefficients of x^0 .. x^order are known.
///
/// Binary operations on series of orders N1 and N2 produce order min(N1, N2);
/// nothing is ever padded to claim precision that was not there.
template <CoefficientRing R>
class Series {
public:
    explicit Series(std::vector<R> coeffs) : c_(std::move(coeffs))
    {
        if (c_.empty())
            throw Error(ErrorKind::InvalidArgument, "series needs at least one coefficient");
    }

    static Series zero(std::size_t order) { return Series(std::vector<R>(order + 1)); }

    static Series constant(const R& c, std::size_t order)
    {
        Series s = zero(order);
        s.c_[0] = c;
        return s;
    }

    static Series monomial(const R& c, std::size_t power, std::size_t order)
    {
        Series s = zero(order);
        if (power <= order)
            s.c_[power] = c;
        return s;
    }

    static Series x(std::size_t order) { return monomial(R(Rational(1)), 1, order); }

    /// Pads or cuts `coeffs` to exactly order + 1 entries (zero padding is for
    /// genuinely finite inputs such as polynomials).
    static Series from_polynomial(std::vector<R> coeffs, std::size_t order)
    {
        coeffs.resize(order + 1);
        return Series(std::move(coeffs));
    }

    std::size_t order() const { return c_.size() - 1; }
    const std::vector<R>& coeffs() const { return c_; }

    const R& operator[](std::size_t n) const
    {
        if (n > order())
            throw Error(ErrorKind::InvalidArgument,
                        "coefficient x^" + std::to_string(n) + " beyond order " + std::to_string(order()));
        return c_[n];
    }

    Series truncated(std::size_t order) const
    {
        if (order > this->order())
            throw Error(ErrorKind::InvalidArgument, "cannot truncate to a higher order");
        return Series(std::vector<R>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
    }

    Series scaled(const Rational& q) const
    {
        Series s = *this;
        for (auto& c : s.c_)
            c = c.scaled(q);
        return s;
    }

    /// x * a; the order rises by one.
    Series mul_x() const
    {
        std::vector<R> out;
        out.reserve(c_.size() + 1);
        out.emplace_back();
        out.insert(out.end(), c_.begin(), c_.end());
        return Series(std::move(out));
    }

    /// a / x; requires a zero constant term and order >= 1; the order drops by one.
    Series div_x() const
    {
        if (order() == 0 || !c_[0].is_zero())
            throw Error(ErrorKind::InvalidArgument, "series is not divisible by x");
        return Series(std::vector<R>(c_.begin() + 1, c_.end()));
    }

    Series operator-() const
    {
        Series s = *this;
        for (auto& c : s.c_)
            c = -c;
        return s;
    }

    friend Series operator+(const Series& a, const Series& b)
    {
        const std::size_t n = std::min(a.order(), b.order());
        std::vector<R> out(n + 1);
        for (std::size_t i = 0; i <= n; ++i)
            out[i] = a.c_[i] + b.c_[i];
        return Series(std::move(out));
    }

    friend Series operator-(const Series& a, const Series& b)
    {
        const std::size_t n = std::min(a.order(), b.order());
        std::vector<R> out(n + 1);
        for (std::size_t i = 0; i <= n; ++i)
            out[i] = a.c_[i] - b.c_[i];
        return Series(std::move(out));
    }

    // Cauchy product truncated to the smaller order.
    friend Series operator*(const Series& a, const Series& b)
    {
        const std::size_t n = std::min(a.order(), b.order());
        std::vector<R> out(n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            if (a.c_[i].is_zero())
                continue;
            for (std::size_t j = 0; i + j <= n; ++j)
                out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
        }
        return Series(std::move(out));
    }

    friend Series operator*(const R& k, const Series& a)
    {
        Series s = a;
        for (auto& c : s.c_)
            c = k * c;
        return s;
    }

    friend bool operator==(const Series&, const Series&) = default;

private:
    std::vector<R> c_;
};

using RationalSeries = Series<Rational>;
using BivariateSeries = Series<PolyY>;

/// Multiplicative inverse; the constant term must be a unit of R.
template <CoefficientRing R>
Series<R> reciprocal(const Series<R>& a)
{
    if (!a[0].is_unit())
        throw Error(ErrorKind::NonUnitConstantTerm, "reciprocal needs a unit constant term");
    const R inv0 = a[0].unit_inverse();
    std::vector<R> b(a.order() + 1);
    b[0] = inv0;
    for (std::size_t n = 1; n <= a.order(); ++n) {
        R acc{};
        for (std::size_t i = 1; i <= n; ++i)
            if (!a[i].is_zero())
                acc = acc + a[i] * b[n - i];
        b[n] = -(inv0 * acc);
    }
    return Series<R>(std::move(b));
}

/// a^e by repeated squaring.
template <CoefficientRing R>
Series<R> pow(Series<R> base, unsigned long e)
{
    Series<R> result = Series<R>::constant(R(Rational(1)), base.order());
    while (e > 0) {
        if (e & 1UL)
            result = result * base;
        e >>= 1;
        if (e > 0)
            base = base * base;
    }
    return result;
}

/// a(b(x)) by Horner evaluation over the series ring; b must have zero constant term.
template <CoefficientRing R>
Series<R> compose(const Series<R>& a, const Series<R>& b)
{
    if (!b[0].is_zero())
        throw Error(ErrorKind::CompositionNeedsZeroConstant, "inner series has a nonzero constant term");
    const std::size_t n = std::min(a.order(), b.order());
    const Series<R> inner = b.truncated(n);
    Series<R> acc = Series<R>::constant(a[n], n);
    for (std::size_t i = n; i-- > 0;) {
        acc = acc * inner;
        acc = acc + Series<R>::constant(a[i], n);
    }
    return acc;
}

/// Compositional inverse of a = a1 x + a2 x^2 + ..., a1 a unit.
///
/// Solves a(b(x)) = x order by order. pw[j][m] holds [x^m] b^j; at step n
/// the coefficients [x^n] b^j for j >= 2 only involve b_1 .. b_{n-1}, so
/// b_n = -(1/a1) * sum_{j=2..n} a_j [x^n] b^j.
template <CoefficientRing R>
Series<R> revert(const Series<R>& a)
{
    if (a.order() == 0 || !a[0].is_zero() || !a[1].is_unit())
        throw Error(ErrorKind::ReversionNeedsUnitLinearTerm,
                    "reversion needs a zero constant term and a unit linear term");
    const std::size_t N = a.order();
    const R inv1 = a[1].unit_inverse();

    std::vector<std::vector<R>> pw(N + 1, std::vector<R>(N + 1));
    std::vector<R> b(N + 1);
    b[1] = inv1;
    pw[1][1] = inv1;
    for (std::size_t n = 2; n <= N; ++n) {
        R acc{};
        for (std::size_t j = 2; j <= n; ++j) {
            R cell{};
            for (std::size_t i = 1; i + (j - 1) <= n; ++i)
                if (!b[i].is_zero() && !pw[j - 1][n - i].is_zero())
                    cell = cell + b[i] * pw[j - 1][n - i];
            pw[j][n] = cell;
            if (!a[j].is_zero())
                acc = acc + a[j] * cell;
        }
        b[n] = -(inv1 * acc);
        pw[1][n] = b[n];
    }
    return Series<R>(std::move(b));
}

/// Termwise derivative; the order drops by one (an order-0 input gives the zero series of order 0).
template <CoefficientRing R>
Series<R> derivative(const Series<R>& a)
{
    if (a.order() == 0)
        return Series<R>::zero(0);
    std::vector<R> out(a.order());
    for (std::size_t n = 1; n <= a.order(); ++n)
        out[n - 1] = a[n].scaled(Rational(static_cast<long>(n)));
    return Series<R>(std::move(out));
}

/// Antiderivative with zero constant; the order rises by one.
template <CoefficientRing R>
Series<R> integral(const Series<R>& a)
{
    std::vector<R> out(a.order() + 2);
    for (std::size_t n = 0; n <= a.order(); ++n)
        out[n + 1] = a[n].scaled(Rational(1, static_cast<long>(n + 1)));
    return Series<R>(std::move(out));
}

/// exp(a) for a(0) = 0, from b' = a' b.
template <CoefficientRing R>
Series<R> exp(const Series<R>& a)
{
    if (!a[0].is_zero())
        throw Error(ErrorKind::BadConstantTerm, "exp needs a zero constant term");
    std::vector<R> b(a.order() + 1);
    b[0] = R(Rational(1));
    for (std::size_t n = 1; n <= a.order(); ++n) {
        R acc{};
        for (std::size_t k = 1; k <= n; ++k)
            if (!a[k].is_zero())
                acc = acc + a[k].scaled(Rational(static_cast<long>(k))) * b[n - k];
        b[n] = acc.scaled(Rational(1, static_cast<long>(n)));
    }
    return Series<R>(std::move(b));
}

/// log(a) for a(0) = 1, as the integral of a'/a.
template <CoefficientRing R>
Series<R> log(const Series<R>& a)
{
    if (!(a[0] == R(Rational(1))))
        throw Error(ErrorKind::BadConstantTerm, "log needs constant term 1");
    if (a.order() == 0)
        return Series<R>::zero(0);
    return integral(derivative(a) * reciprocal(a.truncated(a.order() - 1)));
}

/// Coefficientwise division by n! (ordinary carrier -> exponential carrier).
template <CoefficientRing R>
Series<R> borel(const Series<R>& a)
{
    std::vector<R> out(a.coeffs());
    for (std::size_t n = 0; n < out.size(); ++n)
        out[n] = out[n].scaled(Rational(Integer(1), factorial(n)));
    return Series<R>(std::move(out));
}

/// Coefficientwise multiplication by n!; inverse of borel.
template <CoefficientRing R>
Series<R> inv_borel(const Series<R>& a)
{
    std::vector<R> out(a.coeffs());
    for (std::size_t n = 0; n < out.size(); ++n)
        out[n] = out[n].scaled(Rational(factorial(n)));
    return Series<R>(std::move(out));
}

/// [x^n] H(fbar) = (1/n) [x^{n-1}] H'(x) (x/f)^n, for n >= 1.
template <CoefficientRing R>
R lagrange_coefficient(const Series<R>& H, const Series<R>& f, std::size_t n)
{
    if (n == 0)
        throw Error(ErrorKind::InvalidArgument, "Lagrange coefficient needs n >= 1");
    if (H.order() < n || f.order() < n)
        throw Error(ErrorKind::InvalidArgument, "series orders must be at least n");
    if (!f[0].is_zero() || !f[1].is_unit())
        throw Error(ErrorKind::ReversionNeedsUnitLinearTerm, "f must have zero constant and unit linear term");
    const Series<R> x_over_f = reciprocal(f.truncated(n).div_x());  // order n-1
    const Series<R> integrand = derivative(H.truncated(n)) * pow(x_over_f, n);
    return integrand[n - 1].scaled(Rational(1, static_cast<long>(n)));
}

}  // namespace riordan
