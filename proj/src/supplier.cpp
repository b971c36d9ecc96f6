#include "riordan/supplier.hpp"

namespace riordan {

namespace suppliers {

RationalSupplier constant(const Rational& c)
{
    return RationalSupplier([c](std::size_t n) { return RationalSeries::constant(c, n); }, c.to_string());
}

RationalSupplier polynomial(std::vector<Rational> coeffs)
{
    return RationalSupplier(
        [coeffs = std::move(coeffs)](std::size_t n) { return RationalSeries::from_polynomial(coeffs, n); },
        "polynomial");
}

RationalSupplier rational_function(std::vector<Rational> num, std::vector<Rational> den, long power)
{
    if (den.empty() || den.front().is_zero())
        throw Error(ErrorKind::NonUnitConstantTerm, "denominator needs a nonzero constant term");
    return RationalSupplier(
        [num = std::move(num), den = std::move(den), power](std::size_t n) {
            const auto d = RationalSeries::from_polynomial(den, n);
            const auto base = power >= 0 ? reciprocal(d) : d;
            const unsigned long e = static_cast<unsigned long>(power >= 0 ? power : -power);
            return RationalSeries::from_polynomial(num, n) * pow(base, e);
        },
        "rational");
}

RationalSupplier factorial_series()
{
    return RationalSupplier(
        [](std::size_t n) {
            std::vector<Rational> c(n + 1);
            for (std::size_t i = 0; i <= n; ++i)
                c[i] = Rational(factorial(i));
            return RationalSeries(std::move(c));
        },
        "factorial");
}

RationalSupplier exponential(const Rational& a)
{
    return RationalSupplier(
        [a](std::size_t n) {
            std::vector<Rational> c(n + 1);
            for (std::size_t i = 0; i <= n; ++i)
                c[i] = power(a, i) / Rational(factorial(i));
            return RationalSeries(std::move(c));
        },
        "exp");
}

RationalSupplier cosh_series()
{
    return RationalSupplier(
        [](std::size_t n) {
            std::vector<Rational> c(n + 1);
            for (std::size_t i = 0; i <= n; i += 2)
                c[i] = Rational(Integer(1), factorial(i));
            return RationalSeries(std::move(c));
        },
        "cosh");
}

RationalSupplier sinh_series()
{
    return RationalSupplier(
        [](std::size_t n) {
            std::vector<Rational> c(n + 1);
            for (std::size_t i = 1; i <= n; i += 2)
                c[i] = Rational(Integer(1), factorial(i));
            return RationalSeries(std::move(c));
        },
        "sinh");
}

RationalSupplier bessel_i1_ratio()
{
    return RationalSupplier(
        [](std::size_t n) {
            std::vector<Rational> c(n + 1);
            for (std::size_t i = 0; 2 * i <= n; ++i)
                c[2 * i] = Rational(Integer(1), factorial(i) * factorial(i + 1));
            return RationalSeries(std::move(c));
        },
        "besseli1");
}

RationalSupplier finite_prefix(std::vector<Rational> coeffs)
{
    if (coeffs.empty())
        throw Error(ErrorKind::InvalidArgument, "empty coefficient list");
    return RationalSupplier(
        [coeffs = std::move(coeffs)](std::size_t n) {
            if (n + 1 > coeffs.size())
                throw Error(ErrorKind::InvalidArgument,
                            "only " + std::to_string(coeffs.size()) + " terms known, order " +
                                std::to_string(n) + " requested");
            return RationalSeries(std::vector<Rational>(coeffs.begin(), coeffs.begin() + static_cast<long>(n) + 1));
        },
        "prefix");
}

RationalSupplier times_x(const RationalSupplier& a)
{
    return RationalSupplier(
        [a](std::size_t n) { return n == 0 ? RationalSeries::zero(0) : a(n - 1).mul_x(); }, "x*" + a.label());
}

RationalSupplier negated(const RationalSupplier& a)
{
    return RationalSupplier([a](std::size_t n) { return -a(n); }, "-" + a.label());
}

RationalSupplier scaled(const RationalSupplier& a, const Rational& k)
{
    return RationalSupplier([a, k](std::size_t n) { return a(n).scaled(k); }, k.to_string() + "*" + a.label());
}

RationalSupplier product(const RationalSupplier& a, const RationalSupplier& b)
{
    return RationalSupplier([a, b](std::size_t n) { return a(n) * b(n); }, a.label() + "*" + b.label());
}

RationalSupplier sum(const RationalSupplier& a, const RationalSupplier& b)
{
    return RationalSupplier([a, b](std::size_t n) { return a(n) + b(n); }, a.label() + "+" + b.label());
}

BivariateSupplier lift(const RationalSupplier& a)
{
    return BivariateSupplier([a](std::size_t n) { return riordan::lift(a(n)); }, a.label());
}

}  // namespace suppliers

Series<PolyY> lift(const Series<Rational>& a)
{
    std::vector<PolyY> c;
    c.reserve(a.order() + 1);
    for (const auto& q : a.coeffs())
        c.emplace_back(q);
    return Series<PolyY>(std::move(c));
}

Series<Rational> evaluate_y(const Series<PolyY>& a, const Rational& at)
{
    std::vector<Rational> c;
    c.reserve(a.order() + 1);
    for (const auto& p : a.coeffs())
        c.push_back(p.evaluate(at));
    return Series<Rational>(std::move(c));
}

}  // namespace riordan
