#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "riordan/series.hpp"

namespace riordan {

/// Lazy representation of a fixed power series: a procedure that produces
/// the prefix of any requested order. Prefixes must be consistent
/// (generate(M) is a prefix of generate(N) for M <= N).
///
/// Generators must be safe to call concurrently; all built-ins are stateless.
template <CoefficientRing R>
class SeriesSupplier {
public:
    using Generator = std::function<Series<R>(std::size_t)>;

    SeriesSupplier(Generator gen, std::string label = {})
        : gen_(std::move(gen)), label_(std::move(label))
    {
    }

    Series<R> operator()(std::size_t order) const
    {
        Series<R> s = gen_(order);
        if (s.order() < order)
            throw Error(ErrorKind::InvalidArgument,
                        "supplier '" + label_ + "' returned order " + std::to_string(s.order()) +
                            ", requested " + std::to_string(order));
        return s.order() == order ? s : s.truncated(order);
    }

    const std::string& label() const { return label_; }

private:
    Generator gen_;
    std::string label_;
};

using RationalSupplier = SeriesSupplier<Rational>;
using BivariateSupplier = SeriesSupplier<PolyY>;

namespace suppliers {

RationalSupplier constant(const Rational& c);
RationalSupplier polynomial(std::vector<Rational> coeffs);
/// num(x) / den(x)^power; power may be zero or negative.
RationalSupplier rational_function(std::vector<Rational> num, std::vector<Rational> den, long power = 1);
/// sum n! x^n
RationalSupplier factorial_series();
/// e^{a x}
RationalSupplier exponential(const Rational& a = Rational(1));
RationalSupplier cosh_series();
RationalSupplier sinh_series();
/// I_1(2x)/x = sum x^{2n} / (n! (n+1)!)
RationalSupplier bessel_i1_ratio();
/// Finite list of coefficients of an ordinary generating function, known only
/// up to its length; asking for more throws.
RationalSupplier finite_prefix(std::vector<Rational> coeffs);

RationalSupplier times_x(const RationalSupplier& a);
RationalSupplier negated(const RationalSupplier& a);
RationalSupplier scaled(const RationalSupplier& a, const Rational& k);
RationalSupplier product(const RationalSupplier& a, const RationalSupplier& b);
RationalSupplier sum(const RationalSupplier& a, const RationalSupplier& b);

/// Embeds a Rational series into Q[y] coefficients.
BivariateSupplier lift(const RationalSupplier& a);

}  // namespace suppliers

Series<PolyY> lift(const Series<Rational>& a);

/// Evaluates every coefficient at y = at.
Series<Rational> evaluate_y(const Series<PolyY>& a, const Rational& at);

}  // namespace riordan

namespace riordan {

/// Supplier backed by one already-computed series; asking beyond its order throws.
template <CoefficientRing R>
SeriesSupplier<R> fixed_series(Series<R> s, std::string label = "fixed")
{
    return SeriesSupplier<R>(
        [s = std::move(s)](std::size_t n) {
            if (n > s.order())
                throw Error(ErrorKind::InvalidArgument, "fixed series known only to order " + std::to_string(s.order()));
            return s.truncated(n);
        },
        std::move(label));
}

}  // namespace riordan
