#pragma once

#include <cstddef>
#include <string>

#include "riordan/riordan_array.hpp"
#include "riordan/supplier.hpp"
#include "riordan/triangle.hpp"

namespace riordan {

/// Exponential Riordan array [u, v], entry (n!/k!) [x^n] u v^k.
///
/// u and v are supplied as ordinary power series (the actual functions, e.g.
/// cosh x has coefficients 1/n! at even n). Templated on the coefficient ring
/// so that arrays with Q[y] entries, such as [1, F(x, y)], share the code.
template <CoefficientRing R>
class BasicExpRiordanSpec {
public:
    BasicExpRiordanSpec(SeriesSupplier<R> u, SeriesSupplier<R> v, std::string name = {})
        : u_(std::move(u)), v_(std::move(v)), name_(std::move(name))
    {
        const auto u1 = u_(1);
        const auto v1 = v_(1);
        if (!u1[0].is_unit())
            throw Error(ErrorKind::InvalidArgument, "exponential Riordan array needs a unit u(0)");
        if (!v1[0].is_zero() || !v1[1].is_unit())
            throw Error(ErrorKind::InvalidArgument, "exponential Riordan array needs v(0) = 0 and a unit v'(0)");
    }

    const SeriesSupplier<R>& u() const { return u_; }
    const SeriesSupplier<R>& v() const { return v_; }
    const std::string& name() const { return name_; }

private:
    SeriesSupplier<R> u_;
    SeriesSupplier<R> v_;
    std::string name_;
};

using ExpRiordanSpec = BasicExpRiordanSpec<Rational>;

template <CoefficientRing R>
R exp_element_at(const BasicExpRiordanSpec<R>& spec, std::size_t n, std::size_t k)
{
    if (k > n)
        throw Error(ErrorKind::IndexAboveDiagonal, "k = " + std::to_string(k) + " > n = " + std::to_string(n));
    const R c = (spec.u()(n) * pow(spec.v()(n), k))[n];
    return c.scaled(Rational(factorial(n), factorial(k)));
}

template <CoefficientRing R>
LowerTriangular<R> exp_to_matrix(const BasicExpRiordanSpec<R>& spec, std::size_t N)
{
    const auto v = spec.v()(N);
    auto column = spec.u()(N);
    std::vector<std::vector<R>> rows(N + 1);
    for (std::size_t n = 0; n <= N; ++n)
        rows[n].resize(n + 1);
    for (std::size_t k = 0; k <= N; ++k) {
        for (std::size_t n = k; n <= N; ++n)
            rows[n][k] = column[n].scaled(Rational(factorial(n), factorial(k)));
        column = column * v;
    }
    return LowerTriangular<R>(std::move(rows));
}

/// [u, v]^{-1} = [1/u(vbar), vbar]
template <CoefficientRing R>
BasicExpRiordanSpec<R> exp_inverse(const BasicExpRiordanSpec<R>& spec)
{
    SeriesSupplier<R> vbar([spec](std::size_t n) { return revert(spec.v()(std::max<std::size_t>(n, 1))).truncated(n); });
    SeriesSupplier<R> u([spec, vbar](std::size_t n) { return reciprocal(compose(spec.u()(n), vbar(n))); });
    return BasicExpRiordanSpec<R>(std::move(u), std::move(vbar), "[" + spec.name() + "]^-1");
}

/// u(x) exp(y v(x)) = sum t_{n,k} x^n y^k / n!, to order N.
Series<PolyY> exp_bivariate_egf(const ExpRiordanSpec& spec, std::size_t N);

/// Inversion of [u, v]: t^_{n,k} = n! [x^n y^k] d/dx Rev(int_0^x G_e(t, y) dt).
Triangle exp_bang(const ExpRiordanSpec& spec, std::size_t N);

/// Same inversion for a triangle read as the egf sum t_{n,k} x^n y^k / n!.
Triangle exp_bang(const Triangle& t);

/// The same inversion read off as column 1 of the matrix inverse of the
/// exponential array [1, F], F = int G_e: row n is entry (n+1, 1) as a polynomial in y.
Triangle exp_bang_via_inverse_column(const ExpRiordanSpec& spec, std::size_t N);

/// F(x, y) = int_0^x G_e(t, y) dt to order N + 1.
Series<PolyY> integrated_egf(const ExpRiordanSpec& spec, std::size_t N);

/// Exponential revert transform: a_n -> n! [x^n] d/dx Rev(int A), A = sum a_n x^n / n!.
/// `terms` supplies the plain sequence a_n as an ordinary series.
SequenceView exp_revert_transform_sequence(const RationalSupplier& terms, std::size_t N);

/// Row sums of [cosh x, x]^!: the exponential revert transform of e^x cosh x.
SequenceView airey_row_sums(std::size_t N);

/// [e^x, x], [cosh x, x], [1, x]
ExpRiordanSpec exp_binomial_array();
ExpRiordanSpec exp_cosh_array();
ExpRiordanSpec exp_identity_array();

}  // namespace riordan
