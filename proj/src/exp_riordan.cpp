#include "riordan/exp_riordan.hpp"

namespace riordan {

Series<PolyY> exp_bivariate_egf(const ExpRiordanSpec& spec, std::size_t N)
{
    return lift(spec.u()(N)) * exp(PolyY::y() * lift(spec.v()(N)));
}

Series<PolyY> integrated_egf(const ExpRiordanSpec& spec, std::size_t N)
{
    return integral(exp_bivariate_egf(spec, N));
}

Triangle exp_bang(const ExpRiordanSpec& spec, std::size_t N)
{
    const auto reverted = revert(integrated_egf(spec, N));
    return from_bivariate(inv_borel(derivative(reverted)));
}

Triangle exp_bang(const Triangle& t)
{
    if (t.rows() == 0)
        throw Error(ErrorKind::InvalidArgument, "empty triangle");
    auto egf = to_bivariate(t);
    std::vector<PolyY> c = egf.coeffs();
    for (std::size_t n = 0; n < c.size(); ++n)
        c[n] = c[n].scaled(Rational(Integer(1), factorial(n)));
    const auto reverted = revert(integral(Series<PolyY>(std::move(c))));
    return from_bivariate(inv_borel(derivative(reverted)));
}

Triangle exp_bang_via_inverse_column(const ExpRiordanSpec& spec, std::size_t N)
{
    const BasicExpRiordanSpec<PolyY> outer(fixed_series(Series<PolyY>::constant(PolyY(1), N + 1)),
                                           fixed_series(integrated_egf(spec, N)), "[1,F]");
    const auto inv = exp_to_matrix(outer, N + 1).inverse();
    std::vector<std::vector<Rational>> rows(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
        const PolyY p = inv.at(n + 1, 1);
        if (p.size() > n + 1)
            throw Error(ErrorKind::NotTriangular, "row " + std::to_string(n) + " has y-degree " +
                                                      std::to_string(p.size() - 1));
        rows[n] = p.coeffs();
        rows[n].resize(n + 1);
    }
    return Triangle(std::move(rows));
}

SequenceView exp_revert_transform_sequence(const RationalSupplier& terms, std::size_t N)
{
    const auto egf = borel(terms(N));
    const auto result = inv_borel(derivative(revert(integral(egf))));
    return {result.coeffs(), Provenance::Custom};
}

SequenceView airey_row_sums(std::size_t N)
{
    // e^x cosh x = (e^{2x} + 1)/2 has plain terms 1, 1, 2, 4, 8, ...
    const RationalSupplier terms([](std::size_t n) {
        std::vector<Rational> c(n + 1);
        c[0] = 1;
        for (std::size_t i = 1; i <= n; ++i)
            c[i] = power(Rational(2), i - 1);
        return RationalSeries(std::move(c));
    });
    auto out = exp_revert_transform_sequence(terms, N);
    out.provenance = Provenance::RowSums;
    return out;
}

ExpRiordanSpec exp_binomial_array()
{
    return ExpRiordanSpec(suppliers::exponential(), suppliers::polynomial({0, 1}), "[e^x,x]");
}

ExpRiordanSpec exp_cosh_array()
{
    return ExpRiordanSpec(suppliers::cosh_series(), suppliers::polynomial({0, 1}), "[cosh x,x]");
}

ExpRiordanSpec exp_identity_array()
{
    return ExpRiordanSpec(suppliers::constant(1), suppliers::polynomial({0, 1}), "[1,x]");
}

}  // namespace riordan
