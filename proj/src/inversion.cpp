#include "riordan/inversion.hpp"

namespace riordan {

Rational inversion_prefactor(std::size_t n, std::size_t k)
{
    Rational p(binomial(static_cast<long>(n + 1), static_cast<long>(k)), Integer(static_cast<long>(n + 1)));
    return k % 2 == 0 ? p : -p;
}

Triangle bang_bivariate(const BivariateSupplier& G, std::size_t N)
{
    const auto xG = G(N).mul_x();
    return from_bivariate(revert(xG).div_x());
}

Triangle bang_bivariate(const Triangle& t)
{
    if (t.rows() == 0)
        throw Error(ErrorKind::InvalidArgument, "empty triangle");
    return bang_bivariate(fixed_series(to_bivariate(t), "triangle"), t.rows() - 1);
}

Triangle bang_riordan(const RiordanSpec& spec, std::size_t N)
{
    return bang_bivariate(BivariateSupplier([spec](std::size_t n) { return bivariate_gf(spec, n); }, spec.name()),
                          N);
}

Rational bang_closed_term(const RiordanSpec& spec, std::size_t n, std::size_t k)
{
    if (k > n)
        throw Error(ErrorKind::IndexAboveDiagonal, "k = " + std::to_string(k) + " > n = " + std::to_string(n));
    const auto inv_g = reciprocal(spec.g()(n));
    const auto term = (pow(spec.f()(n), k) * pow(inv_g, n + 1))[n];
    return inversion_prefactor(n, k) * term;
}

RationalSupplier reverted_xg(const RationalSupplier& g)
{
    return RationalSupplier(
        [g](std::size_t n) {
            if (n == 0)
                return RationalSeries::zero(0);
            return revert(g(n - 1).mul_x());
        },
        "Rev(x*" + g.label() + ")");
}

RiordanSpec derivative_array_of_reverted(const RationalSupplier& g)
{
    const auto rev = reverted_xg(g);
    RationalSupplier d([rev](std::size_t n) { return derivative(rev(n + 1)); }, "Rev'");
    return RiordanSpec(std::move(d), rev, "((Rev xg)',Rev xg)");
}

RiordanSpec factorized_inner(const RiordanSpec& spec)
{
    const RiordanSpec lagrange(suppliers::constant(1), spec.f(), "(1,f)");
    return product(derivative_array_of_reverted(spec.g()), lagrange);
}

Triangle factorized_bang(const RiordanSpec& spec, std::size_t N)
{
    const auto inner = to_matrix(factorized_inner(spec), N);
    std::vector<std::vector<Rational>> rows = inner.data();
    for (std::size_t n = 0; n <= N; ++n)
        for (std::size_t k = 0; k <= n; ++k)
            rows[n][k] *= inversion_prefactor(n, k);
    return Triangle(std::move(rows));
}

TrianglePair appell_identity(const RiordanSpec& spec, std::size_t N)
{
    if (spec.f()(N) != RationalSeries::x(N))
        throw Error(ErrorKind::NotAppell, "f is not x up to order " + std::to_string(N));
    const auto xg = suppliers::times_x(spec.g());
    RationalSupplier dxg([xg](std::size_t n) { return derivative(xg(n + 1)); }, "(xg)'");
    const RiordanSpec derivative_xg(std::move(dxg), xg, "((xg)',xg)");
    return {to_matrix(derivative_array_of_reverted(spec.g()), N), to_matrix(inverse(derivative_xg), N)};
}

Triangle lagrange_subgroup_bang(const RiordanSpec& spec, std::size_t N)
{
    if (spec.g()(N) != RationalSeries::constant(1, N))
        throw Error(ErrorKind::NotLagrange, "g is not 1 up to order " + std::to_string(N));
    std::vector<std::vector<Rational>> rows = to_matrix(spec, N).data();
    for (std::size_t n = 0; n <= N; ++n)
        for (std::size_t k = 0; k <= n; ++k)
            rows[n][k] *= inversion_prefactor(n, k);
    return Triangle(std::move(rows));
}

RationalSupplier revert_transform(const RationalSupplier& g)
{
    return RationalSupplier([g](std::size_t n) { return revert(g(n).mul_x()).div_x(); },
                            "revert(" + g.label() + ")");
}

SequenceView revert_transform_sequence(const RationalSupplier& g, std::size_t N)
{
    return {revert_transform(g)(N).coeffs(), Provenance::Custom};
}

BellInversion bell_bang_exp(const RationalSupplier& g, std::size_t N)
{
    const auto rt = revert_transform(g);
    RationalSupplier u([rt](std::size_t n) { return borel(rt(n)); }, "revert(g)_e");
    ExpRiordanSpec spec(std::move(u), suppliers::polynomial({0, -1}), "[revert(g)_e,-x]");
    auto matrix = exp_to_matrix(spec, N);
    return {std::move(spec), std::move(matrix)};
}

RiordanSpec bell_source_from_exp(const RationalSupplier& u)
{
    const RationalSupplier ordinary([u](std::size_t n) { return inv_borel(u(n)); }, "ordinary");
    const auto h = revert_transform(ordinary);
    return RiordanSpec(h, suppliers::times_x(h), "Bell source");
}

bool prop1_check(const RationalSupplier& g, std::size_t N)
{
    const auto lhs = revert_transform_sequence(invert_alpha(g, 1), N);
    const auto rhs = binomial_transform(revert_transform_sequence(g, N), Direction::Inverse);
    return lhs.terms == rhs.terms;
}

bool is_self_dual(const RiordanSpec& spec, std::size_t N)
{
    return bang_riordan(spec, N) == to_matrix(spec, N);
}

bool is_involution(const RiordanSpec& spec, std::size_t N)
{
    const auto m = to_matrix(spec, N);
    return m * m == Triangle::identity(N + 1);
}

bool bang_reversal_commutes(const Triangle& t)
{
    return reversal(bang_bivariate(t)) == bang_bivariate(reversal(t));
}

bool bang_reversal_commutes(const RiordanSpec& spec, std::size_t N)
{
    return bang_reversal_commutes(to_matrix(spec, N));
}

}  // namespace riordan
