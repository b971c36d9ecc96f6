#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "random_specs.hpp"
#include "riordan/closed_forms.hpp"
#include "riordan/exp_riordan.hpp"
#include "riordan/inversion.hpp"
#include "riordan/series_text.hpp"

using namespace riordan;
using namespace testing_support;

namespace {

RiordanSpec spec(const char* g, const char* f) { return RiordanSpec(parse_series(g), parse_series(f), g); }

Triangle oracle_bang(const RiordanSpec& s, std::size_t N)
{
    return lagrange_bang(bivariate_gf(s, N).coeffs(), N);
}

}  // namespace

TEST_CASE("inversion of the displayed examples")
{
    const auto nar = bang_riordan(spec("rat:1;1,1", "-x"), 5);
    CHECK(nar.row(5) == rationals({1, 15, 50, 50, 15, 1}));
    for (std::size_t n = 0; n <= 5; ++n)
        for (std::size_t k = 0; k <= n; ++k)
            CHECK(nar.at(n, k) == Rational(narayana(n, k)));

    CHECK(bang_riordan(spec("rat:1;1,1;2", "-rat:0,1;1,1"), 5).row(5) == rationals({132, 330, 300, 120, 20, 1}));
    const auto cube = spec("-rat:1;1,2", "-rat:0,1;1,2");
    CHECK(bang_riordan(cube, 7) == to_matrix(cube, 7));
    CHECK(bang_riordan(spec("1,-1", "-x"), 5).row(5) == rationals({42, 126, 140, 70, 15, 1}));

    // Non-Riordan source: G = 1 - x(1+y)/(1+x).
    const BivariateSupplier G([](std::size_t N) {
        const auto a = suppliers::rational_function({0, 1}, {1, 1})(N);
        std::vector<PolyY> c(N + 1);
        c[0] = PolyY(1);
        for (std::size_t n = 1; n <= N; ++n)
            c[n] = PolyY({-a[n], -a[n]});
        return Series<PolyY>(std::move(c));
    });
    CHECK(bang_bivariate(G, 5).row(5) == rationals({1, 15, 70, 140, 126, 42}));
    CHECK(bang_riordan(identity_array(), 0).row(0) == rationals({1}));
}

TEST_CASE("inversion agrees with the Lagrange inversion oracle")
{
    Rng rng(kSeed + 1);
    for (int t = 0; t < 15; ++t) {
        const auto s = random_spec(rng);
        CHECK(bang_riordan(s, 7) == oracle_bang(s, 7));
    }
}

TEST_CASE("closed term, factorized form")
{
    const auto one_plus_x = family_spec({Family::OnePlusRx, 1});
    CHECK(bang_closed_term(one_plus_x, 3, 1) == Rational(-10));
    CHECK(bang_closed_term(identity_array(), 0, 0) == Rational(1));
    CHECK(bang_closed_term(spec("rat:1;1,-1;3", "x"), 4, 2) == Rational(210));
    CHECK(bang_riordan(spec("rat:1;1,-1;3", "x"), 4).at(4, 2) == Rational(210));
    CHECK_THROWS_AS(bang_closed_term(one_plus_x, 1, 2), Error);

    CHECK(to_matrix(factorized_inner(one_plus_x), 3).at(3, 1) == Rational(10));
    CHECK(to_matrix(factorized_inner(identity_array()), 6) == Triangle::identity(7));
    CHECK(row_sums(to_matrix(derivative_array_of_reverted(family_spec({Family::SecondFamily, 2}).g()), 4)).terms ==
          rationals({1, 5, 25, 129, 681}));
    CHECK(factorized_bang(one_plus_x, 6) == bang_riordan(one_plus_x, 6));
}

TEST_CASE("Appell and Lagrange subgroups")
{
    const auto id = appell_identity(identity_array(), 5);
    CHECK(id.first == Triangle::identity(6));
    CHECK(id.second == Triangle::identity(6));

    const auto p = appell_identity(spec("1,1", "x"), 6);
    CHECK(p.first == p.second);
    CHECK(p.first.row(2) == rationals({6, -3, 1}));
    for (std::size_t n = 0; n <= 6; ++n)
        for (std::size_t k = 0; k <= n; ++k)
            CHECK(p.first.at(n, k) == Rational(binomial(long(2 * n - k), long(n - k))) *
                                          power(Rational(-1), n - k));

    Rng rng(kSeed + 2);
    for (int t = 0; t < 5; ++t) {
        const auto q = appell_identity(RiordanSpec(suppliers::polynomial(rng.int_coeffs(2, 1)), suppliers::polynomial({0, 1})), 8);
        CHECK(q.first == q.second);
        CHECK(q.second == to_matrix(RiordanSpec(suppliers::polynomial({1}), suppliers::polynomial({0, 1})), 8) * q.second);
    }
    CHECK_THROWS_AS(appell_identity(spec("1", "0,1,1"), 4), Error);

    CHECK(lagrange_subgroup_bang(spec("1", "0,-1,-1"), 5).row(5) == rationals({0, 0, 0, 10, 10, 1}));
    for (std::size_t n = 0; n <= 6; ++n)
        for (std::size_t k = 0; k <= n; ++k) {
            const Rational want = 2 * k >= n ? Rational(binomial(long(n), long(2 * (n - k))) * catalan(n - k))
                                             : Rational(0);
            CHECK(lagrange_subgroup_bang(spec("1", "0,-1,-1"), 6).at(n, k) == want);
        }
    CHECK(lagrange_subgroup_bang(identity_array(), 0).row(0) == rationals({1}));
    const auto lag = spec("1", "rat:0,1;1,-1");
    CHECK(lagrange_subgroup_bang(lag, 8) == bang_riordan(lag, 8));
    CHECK_THROWS_AS(lagrange_subgroup_bang(spec("1,1", "x"), 4), Error);
}

TEST_CASE("Bell matrices and exponential arrays")
{
    const auto cheb = bell_bang_exp(suppliers::rational_function({1}, {1, 0, 1}), 6);
    CHECK(cheb.matrix.row(6) == rationals({5, 0, 30, 0, 15, 0, 1}));
    CHECK(cheb.matrix == bang_riordan(RiordanSpec(parse_series("rat:1;1,0,1"), parse_series("rat:0,1;1,0,1")), 6));
    CHECK(cheb.matrix == exp_to_matrix(ExpRiordanSpec(suppliers::bessel_i1_ratio(), suppliers::polynomial({0, -1})), 6));

    const auto one = bell_bang_exp(suppliers::constant(1), 5);
    for (std::size_t n = 0; n <= 5; ++n)
        CHECK(one.matrix.at(n, n) == power(Rational(-1), n));

    const auto source = bell_source_from_exp(suppliers::rational_function({1}, {1, -1}));
    const auto want = inverse(RiordanSpec(suppliers::factorial_series(), suppliers::times_x(suppliers::factorial_series())));
    CHECK(to_matrix(source, 7) == to_matrix(want, 7));
}

TEST_CASE("revert transform")
{
    CHECK(revert_transform_sequence(parse_series("prefix:1,-2,3,-4,5,-6"), 5).terms == rationals({1, 2, 5, 14, 42, 132}));
    CHECK(revert_transform_sequence(suppliers::constant(1), 4).terms == rationals({1, 0, 0, 0, 0}));
    CHECK(revert_transform_sequence(parse_series("prefix:1,-3,7,-15,31,-63"), 5).terms ==
          rationals({1, 3, 11, 45, 197, 903}));
}

TEST_CASE("invert and revert transforms commute through the binomial matrix")
{
    CHECK(prop1_check(suppliers::constant(1), 10));
    CHECK(prop1_check(suppliers::rational_function({1}, {1, -1}), 10));
    Rng rng(kSeed + 3);
    for (int t = 0; t < 30; ++t) {
        auto c = rng.rational_coeffs(8);
        c[0] = rng.nonzero(-3, 3);
        CHECK(prop1_check(suppliers::polynomial(c), 8));
    }
}

TEST_CASE("self-duality and involutions")
{
    CHECK(is_self_dual(spec("-rat:1;1,1", "rat:0,1;1,1"), 8));
    for (long r = 1; r <= 4; ++r) {
        const RiordanSpec s(suppliers::negated(suppliers::rational_function({1}, {1, r})),
                            suppliers::negated(suppliers::rational_function({0, 1}, {1, r})));
        CHECK(is_self_dual(s, 8));
        CHECK(is_involution(s, 8));
    }
    CHECK_FALSE(is_self_dual(spec("rat:1;1,1", "-x"), 6));
    CHECK_FALSE(is_involution(spec("rat:1;1,1", "x"), 6));
}

TEST_CASE("reversal commutes with inversion")
{
    const auto simplex = spec("rat:1;1,1;2", "-rat:0,1;1,1");
    CHECK(reversal(bang_riordan(simplex, 5)).row(5) == rationals({1, 20, 120, 300, 330, 132}));
    CHECK(bang_bivariate(reversal(to_matrix(simplex, 5))) == reversal(bang_riordan(simplex, 5)));
    CHECK(bang_reversal_commutes(simplex, 5));
    CHECK(bang_reversal_commutes(identity_array(), 6));
    CHECK(bang_reversal_commutes(spec("rat:1;1,1", "-x"), 8));
}

TEST_CASE("property: inversion laws on random arrays")
{
    Rng rng(kSeed + 4);
    for (int t = 0; t < 25; ++t) {
        const auto s = random_spec(rng);
        const std::size_t N = 8;
        const auto b = bang_riordan(s, N);
        CHECK(bang_bivariate(b) == to_matrix(s, N));
        CHECK(factorized_bang(s, N) == b);
        for (std::size_t n = 0; n <= N; ++n)
            for (std::size_t k = 0; k <= n; ++k)
                CHECK(bang_closed_term(s, n, k) == b.at(n, k));
        const auto m = to_matrix(s, N);
        CHECK(initial_column(b).terms == revert_transform_sequence(suppliers::finite_prefix(initial_column(m).terms), N).terms);
        CHECK(row_sums(b).terms == revert_transform_sequence(suppliers::finite_prefix(row_sums(m).terms), N).terms);
    }
    for (int t = 0; t < 20; ++t) {
        auto c = rng.int_coeffs(4, 1, 2);
        const auto g = suppliers::polynomial(c);
        const RiordanSpec bell(g, suppliers::times_x(g));
        const std::size_t N = static_cast<std::size_t>(rng.integer(2, 8));
        CHECK(bell_bang_exp(g, N).matrix == bang_riordan(bell, N));
        CHECK(exp_to_matrix(bell_bang_exp(g, N).spec, N) == bang_riordan(bell, N));
    }
    for (int t = 0; t < 10; ++t) {
        auto f = rng.int_coeffs(4, 0, 2);
        f[0] = 0;
        f[1] = rng.integer(0, 1) ? 1 : -1;
        const RiordanSpec lag(suppliers::constant(1), suppliers::polynomial(f));
        const auto b = bang_riordan(lag, 8);
        const auto m = to_matrix(lag, 8);
        for (std::size_t n = 0; n <= 8; ++n)
            for (std::size_t k = 0; k <= n; ++k)
                CHECK(b.at(n, k) / inversion_prefactor(n, k) == m.at(n, k));
    }
}
