#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "riordan/closed_forms.hpp"
#include "riordan/contfrac.hpp"
#include "riordan/exp_riordan.hpp"
#include "riordan/inversion.hpp"
#include "support.hpp"

using namespace riordan;
using namespace testing_support;

namespace {

CFSpec pascal_like_cf(const Rational& r)
{
    return jacobi_cf([](std::size_t) { return PolyY({1, 1}); }, [r](std::size_t) { return PolyY({0, r}); }, "pascal");
}

CFSpec gladkovskii()
{
    CFSpec cf;
    cf.name = "gladkovskii";
    cf.denominator = [](std::size_t i) { return CFTerm{PolyY(1), PolyY(-2 * long(i))}; };
    cf.numerator = [](std::size_t i) { return CFTerm{PolyY(), PolyY(-long(i))}; };
    return cf;
}

}  // namespace

TEST_CASE("continued fraction basics")
{
    CFSpec zero;
    zero.denominator = [](std::size_t) { return CFTerm{PolyY(1), PolyY(-3)}; };
    zero.numerator = [](std::size_t) { return CFTerm{}; };
    const auto s = eval_cf(zero, 5);
    for (std::size_t n = 0; n <= 5; ++n)
        CHECK(s[n] == PolyY(power(Rational(3), n)));

    CFSpec bad = zero;
    bad.denominator = [](std::size_t) { return CFTerm{PolyY::y(), PolyY(1)}; };
    CHECK_THROWS_AS(eval_cf(bad, 3), Error);

    // Numerators without a factor of x never settle.
    CFSpec diverging = zero;
    diverging.numerator = [](std::size_t) { return CFTerm{PolyY(Rational(1, 4))}; };
    diverging.denominator = [](std::size_t) { return CFTerm{PolyY(1)}; };
    try {
        (void)eval_cf(diverging, 3);
        CHECK(false);
    }
    catch (const Error& e) {
        CHECK((e.kind() == ErrorKind::NoStabilization || e.kind() == ErrorKind::NonUnitDenominator));
    }

    CFSpec fixed = pascal_like_cf(1);
    fixed.policy = DepthPolicy::fixed(1);
    CHECK(eval_cf(fixed, 6) == eval_cf_at_depth(fixed, 1, 6));
    CHECK(eval_cf(fixed, 6) != eval_cf(pascal_like_cf(1), 6));
}

TEST_CASE("Jacobi fractions stabilize once depth exceeds the order")
{
    const auto cf = pascal_like_cf(3);
    for (std::size_t N = 2; N <= 8; ++N)
        CHECK(eval_cf_at_depth(cf, N + 2, N) == eval_cf_at_depth(cf, N + 3, N));
}

TEST_CASE("Pascal-like fraction gives the inversion")
{
    const auto s = eval_cf(pascal_like_cf(1), 6);
    for (std::size_t n = 0; n <= 6; ++n)
        for (std::size_t k = 0; k <= n; ++k)
            CHECK(s[n].coeff(k) == Rational(narayana(n, k)));
    CHECK(s[5] == PolyY({1, 15, 50, 50, 15, 1}));
    for (long r = -2; r <= 4; ++r)
        CHECK(verify_cf_against_bang(pascal_like_cf(r), family_spec({Family::PascalLike, r}), 7));

    const auto sums = jacobi_cf([](std::size_t) { return PolyY(2); }, [](std::size_t) { return PolyY(5); }, "sums");
    const auto v = eval_cf(sums, 6);
    const auto want = rationals({1, 2, 9, 38, 186, 932, 4889});
    for (std::size_t n = 0; n <= 6; ++n)
        CHECK(v[n] == PolyY(want[n]));
}

TEST_CASE("(1+rx, x) and second-family fractions")
{
    for (long r : {1L, 2L, -3L}) {
        const auto cf = jacobi_cf([r](std::size_t i) { return i == 0 ? PolyY({-r, -1}) : PolyY({-2 * r, -1}); },
                                  [r](std::size_t) { return PolyY({r * r, r}); }, "one-plus-rx");
        CHECK(verify_cf_against_bang(cf, family_spec({Family::OnePlusRx, r}), 7));
    }
    for (long r : {-2L, 1L, 2L, 3L}) {
        const auto cf = jacobi_cf([r](std::size_t i) { return i == 0 ? PolyY({r, 1}) : PolyY({2 * r - 1, 1}); },
                                  [r](std::size_t) { return PolyY({r * (r - 1), r}); }, "second");
        CHECK(verify_cf_against_bang(cf, family_spec({Family::SecondFamily, r}), 7));
    }
    CFSpec identity;
    identity.denominator = [](std::size_t) { return CFTerm{PolyY(1), PolyY({0, 1})}; };
    identity.numerator = [](std::size_t) { return CFTerm{}; };
    CHECK(verify_cf_against_bang(identity, identity_array(), 6));
}

TEST_CASE("Gladkovskii fraction")
{
    const auto s = eval_cf(gladkovskii(), 10);
    const auto airey = airey_row_sums(10).terms;
    for (std::size_t n = 0; n <= 10; ++n)
        CHECK(s[n] == PolyY(airey[n]));
}
