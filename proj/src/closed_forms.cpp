#include "riordan/closed_forms.hpp"

#include "riordan/inversion.hpp"

namespace riordan {

namespace {

long as_long(std::size_t v) { return static_cast<long>(v); }

void check_index(std::size_t n, std::size_t k)
{
    if (k > n)
        throw Error(ErrorKind::IndexAboveDiagonal, "k = " + std::to_string(k) + " > n = " + std::to_string(n));
}

long integer_param(const FamilyParam& p)
{
    if (!p.param.is_integer() || !p.param.numerator().fits_slong_p())
        throw Error(ErrorKind::InvalidArgument, std::string(to_string(p.family)) + " needs an integer m, got " +
                                                    p.param.to_string());
    return p.param.numerator().get_si();
}

Rational sign(std::size_t e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

}  // namespace

Integer catalan(std::size_t n)
{
    return binomial(as_long(2 * n), as_long(n)) / (as_long(n) + 1);
}

Integer narayana(std::size_t n, std::size_t k)
{
    check_index(n, k);
    return binomial(as_long(n), as_long(k)) * binomial(as_long(n + 1), as_long(k)) / (as_long(k) + 1);
}

Integer ballot(std::size_t n, std::size_t k)
{
    check_index(n, k);
    return binomial(as_long(n + k), as_long(k)) * (as_long(n - k) + 1) / (as_long(n) + 1);
}

Rational fuss_narayana(long m, std::size_t n, std::size_t k)
{
    check_index(n, k);
    const Integer top = Integer(m) * as_long(n + 1);
    return Rational(binomial(as_long(n + 1), as_long(k)) * binomial(top, as_long(n - k)), Integer(as_long(n + 1)));
}

Integer fibonacci(std::size_t n)
{
    Integer result;
    mpz_fib_ui(result.get_mpz_t(), n);
    return result;
}

std::string_view to_string(Family f)
{
    switch (f) {
    case Family::OnePlusRx: return "ONE_PLUS_RX";
    case Family::SecondFamily: return "SECOND_FAMILY";
    case Family::PowerAppell: return "POWER_APPELL";
    case Family::PascalLike: return "PASCAL_LIKE";
    case Family::PowerLagrange: return "POWER_LAGRANGE";
    }
    return "?";
}

Family parse_family(std::string_view name)
{
    for (Family f : {Family::OnePlusRx, Family::SecondFamily, Family::PowerAppell, Family::PascalLike,
                     Family::PowerLagrange})
        if (name == to_string(f))
            return f;
    throw Error(ErrorKind::UnknownFamily, "unknown family '" + std::string(name) + "'");
}

RiordanSpec family_spec(const FamilyParam& p)
{
    const Rational& r = p.param;
    const std::string label = std::string(to_string(p.family)) + ":" + r.to_string();
    switch (p.family) {
    case Family::OnePlusRx:
        return RiordanSpec(suppliers::polynomial({1, r}), suppliers::polynomial({0, 1}), label);
    case Family::SecondFamily:
        return RiordanSpec(suppliers::rational_function({1, Rational(1) - r}, {1, 1}),
                           suppliers::polynomial({0, -1}), label);
    case Family::PowerAppell:
        return RiordanSpec(suppliers::rational_function({1}, {1, -1}, integer_param(p)),
                           suppliers::polynomial({0, 1}), label);
    case Family::PascalLike:
        return RiordanSpec(suppliers::rational_function({1}, {1, 1}),
                           suppliers::rational_function({0, -1, -r}, {1, 1}), label);
    case Family::PowerLagrange:
        return RiordanSpec(suppliers::rational_function({1}, {1, -1}, integer_param(p)),
                           suppliers::rational_function({0, 1}, {1, -1}), label);
    }
    throw Error(ErrorKind::UnknownFamily, "unknown family");
}

Rational family_term(const FamilyParam& p, std::size_t n, std::size_t k)
{
    check_index(n, k);
    const Rational& r = p.param;
    const long N = as_long(n);
    const long K = as_long(k);
    switch (p.family) {
    case Family::OnePlusRx:
        return inversion_prefactor(n, k) * Rational(binomial(2 * N - K, N - K)) * power(-r, n - k);
    case Family::SecondFamily: {
        Rational acc;
        for (long j = 0; j <= N - K; ++j)
            acc += Rational(binomial(N + 1, j) * binomial(2 * N - K - j, N - K - j)) *
                   power(r - Rational(1), static_cast<unsigned long>(N - K - j));
        return Rational(binomial(N + 1, K), Integer(N + 1)) * acc;
    }
    case Family::PowerAppell:
        return sign(n) * fuss_narayana(integer_param(p), n, k);
    case Family::PascalLike: {
        Rational acc;
        for (long j = 0; j <= K; ++j)
            acc += Rational(binomial(K, j) * binomial(N - K + 1, N - K - j)) * power(r, static_cast<unsigned long>(j));
        return Rational(binomial(N + 1, K), Integer(N + 1)) * acc;
    }
    case Family::PowerLagrange: {
        const long m = integer_param(p);
        return sign(n) * Rational(binomial(N + 1, K) * binomial(Integer(m) * (N + 1) - K, N - K), Integer(N + 1));
    }
    }
    throw Error(ErrorKind::UnknownFamily, "unknown family");
}

Triangle family_bang_closed(const FamilyParam& p, std::size_t N)
{
    std::vector<std::vector<Rational>> rows(N + 1);
    for (std::size_t n = 0; n <= N; ++n)
        for (std::size_t k = 0; k <= n; ++k)
            rows[n].push_back(family_term(p, n, k));
    return Triangle(std::move(rows));
}

std::vector<Rational> pascal_like_row_sums_via_bang(const Rational& r, std::size_t N)
{
    return row_sums(bang_riordan(family_spec({Family::PascalLike, r}), N)).terms;
}

std::vector<Rational> pascal_like_row_sums_via_egf(const Rational& r, std::size_t N)
{
    std::vector<Rational> bessel(N + 1);
    for (std::size_t j = 0; 2 * j <= N; ++j)
        bessel[2 * j] = power(r, j) / Rational(factorial(j) * factorial(j + 1));
    const auto egf = suppliers::exponential(2)(N) * RationalSeries(std::move(bessel));
    return inv_borel(egf).coeffs();
}

std::vector<Rational> pascal_like_row_sums_via_catalan(const Rational& r, std::size_t N)
{
    std::vector<Rational> out(N + 1);
    for (std::size_t n = 0; n <= N; ++n)
        for (std::size_t k = 0; 2 * k <= n; ++k)
            out[n] += Rational(binomial(as_long(n), as_long(2 * k)) * catalan(k)) *
                      power(Rational(2), n - 2 * k) * power(r, k);
    return out;
}

std::vector<Integer> pascal_like_row_sums_printed_form(std::size_t N)
{
    std::vector<Integer> out(N + 1);
    for (std::size_t n = 0; n <= N; ++n)
        for (std::size_t k = 0; 2 * k <= n; ++k) {
            Integer two_pow;
            mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, n - 2 * k);
            out[n] += binomial(as_long(n), as_long(2 * k)) * two_pow * catalan(k);
        }
    return out;
}

std::vector<Integer> catalan_fibonacci_convolution(std::size_t N)
{
    std::vector<Integer> out(N + 1);
    for (std::size_t n = 0; n <= N; ++n)
        for (std::size_t k = 0; k <= n; ++k)
            out[n] += catalan(k) * catalan(n - k) * fibonacci(k + 1) * fibonacci(n - k + 1);
    return out;
}

bool family_row_sum_egf_check(const Rational& r, std::size_t N)
{
    return pascal_like_row_sums_via_bang(r, N) == pascal_like_row_sums_via_egf(r, N);
}

}  // namespace riordan
