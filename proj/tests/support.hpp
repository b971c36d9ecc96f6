#pragma once

// Test-only helpers: a seeded generator for random inputs and naive oracles
// written independently of the library kernels (plain loops over vectors).

#include <cstdint>
#include <random>
#include <vector>

#include "riordan/riordan_array.hpp"

namespace testing_support {

using riordan::PolyY;
using riordan::Rational;
using riordan::Triangle;

constexpr std::uint64_t kSeed = 0x5eed2016;

class Rng {
public:
    explicit Rng(std::uint64_t seed = kSeed) : engine_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }

    long nonzero(long lo, long hi)
    {
        for (;;)
            if (const long v = integer(lo, hi); v != 0)
                return v;
    }

    Rational rational(long span = 5)
    {
        return Rational(integer(-span, span), nonzero(1, span));
    }

    /// Integer coefficients 0..order; constant term forced to `lead` when nonzero.
    std::vector<Rational> int_coeffs(std::size_t order, long lead = 0, long span = 3)
    {
        std::vector<Rational> c(order + 1);
        for (auto& v : c)
            v = Rational(integer(-span, span));
        if (lead != 0)
            c[0] = Rational(lead);
        return c;
    }

    std::vector<Rational> rational_coeffs(std::size_t order)
    {
        std::vector<Rational> c(order + 1);
        for (auto& v : c)
            v = rational();
        return c;
    }

    PolyY poly(std::size_t degree = 2, long span = 3)
    {
        std::vector<Rational> c(degree + 1);
        for (auto& v : c)
            v = Rational(integer(-span, span));
        return PolyY(std::move(c));
    }

private:
    std::mt19937_64 engine_;
};

/// Schoolbook product truncated to n+1 terms.
template <class R>
std::vector<R> naive_mul(const std::vector<R>& a, const std::vector<R>& b, std::size_t n)
{
    std::vector<R> out(n + 1);
    for (std::size_t i = 0; i <= n && i < a.size(); ++i)
        for (std::size_t j = 0; i + j <= n && j < b.size(); ++j)
            out[i + j] = out[i + j] + a[i] * b[j];
    return out;
}

template <class R>
std::vector<R> naive_pow(const std::vector<R>& a, std::size_t e, std::size_t n)
{
    std::vector<R> out(n + 1);
    out[0] = R(Rational(1));
    for (std::size_t i = 0; i < e; ++i)
        out = naive_mul(out, a, n);
    return out;
}

/// sum_i a_i b^i, powers built one at a time.
template <class R>
std::vector<R> naive_compose(const std::vector<R>& a, const std::vector<R>& b, std::size_t n)
{
    std::vector<R> out(n + 1), p(n + 1);
    p[0] = R(Rational(1));
    for (std::size_t i = 0; i <= n && i < a.size(); ++i) {
        for (std::size_t j = 0; j <= n; ++j)
            out[j] = out[j] + a[i] * p[j];
        p = naive_mul(p, b, n);
    }
    return out;
}

/// Compositional inverse over Q by undetermined coefficients: fix r_m so that
/// [x^m] f(r) vanishes, recomputing the whole composition each time.
inline std::vector<Rational> naive_revert(const std::vector<Rational>& f, std::size_t n)
{
    std::vector<Rational> r(n + 1);
    if (n >= 1)
        r[1] = Rational(1) / f[1];
    for (std::size_t m = 2; m <= n; ++m) {
        const auto c = naive_compose(f, r, m);
        r[m] = -c[m] / f[1];
    }
    return r;
}

/// Reciprocal over Q by long division.
inline std::vector<Rational> naive_reciprocal(const std::vector<Rational>& a, std::size_t n)
{
    std::vector<Rational> b(n + 1);
    b[0] = Rational(1) / a[0];
    for (std::size_t m = 1; m <= n; ++m) {
        Rational acc;
        for (std::size_t i = 1; i <= m && i < a.size(); ++i)
            acc += a[i] * b[m - i];
        b[m] = -acc / a[0];
    }
    return b;
}

/// t_{n,k} = [x^n] g f^k for all k <= n <= N.
inline Triangle naive_riordan(const std::vector<Rational>& g, const std::vector<Rational>& f, std::size_t N)
{
    std::vector<std::vector<Rational>> rows(N + 1);
    std::vector<Rational> col = g;
    col.resize(N + 1);
    for (std::size_t k = 0; k <= N; ++k) {
        for (std::size_t n = k; n <= N; ++n) {
            rows[n].resize(n + 1);
            rows[n][k] = col[n];
        }
        col = naive_mul(col, f, N);
    }
    return Triangle(std::move(rows));
}

/// Inversion oracle by Lagrange inversion over Q[y]:
/// [x^{n+1}] Rev(x G) = (1/(n+1)) [x^n] G^{-(n+1)}.
inline Triangle lagrange_bang(const std::vector<PolyY>& G, std::size_t N)
{
    // 1/G over Q[y], G_0 a nonzero constant.
    std::vector<PolyY> inv(N + 1);
    const Rational c0 = Rational(1) / G[0].coeff(0);
    inv[0] = PolyY(c0);
    for (std::size_t m = 1; m <= N; ++m) {
        PolyY acc;
        for (std::size_t i = 1; i <= m && i < G.size(); ++i)
            acc += G[i] * inv[m - i];
        inv[m] = (-acc).scaled(c0);
    }
    std::vector<std::vector<Rational>> rows(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
        const auto p = naive_pow(inv, n + 1, n)[n].scaled(Rational(1L, static_cast<long>(n + 1)));
        rows[n].resize(n + 1);
        for (std::size_t k = 0; k <= n; ++k)
            rows[n][k] = p.coeff(k);
    }
    return Triangle(std::move(rows));
}

/// Bivariate gf coefficients of a triangle: entry n is sum_k t_{n,k} y^k.
inline std::vector<PolyY> rows_as_polys(const Triangle& t)
{
    std::vector<PolyY> out;
    for (const auto& row : t.data())
        out.emplace_back(row);
    return out;
}

/// Plain matrix product over Q on full square arrays.
inline Triangle naive_matmul(const Triangle& a, const Triangle& b)
{
    const std::size_t N = a.rows();
    std::vector<std::vector<Rational>> out(N, std::vector<Rational>(N));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            for (std::size_t l = 0; l < N; ++l)
                out[i][j] += a.at(i, l) * b.at(l, j);
    return Triangle(std::move(out));
}

inline Triangle from_longs(const std::vector<std::vector<long>>& rows) { return riordan::make_triangle(rows); }

inline std::vector<Rational> rationals(std::initializer_list<long> v)
{
    return std::vector<Rational>(v.begin(), v.end());
}

}  // namespace testing_support
