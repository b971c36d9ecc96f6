#include "riordan/contfrac.hpp"

#include "riordan/inversion.hpp"

namespace riordan {

namespace {

Series<PolyY> term_series(const CFTerm& term, std::size_t N)
{
    std::vector<PolyY> c(term);
    c.resize(std::max(c.size(), N + 1));
    return Series<PolyY>(std::move(c)).truncated(N);
}

Series<PolyY> unit_reciprocal(const Series<PolyY>& s, std::size_t level)
{
    if (!s[0].is_unit())
        throw Error(ErrorKind::NonUnitDenominator,
                    "level " + std::to_string(level) + " has constant term " + s[0].to_string());
    return reciprocal(s);
}

}  // namespace

CFSpec jacobi_cf(std::function<PolyY(std::size_t)> b, std::function<PolyY(std::size_t)> lambda, std::string name)
{
    CFSpec spec;
    spec.denominator = [b = std::move(b)](std::size_t i) { return CFTerm{PolyY(1), -b(i)}; };
    spec.numerator = [lambda = std::move(lambda)](std::size_t i) { return CFTerm{PolyY(), PolyY(), lambda(i)}; };
    spec.name = std::move(name);
    return spec;
}

Series<PolyY> eval_cf_at_depth(const CFSpec& spec, std::size_t depth, std::size_t N)
{
    auto denominator = [&](std::size_t i) {
        auto b = term_series(spec.denominator(i), N);
        if (!b[0].is_unit())
            throw Error(ErrorKind::NonUnitDenominator, "partial denominator " + std::to_string(i) +
                                                           " has constant term " + b[0].to_string());
        return b;
    };
    Series<PolyY> tail = denominator(depth);
    for (std::size_t i = depth; i >= 1; --i)
        tail = denominator(i - 1) - term_series(spec.numerator(i), N) * unit_reciprocal(tail, i);
    return unit_reciprocal(tail, 0);
}

Series<PolyY> eval_cf(const CFSpec& spec, std::size_t N)
{
    if (spec.policy.kind == DepthPolicy::Kind::Fixed)
        return eval_cf_at_depth(spec, spec.policy.depth, N);
    const std::size_t cap = 4 * N + 8;
    Series<PolyY> previous = eval_cf_at_depth(spec, 0, N);
    for (std::size_t depth = 1; depth <= cap; ++depth) {
        Series<PolyY> current = eval_cf_at_depth(spec, depth, N);
        if (current == previous)
            return current;
        previous = std::move(current);
    }
    throw Error(ErrorKind::NoStabilization,
                "'" + spec.name + "' did not stabilize within " + std::to_string(cap) + " levels");
}

bool verify_cf_against_bang(const CFSpec& cf, const RiordanSpec& spec, std::size_t N)
{
    return verify_cf_against_triangle(cf, bang_riordan(spec, N));
}

bool verify_cf_against_triangle(const CFSpec& cf, const Triangle& t)
{
    return eval_cf(cf, t.rows() - 1) == to_bivariate(t);
}

}  // namespace riordan
