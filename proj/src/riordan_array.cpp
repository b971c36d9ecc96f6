#include "riordan/riordan_array.hpp"

#include <algorithm>

namespace riordan {

RiordanSpec::RiordanSpec(RationalSupplier g, RationalSupplier f, std::string name)
    : g_(std::move(g)), f_(std::move(f)), name_(std::move(name))
{
    const auto g1 = g_(1);
    const auto f1 = f_(1);
    if (g1[0].is_zero())
        throw Error(ErrorKind::InvalidArgument, "Riordan array needs g(0) != 0");
    if (!f1[0].is_zero() || f1[1].is_zero())
        throw Error(ErrorKind::InvalidArgument, "Riordan array needs f(0) = 0 and f'(0) != 0");
}

std::string_view to_string(Subgroup s)
{
    switch (s) {
    case Subgroup::Appell: return "Appell";
    case Subgroup::Lagrange: return "Lagrange";
    case Subgroup::Bell: return "Bell";
    case Subgroup::Derivative: return "Derivative";
    }
    return "?";
}

RiordanSpec identity_array()
{
    return RiordanSpec(suppliers::constant(1), suppliers::polynomial({0, 1}), "(1,x)");
}

RiordanSpec binomial_array()
{
    return RiordanSpec(suppliers::rational_function({1}, {1, -1}), suppliers::rational_function({0, 1}, {1, -1}),
                       "binomial");
}

Rational element_at(const RiordanSpec& spec, std::size_t n, std::size_t k)
{
    if (k > n)
        throw Error(ErrorKind::IndexAboveDiagonal, "k = " + std::to_string(k) + " > n = " + std::to_string(n));
    return (spec.g()(n) * pow(spec.f()(n), k))[n];
}

Triangle to_matrix(const RiordanSpec& spec, std::size_t N)
{
    const auto f = spec.f()(N);
    auto column = spec.g()(N);
    std::vector<std::vector<Rational>> rows(N + 1);
    for (std::size_t n = 0; n <= N; ++n)
        rows[n].resize(n + 1);
    for (std::size_t k = 0; k <= N; ++k) {
        for (std::size_t n = k; n <= N; ++n)
            rows[n][k] = column[n];
        column = column * f;
    }
    return Triangle(std::move(rows));
}

RiordanSpec product(const RiordanSpec& a, const RiordanSpec& b)
{
    RationalSupplier g([a, b](std::size_t n) { return a.g()(n) * compose(b.g()(n), a.f()(n)); });
    RationalSupplier f([a, b](std::size_t n) { return compose(b.f()(n), a.f()(n)); });
    return RiordanSpec(std::move(g), std::move(f), "(" + a.name() + ")*(" + b.name() + ")");
}

RiordanSpec inverse(const RiordanSpec& a)
{
    RationalSupplier fbar([a](std::size_t n) { return revert(a.f()(std::max<std::size_t>(n, 1))).truncated(n); });
    RationalSupplier g([a, fbar](std::size_t n) { return reciprocal(compose(a.g()(n), fbar(n))); });
    return RiordanSpec(std::move(g), std::move(fbar), "(" + a.name() + ")^-1");
}

SequenceView ftra_apply(const RiordanSpec& spec, const RationalSupplier& h, std::size_t N)
{
    const auto s = spec.g()(N) * compose(h(N), spec.f()(N));
    return {s.coeffs(), Provenance::Custom};
}

std::set<Subgroup> classify_subgroup(const RiordanSpec& spec, std::size_t N)
{
    std::set<Subgroup> out;
    const auto g = spec.g()(N);
    const auto f = spec.f()(N);
    if (f == RationalSeries::x(N))
        out.insert(Subgroup::Appell);
    if (g == RationalSeries::constant(1, N))
        out.insert(Subgroup::Lagrange);
    if (f == (N == 0 ? RationalSeries::zero(0) : g.truncated(N - 1).mul_x()))
        out.insert(Subgroup::Bell);
    if (g == derivative(spec.f()(N + 1)))
        out.insert(Subgroup::Derivative);
    return out;
}

SequenceView binomial_transform(const SequenceView& seq, Direction direction)
{
    const std::size_t len = seq.terms.size();
    std::vector<Rational> out(len);
    for (std::size_t n = 0; n < len; ++n)
        for (std::size_t k = 0; k <= n; ++k) {
            Rational b(binomial(static_cast<long>(n), static_cast<long>(k)));
            if (direction == Direction::Inverse && (n - k) % 2 == 1)
                b = -b;
            out[n] += b * seq.terms[k];
        }
    return {std::move(out), seq.provenance};
}

Triangle binomial_transform(const Triangle& t, Direction direction)
{
    if (t.rows() == 0)
        return t;
    const auto B = to_matrix(direction == Direction::Forward ? binomial_array() : inverse(binomial_array()),
                             t.rows() - 1);
    return B * t;
}

RationalSupplier invert_alpha(const RationalSupplier& g, const Rational& alpha)
{
    return RationalSupplier(
        [g, alpha](std::size_t n) {
            const auto gn = g(n);
            const auto denom = RationalSeries::constant(1, n) - (n == 0 ? RationalSeries::zero(0)
                                                                        : gn.truncated(n - 1).mul_x().scaled(alpha));
            return gn * reciprocal(denom);
        },
        "invert(" + alpha.to_string() + ")");
}

RiordanSpec invert_transform_array(const RiordanSpec& spec, const Rational& alpha)
{
    const RationalSupplier one_minus([spec, alpha](std::size_t n) {
        const auto gn = spec.g()(n);
        return reciprocal(RationalSeries::constant(1, n) -
                          (n == 0 ? RationalSeries::zero(0) : gn.truncated(n - 1).mul_x().scaled(alpha)));
    });
    return RiordanSpec(suppliers::product(spec.g(), one_minus), suppliers::product(spec.f(), one_minus),
                       "invert(" + alpha.to_string() + ")(" + spec.name() + ")");
}

Triangle reversal(const Triangle& t)
{
    std::vector<std::vector<Rational>> rows = t.data();
    for (auto& row : rows)
        std::reverse(row.begin(), row.end());
    return Triangle(std::move(rows));
}

SequenceView row_sums(const Triangle& t)
{
    std::vector<Rational> out;
    for (const auto& row : t.data()) {
        Rational s;
        for (const auto& v : row)
            s += v;
        out.push_back(s);
    }
    return {std::move(out), Provenance::RowSums};
}

SequenceView initial_column(const Triangle& t)
{
    std::vector<Rational> out;
    for (const auto& row : t.data())
        out.push_back(row.front());
    return {std::move(out), Provenance::InitialColumn};
}

SequenceView diagonal(const Triangle& t)
{
    std::vector<Rational> out;
    for (const auto& row : t.data())
        out.push_back(row.back());
    return {std::move(out), Provenance::Diagonal};
}

Series<PolyY> bivariate_gf(const RiordanSpec& spec, std::size_t N)
{
    const auto yf = PolyY::y() * lift(spec.f()(N));
    return lift(spec.g()(N)) * reciprocal(Series<PolyY>::constant(PolyY(1), N) - yf);
}

}  // namespace riordan
