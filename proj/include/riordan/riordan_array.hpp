#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "riordan/supplier.hpp"
#include "riordan/triangle.hpp"

namespace riordan {

/// Ordinary Riordan array (g, f), entry t_{n,k} = [x^n] g f^k.
///
/// g(0) may be any nonzero rational (signed variants such as -1/(1+rx) are
/// legitimate members of the group); f(0) = 0 and f'(0) != 0. These are
/// checked on order-1 prefixes at construction.
class RiordanSpec {
public:
    RiordanSpec(RationalSupplier g, RationalSupplier f, std::string name = {});

    const RationalSupplier& g() const { return g_; }
    const RationalSupplier& f() const { return f_; }
    const std::string& name() const { return name_; }

private:
    RationalSupplier g_;
    RationalSupplier f_;
    std::string name_;
};

enum class Provenance { InitialColumn, RowSums, Diagonal, Custom };

struct SequenceView {
    std::vector<Rational> terms;
    Provenance provenance = Provenance::Custom;

    friend bool operator==(const SequenceView&, const SequenceView&) = default;
};

enum class Subgroup { Appell, Lagrange, Bell, Derivative };
enum class Direction { Forward, Inverse };

std::string_view to_string(Subgroup s);

/// (1, x)
RiordanSpec identity_array();
/// (1/(1-x), x/(1-x)), the binomial matrix.
RiordanSpec binomial_array();

Rational element_at(const RiordanSpec& spec, std::size_t n, std::size_t k);
/// Rows 0..N.
Triangle to_matrix(const RiordanSpec& spec, std::size_t N);

/// (g, f) . (u, v) = (g u(f), v(f))
RiordanSpec product(const RiordanSpec& a, const RiordanSpec& b);
/// (g, f)^{-1} = (1/g(fbar), fbar)
RiordanSpec inverse(const RiordanSpec& a);

/// g(x) h(f(x)) to order N.
SequenceView ftra_apply(const RiordanSpec& spec, const RationalSupplier& h, std::size_t N);

/// Subgroup membership of the order-N prefixes (membership "up to order N").
std::set<Subgroup> classify_subgroup(const RiordanSpec& spec, std::size_t N);

/// Left multiplication by the binomial matrix B or by B^{-1}.
SequenceView binomial_transform(const SequenceView& seq, Direction direction);
Triangle binomial_transform(const Triangle& t, Direction direction);

/// g / (1 - alpha x g)
RationalSupplier invert_alpha(const RationalSupplier& g, const Rational& alpha);
/// (g/(1 - alpha x g), f/(1 - alpha x g)); bivariate gf G/(1 - alpha x G).
RiordanSpec invert_transform_array(const RiordanSpec& spec, const Rational& alpha);

/// Entry (n, k) -> (n, n - k).
Triangle reversal(const Triangle& t);
SequenceView row_sums(const Triangle& t);
SequenceView initial_column(const Triangle& t);
SequenceView diagonal(const Triangle& t);

/// g / (1 - y f) as a series in x over Q[y], to order N.
Series<PolyY> bivariate_gf(const RiordanSpec& spec, std::size_t N);

}  // namespace riordan
