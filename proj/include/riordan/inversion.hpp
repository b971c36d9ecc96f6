#pragma once

#include <cstddef>

#include "riordan/exp_riordan.hpp"
#include "riordan/riordan_array.hpp"

namespace riordan {

/// ((-1)^k / (n+1)) C(n+1, k), the scalar that links an array's inversion to
/// ordinary Riordan arrays built from Rev(x g).
Rational inversion_prefactor(std::size_t n, std::size_t k);

/// Inversion of an array given by its bivariate generating function G(x, y):
/// rows 0..N of (1/x) Rev_x(x G(x, y)). G(0, y) must be a unit constant.
/// The input need not be a Riordan array; triangular support is checked on
/// the output (NotTriangular otherwise).
Triangle bang_bivariate(const BivariateSupplier& G, std::size_t N);
/// Same, with the array given by its first rows (N = rows - 1).
Triangle bang_bivariate(const Triangle& t);

/// Inversion of (g, f) through its bivariate gf g / (1 - y f).
Triangle bang_riordan(const RiordanSpec& spec, std::size_t N);

/// t^_{n,k} = ((-1)^k/(n+1)) C(n+1,k) [x^n] f^k (1/g)^{n+1}.
Rational bang_closed_term(const RiordanSpec& spec, std::size_t n, std::size_t k);

/// Rev(x g) for a series g with unit constant term.
RationalSupplier reverted_xg(const RationalSupplier& g);

/// ((Rev(x g))', Rev(x g)), a member of the derivative subgroup.
RiordanSpec derivative_array_of_reverted(const RationalSupplier& g);

/// ((Rev(x g))', Rev(x g)) . (1, f) = ((Rev(x g))', f(Rev(x g))).
RiordanSpec factorized_inner(const RiordanSpec& spec);

/// Inner factorized array scaled entrywise by inversion_prefactor.
Triangle factorized_bang(const RiordanSpec& spec, std::size_t N);

struct TrianglePair {
    Triangle first;
    Triangle second;
};

/// For an Appell array (g, x): first = ((Rev(xg))', Rev(xg)), second = ((xg)', xg)^{-1}.
TrianglePair appell_identity(const RiordanSpec& spec, std::size_t N);

/// For a Lagrange array (1, f): t^_{n,k} = inversion_prefactor(n, k) t_{n,k}.
Triangle lagrange_subgroup_bang(const RiordanSpec& spec, std::size_t N);

/// (1/x) Rev(x g) as a lazy series.
RationalSupplier revert_transform(const RationalSupplier& g);
SequenceView revert_transform_sequence(const RationalSupplier& g, std::size_t N);

struct BellInversion {
    ExpRiordanSpec spec;
    Triangle matrix;
};

/// The inversion of the Bell matrix (g, x g) is the exponential array
/// [(revert transform of g)_e, -x].
BellInversion bell_bang_exp(const RationalSupplier& g, std::size_t N);

/// Reverse direction: the Bell matrix (h, x h) whose inversion is [u, -x]
/// (h is the revert transform of the ordinary counterpart of u).
RiordanSpec bell_source_from_exp(const RationalSupplier& u);

/// Checks revert(invert(g)) = B^{-1} revert(g) to order N.
bool prop1_check(const RationalSupplier& g, std::size_t N);

bool is_self_dual(const RiordanSpec& spec, std::size_t N);
bool is_involution(const RiordanSpec& spec, std::size_t N);

/// reversal(bang(A)) == bang(reversal(A)) on the given rows.
bool bang_reversal_commutes(const Triangle& t);
bool bang_reversal_commutes(const RiordanSpec& spec, std::size_t N);

}  // namespace riordan
