#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "riordan/series.hpp"

namespace riordan {

/// Lower-triangular matrix; row n holds entries (n, 0) .. (n, n).
template <CoefficientRing R>
class LowerTriangular {
public:
    LowerTriangular() = default;

    /// Rows may be given shorter than n + 1 (missing entries are zero); a
    /// nonzero entry above the diagonal throws NotTriangular.
    explicit LowerTriangular(std::vector<std::vector<R>> rows) : rows_(std::move(rows))
    {
        for (std::size_t n = 0; n < rows_.size(); ++n) {
            auto& row = rows_[n];
            for (std::size_t k = n + 1; k < row.size(); ++k)
                if (!row[k].is_zero())
                    throw Error(ErrorKind::NotTriangular,
                                "entry (" + std::to_string(n) + "," + std::to_string(k) + ") above the diagonal");
            row.resize(n + 1);
        }
    }

    static LowerTriangular identity(std::size_t rows)
    {
        std::vector<std::vector<R>> r(rows);
        for (std::size_t n = 0; n < rows; ++n) {
            r[n].resize(n + 1);
            r[n][n] = R(Rational(1));
        }
        return LowerTriangular(std::move(r));
    }

    std::size_t rows() const { return rows_.size(); }
    const std::vector<std::vector<R>>& data() const { return rows_; }
    const std::vector<R>& row(std::size_t n) const { return rows_.at(n); }

    /// Entry (n, k); zero above the diagonal.
    R at(std::size_t n, std::size_t k) const
    {
        if (n >= rows_.size())
            throw Error(ErrorKind::InvalidArgument, "row " + std::to_string(n) + " out of range");
        return k <= n ? rows_[n][k] : R{};
    }

    LowerTriangular truncated(std::size_t rows) const
    {
        if (rows > rows_.size())
            throw Error(ErrorKind::InvalidArgument, "cannot extend a triangle by truncation");
        return LowerTriangular(std::vector<std::vector<R>>(rows_.begin(), rows_.begin() + static_cast<long>(rows)));
    }

    friend LowerTriangular operator*(const LowerTriangular& a, const LowerTriangular& b)
    {
        if (a.rows() != b.rows())
            throw Error(ErrorKind::InvalidArgument, "triangle sizes differ");
        std::vector<std::vector<R>> out(a.rows());
        for (std::size_t n = 0; n < a.rows(); ++n) {
            out[n].resize(n + 1);
            for (std::size_t k = 0; k <= n; ++k) {
                R acc{};
                for (std::size_t j = k; j <= n; ++j)
                    acc = acc + a.rows_[n][j] * b.rows_[j][k];
                out[n][k] = acc;
            }
        }
        return LowerTriangular(std::move(out));
    }

    /// Exact inverse by forward substitution; every diagonal entry must be a unit.
    LowerTriangular inverse() const
    {
        const std::size_t N = rows();
        std::vector<std::vector<R>> inv(N);
        for (std::size_t n = 0; n < N; ++n) {
            if (!rows_[n][n].is_unit())
                throw Error(ErrorKind::NonUnitConstantTerm, "diagonal entry is not a unit");
            inv[n].resize(n + 1);
        }
        for (std::size_t k = 0; k < N; ++k) {
            inv[k][k] = rows_[k][k].unit_inverse();
            for (std::size_t n = k + 1; n < N; ++n) {
                R acc{};
                for (std::size_t j = k; j < n; ++j)
                    acc = acc + rows_[n][j] * inv[j][k];
                inv[n][k] = -(rows_[n][n].unit_inverse() * acc);
            }
        }
        return LowerTriangular(std::move(inv));
    }

    friend bool operator==(const LowerTriangular&, const LowerTriangular&) = default;

private:
    std::vector<std::vector<R>> rows_;
};

using Triangle = LowerTriangular<Rational>;

/// Triangle over Q from integer literals, for tests and tables.
Triangle make_triangle(const std::vector<std::vector<long>>& rows);

bool is_integral(const Triangle& t);
/// Throws NotIntegral naming the first non-integer entry.
void assert_integral(const Triangle& t);

/// Bivariate generating function sum t_{n,k} x^n y^k, order = rows - 1.
Series<PolyY> to_bivariate(const Triangle& t);
/// Inverse of to_bivariate; throws NotTriangular if some x^n coefficient has degree > n.
Triangle from_bivariate(const Series<PolyY>& g);

}  // namespace riordan
