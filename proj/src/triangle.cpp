#include "riordan/triangle.hpp"

namespace riordan {

Triangle make_triangle(const std::vector<std::vector<long>>& rows)
{
    std::vector<std::vector<Rational>> r;
    r.reserve(rows.size());
    for (const auto& row : rows)
        r.emplace_back(row.begin(), row.end());
    return Triangle(std::move(r));
}

bool is_integral(const Triangle& t)
{
    for (const auto& row : t.data())
        for (const auto& v : row)
            if (!v.is_integer())
                return false;
    return true;
}

void assert_integral(const Triangle& t)
{
    for (std::size_t n = 0; n < t.rows(); ++n)
        for (std::size_t k = 0; k <= n; ++k)
            if (!t.at(n, k).is_integer())
                throw Error(ErrorKind::NotIntegral, "entry (" + std::to_string(n) + "," + std::to_string(k) +
                                                        ") = " + t.at(n, k).to_string());
}

Series<PolyY> to_bivariate(const Triangle& t)
{
    if (t.rows() == 0)
        throw Error(ErrorKind::InvalidArgument, "empty triangle");
    std::vector<PolyY> c;
    c.reserve(t.rows());
    for (const auto& row : t.data())
        c.emplace_back(row);
    return Series<PolyY>(std::move(c));
}

Triangle from_bivariate(const Series<PolyY>& g)
{
    std::vector<std::vector<Rational>> rows(g.order() + 1);
    for (std::size_t n = 0; n <= g.order(); ++n) {
        if (g[n].size() > n + 1)
            throw Error(ErrorKind::NotTriangular, "coefficient of x^" + std::to_string(n) + " has y-degree " +
                                                      std::to_string(g[n].size() - 1));
        rows[n] = g[n].coeffs();
        rows[n].resize(n + 1);
    }
    return Triangle(std::move(rows));
}

}  // namespace riordan
