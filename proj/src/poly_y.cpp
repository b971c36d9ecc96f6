#include "riordan/poly_y.hpp"

#include <algorithm>
#include <sstream>

#include "riordan/error.hpp"

namespace riordan {

PolyY::PolyY(const Rational& constant)
{
    if (!constant.is_zero())
        coeffs_.push_back(constant);
}

PolyY::PolyY(std::initializer_list<Rational> coeffs) : coeffs_(coeffs)
{
    normalize();
}

PolyY::PolyY(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    normalize();
}

PolyY PolyY::monomial(const Rational& c, std::size_t power)
{
    std::vector<Rational> coeffs(power + 1);
    coeffs[power] = c;
    return PolyY(std::move(coeffs));
}

void PolyY::normalize()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

Rational PolyY::coeff(std::size_t k) const
{
    return k < coeffs_.size() ? coeffs_[k] : Rational();
}

PolyY PolyY::unit_inverse() const
{
    if (!is_unit())
        throw Error(ErrorKind::InvalidArgument, "polynomial " + to_string() + " is not a unit");
    return PolyY(coeffs_.front().unit_inverse());
}

PolyY PolyY::scaled(const Rational& factor) const
{
    if (factor.is_zero())
        return {};
    PolyY result = *this;
    for (auto& c : result.coeffs_)
        c *= factor;
    return result;
}

Rational PolyY::evaluate(const Rational& at) const
{
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * at + *it;
    return acc;
}

std::string PolyY::to_string() const
{
    if (coeffs_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c.is_zero())
            continue;
        const bool negative = c < Rational(0);
        const Rational mag = negative ? -c : c;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        if (k == 0 || !mag.is_one())
            os << mag;
        if (k >= 1)
            os << (k == 0 || mag.is_one() ? "" : "*") << "y";
        if (k >= 2)
            os << "^" << k;
    }
    return os.str();
}

PolyY PolyY::operator-() const
{
    PolyY result = *this;
    for (auto& c : result.coeffs_)
        c = -c;
    return result;
}

PolyY& PolyY::operator+=(const PolyY& o)
{
    if (coeffs_.size() < o.coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

PolyY& PolyY::operator-=(const PolyY& o)
{
    if (coeffs_.size() < o.coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

PolyY operator*(const PolyY& a, const PolyY& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return PolyY(std::move(out));
}

PolyY& PolyY::operator*=(const PolyY& o)
{
    *this = *this * o;
    return *this;
}

}  // namespace riordan
