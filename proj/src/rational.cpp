#include "riordan/rational.hpp"

#include <cctype>

#include "riordan/error.hpp"

namespace riordan {

namespace {

bool is_decimal_integer(std::string_view text)
{
    if (!text.empty() && (text.front() == '-' || text.front() == '+'))
        text.remove_prefix(1);
    if (text.empty())
        return false;
    for (char c : text)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

Integer parse_integer(std::string_view text)
{
    if (!text.empty() && text.front() == '+')
        text.remove_prefix(1);
    return Integer(std::string(text), 10);
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw Error(ErrorKind::InvalidArgument, "zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(mpq_class value) : q_(std::move(value))
{
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);

    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    if (!is_decimal_integer(num))
        throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
    if (slash == std::string_view::npos)
        return Rational(parse_integer(num));

    const std::string_view den = text.substr(slash + 1);
    if (!is_decimal_integer(den) || den.front() == '-' || den.front() == '+')
        throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
    const Integer d = parse_integer(den);
    if (d == 0)
        throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    return Rational(parse_integer(num), d);
}

Rational Rational::unit_inverse() const
{
    if (is_zero())
        throw Error(ErrorKind::InvalidArgument, "division by zero");
    return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw Error(ErrorKind::InvalidArgument, "division by zero");
    q_ /= o.q_;
    return *this;
}

Integer Rational::to_integer() const
{
    if (!is_integer())
        throw Error(ErrorKind::NotIntegral, to_string() + " is not an integer");
    return q_.get_num();
}

Integer factorial(unsigned long n)
{
    Integer result;
    mpz_fac_ui(result.get_mpz_t(), n);
    return result;
}

Integer binomial(const Integer& n, long k)
{
    if (k < 0)
        return 0;
    Integer result;
    // mpz_bin_ui handles negative n with the falling-factorial convention.
    mpz_bin_ui(result.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
    return result;
}

Integer binomial(long n, long k)
{
    return binomial(Integer(n), k);
}

Rational power(const Rational& base, unsigned long exponent)
{
    Rational result(1);
    for (unsigned long i = 0; i < exponent; ++i)
        result *= base;
    return result;
}

}  // namespace riordan
