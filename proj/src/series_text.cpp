#include "riordan/series_text.hpp"

#include <cctype>
#include <string>

namespace riordan {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos)
            return parts;
        start = pos + 1;
    }
}

}  // namespace

std::vector<Rational> parse_rational_list(std::string_view text)
{
    text = trim(text);
    if (text.empty())
        throw Error(ErrorKind::ParseError, "empty coefficient list");
    std::vector<Rational> out;
    for (auto part : split(text, ','))
        out.push_back(Rational::parse(trim(part)));
    return out;
}

RationalSupplier parse_series(std::string_view text)
{
    text = trim(text);
    if (text.empty())
        throw Error(ErrorKind::ParseError, "empty series description");

    if (text.starts_with("x*"))
        return suppliers::times_x(parse_series(text.substr(2)));
    if (text.front() == '-' && !text.substr(1).empty() && !std::isdigit(static_cast<unsigned char>(text[1])))
        return suppliers::negated(parse_series(text.substr(1)));

    if (text == "x")
        return suppliers::polynomial({0, 1});
    if (text == "fact")
        return suppliers::factorial_series();
    if (text == "cosh")
        return suppliers::cosh_series();
    if (text == "sinh")
        return suppliers::sinh_series();
    if (text == "besseli1")
        return suppliers::bessel_i1_ratio();
    if (text == "exp")
        return suppliers::exponential();

    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
        return suppliers::polynomial(parse_rational_list(text));

    const auto head = text.substr(0, colon);
    const auto body = text.substr(colon + 1);
    if (head == "poly")
        return suppliers::polynomial(parse_rational_list(body));
    if (head == "prefix")
        return suppliers::finite_prefix(parse_rational_list(body));
    if (head == "exp")
        return suppliers::exponential(Rational::parse(body));
    if (head == "rat") {
        const auto parts = split(body, ';');
        if (parts.size() < 2 || parts.size() > 3)
            throw Error(ErrorKind::ParseError, "rat: expects N;D or N;D;p, got '" + std::string(body) + "'");
        long p = 1;
        if (parts.size() == 3) {
            const Rational q = Rational::parse(parts[2]);
            if (!q.is_integer() || !q.numerator().fits_slong_p())
                throw Error(ErrorKind::ParseError, "rat: power must be an integer");
            p = q.numerator().get_si();
        }
        auto den = parse_rational_list(parts[1]);
        if (den.front().is_zero())
            throw Error(ErrorKind::ParseError, "rat: denominator needs a nonzero constant term");
        return suppliers::rational_function(parse_rational_list(parts[0]), std::move(den), p);
    }
    throw Error(ErrorKind::ParseError, "unknown series form '" + std::string(head) + "'");
}

FamilyParam parse_family_param(std::string_view text)
{
    text = trim(text);
    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw Error(ErrorKind::ParseError, "family needs FAMILY:param, got '" + std::string(text) + "'");
    return {parse_family(text.substr(0, colon)), Rational::parse(text.substr(colon + 1))};
}

}  // namespace riordan
