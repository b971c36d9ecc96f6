#include "riordan/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "riordan/exp_riordan.hpp"
#include "riordan/inversion.hpp"
#include "riordan/series_text.hpp"

namespace riordan {

using nlohmann::json;

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& field, const std::string& what)
{
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ", field " + field + ": " + what);
}

Rational number_of(const json& j)
{
    if (j.is_number_integer())
        return Rational(j.get<long>());
    if (j.is_string())
        return Rational::parse(j.get<std::string>());
    throw Error(ErrorKind::ParseError, "expected an integer or a decimal string, got " + j.dump());
}

PolyY poly_of(const json& j)
{
    if (!j.is_array())
        return PolyY(number_of(j));
    std::vector<Rational> c;
    for (const auto& e : j)
        c.push_back(number_of(e));
    return PolyY(std::move(c));
}

CFTerm x_poly_of(const json& j)
{
    if (!j.is_array())
        throw Error(ErrorKind::ParseError, "CF term must be a list of x-coefficients, got " + j.dump());
    CFTerm t;
    for (const auto& e : j)
        t.push_back(poly_of(e));
    return t;
}

std::function<CFTerm(std::size_t)> cf_terms_of(const json& j)
{
    if (!j.is_object())
        throw Error(ErrorKind::ParseError, "CF terms must be an object with at/const/step");
    std::map<std::size_t, CFTerm> at;
    if (j.contains("at"))
        for (const auto& [key, value] : j.at("at").items())
            at[std::stoul(key)] = x_poly_of(value);
    const CFTerm base = j.contains("const") ? x_poly_of(j.at("const")) : CFTerm{};
    const CFTerm step = j.contains("step") ? x_poly_of(j.at("step")) : CFTerm{};
    return [at = std::move(at), base, step](std::size_t i) {
        if (const auto it = at.find(i); it != at.end())
            return it->second;
        CFTerm t(std::max(base.size(), step.size()));
        for (std::size_t p = 0; p < t.size(); ++p) {
            if (p < base.size())
                t[p] += base[p];
            if (p < step.size())
                t[p] += step[p].scaled(Rational(static_cast<long>(i)));
        }
        return t;
    };
}

RiordanSpec ordinary_spec_of(const json& s)
{
    auto spec = [&] {
        if (s.contains("family"))
            return family_spec({parse_family(s.at("family").get<std::string>()), number_of(s.at("param"))});
        return RiordanSpec(parse_series(s.at("g").get<std::string>()), parse_series(s.at("f").get<std::string>()),
                           s.at("g").get<std::string>() + " | " + s.at("f").get<std::string>());
    }();
    if (s.contains("invert_alpha"))
        spec = invert_transform_array(spec, number_of(s.at("invert_alpha")));
    if (s.value("inverse", false))
        spec = inverse(spec);
    if (s.value("inner", false))
        spec = derivative_array_of_reverted(spec.g());
    return spec;
}

ExpRiordanSpec exp_spec_of(const json& s)
{
    return ExpRiordanSpec(parse_series(s.at("u").get<std::string>()), parse_series(s.at("v").get<std::string>()),
                          s.at("u").get<std::string>() + " | " + s.at("v").get<std::string>());
}

Triangle triangle_of(const json& s)
{
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : s.at("triangle")) {
        rows.emplace_back();
        for (const auto& v : row)
            rows.back().push_back(number_of(v));
    }
    return Triangle(std::move(rows));
}

RationalSupplier sequence_of(const json& s)
{
    if (s.contains("seq")) {
        std::vector<Rational> terms;
        for (const auto& v : s.at("seq"))
            terms.push_back(number_of(v));
        return suppliers::finite_prefix(std::move(terms));
    }
    return parse_series(s.at("series").get<std::string>());
}

Triangle transform_of(const json& j, const Triangle& t)
{
    const auto name = j.get<std::string>();
    if (name == "binomial")
        return binomial_transform(t, Direction::Forward);
    if (name == "inverse_binomial")
        return binomial_transform(t, Direction::Inverse);
    if (name == "reversal")
        return reversal(t);
    throw Error(ErrorKind::ParseError, "unknown transform '" + name + "'");
}

Rows column(const std::vector<Rational>& terms)
{
    Rows rows;
    for (const auto& t : terms)
        rows.push_back({t});
    return rows;
}

template <class E>
E enum_of(const json& j, std::initializer_list<std::pair<const char*, E>> names)
{
    const auto text = j.get<std::string>();
    for (const auto& [name, value] : names)
        if (text == name)
            return value;
    throw Error(ErrorKind::ParseError, "unknown value '" + text + "'");
}

bool compatible(CaseKind kind, Operation op)
{
    switch (kind) {
    case CaseKind::Ordinary:
    case CaseKind::Bivariate: return op == Operation::Matrix || op == Operation::Bang || op == Operation::RowSums;
    case CaseKind::Exponential:
        return op == Operation::Matrix || op == Operation::ExpBang || op == Operation::RowSums;
    case CaseKind::Sequence: return op == Operation::RevertSeq;
    case CaseKind::ContinuedFraction: return op == Operation::CfEval;
    }
    return false;
}

void validate_source(const CorpusCase& c)
{
    const json& s = c.source;
    for (const char* key : {"pre", "post"})
        if (s.contains(key))
            (void)transform_of(s.at(key), Triangle::identity(1));
    switch (c.kind) {
    case CaseKind::Ordinary: (void)ordinary_spec_of(s); break;
    case CaseKind::Exponential: (void)exp_spec_of(s); break;
    case CaseKind::Bivariate: (void)triangle_of(s); break;
    case CaseKind::Sequence: (void)sequence_of(s); break;
    case CaseKind::ContinuedFraction: (void)parse_cf_spec(s.at("cf")); break;
    }
}

CorpusCase parse_case(const json& j, std::size_t line)
{
    if (!j.is_object())
        fail(line, "<record>", "a case must be a JSON object");
    CorpusCase c;
    c.line = line;
    auto field = [&](const char* name) -> const json& {
        if (!j.contains(name))
            fail(line, name, "missing");
        return j.at(name);
    };
    auto guarded = [&](const char* name, auto&& body) {
        try {
            body();
        }
        catch (const Error& e) {
            fail(line, name, e.what());
        }
        catch (const json::exception& e) {
            fail(line, name, e.what());
        }
    };

    guarded("id", [&] { c.id = field("id").get<std::string>(); });
    guarded("kind", [&] {
        c.kind = enum_of<CaseKind>(field("kind"), {{"ordinary", CaseKind::Ordinary},
                                                   {"exponential", CaseKind::Exponential},
                                                   {"bivariate", CaseKind::Bivariate},
                                                   {"sequence", CaseKind::Sequence},
                                                   {"cf", CaseKind::ContinuedFraction}});
    });
    guarded("operation", [&] {
        c.operation = enum_of<Operation>(field("operation"), {{"matrix", Operation::Matrix},
                                                              {"bang", Operation::Bang},
                                                              {"exp_bang", Operation::ExpBang},
                                                              {"revert_seq", Operation::RevertSeq},
                                                              {"row_sums", Operation::RowSums},
                                                              {"cf_eval", Operation::CfEval}});
    });
    if (!compatible(c.kind, c.operation))
        fail(line, "operation", "not applicable to this kind");
    guarded("expected", [&] {
        const json& e = field("expected");
        if (!e.is_array() || e.empty())
            throw Error(ErrorKind::ParseError, "must be a non-empty list");
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i].is_array()) {
                c.expected.emplace_back();
                for (std::size_t k = 0; k < e[i].size(); ++k) {
                    try {
                        c.expected.back().push_back(number_of(e[i][k]));
                    }
                    catch (const Error& err) {
                        throw Error(ErrorKind::ParseError,
                                    "[" + std::to_string(i) + "][" + std::to_string(k) + "] " + err.what());
                    }
                }
            }
            else {
                try {
                    c.expected.push_back({number_of(e[i])});
                }
                catch (const Error& err) {
                    throw Error(ErrorKind::ParseError, "[" + std::to_string(i) + "] " + err.what());
                }
            }
        }
    });
    if (j.contains("oeis"))
        guarded("oeis", [&] { c.oeis = j.at("oeis").get<std::string>(); });
    if (j.contains("expectation"))
        guarded("expectation", [&] {
            c.expectation = enum_of<Expectation>(
                j.at("expectation"),
                {{"pass", Expectation::Pass}, {"known_discrepancy", Expectation::KnownDiscrepancy}});
        });
    if (j.contains("N"))
        guarded("N", [&] {
            if (!j.at("N").is_number_unsigned())
                throw Error(ErrorKind::ParseError, "must be a non-negative integer");
            c.order = j.at("N").get<std::size_t>();
        });
    if (j.contains("target"))
        guarded("target", [&] {
            c.target_source = enum_of<bool>(j.at("target"), {{"source", true}, {"inversion", false}});
        });
    if (j.contains("mismatch_at"))
        guarded("mismatch_at", [&] {
            const auto& m = j.at("mismatch_at");
            c.recorded_mismatch = Cell{m.at(0).get<std::size_t>(), m.at(1).get<std::size_t>()};
        });
    if (j.contains("error_kind"))
        guarded("error_kind", [&] { c.recorded_error = j.at("error_kind").get<std::string>(); });
    guarded("source", [&] {
        c.source = field("source");
        if (!c.source.is_object())
            throw Error(ErrorKind::ParseError, "must be an object");
        validate_source(c);
    });
    return c;
}

std::optional<Mismatch> compare(const Rows& got, const Rows& want)
{
    for (std::size_t n = 0; n < want.size(); ++n) {
        if (n >= got.size())
            return Mismatch{{n, 0}, "<missing>", want[n].empty() ? "" : want[n][0].to_string()};
        const std::size_t width = std::max(got[n].size(), want[n].size());
        for (std::size_t k = 0; k < width; ++k) {
            const Rational g = k < got[n].size() ? got[n][k] : Rational();
            const Rational w = k < want[n].size() ? want[n][k] : Rational();
            if (g != w)
                return Mismatch{{n, k}, g.to_string(), w.to_string()};
        }
    }
    return std::nullopt;
}

}  // namespace

Rows series_rows(const Series<PolyY>& s)
{
    const bool constant = std::all_of(s.coeffs().begin(), s.coeffs().end(),
                                      [](const PolyY& p) { return p.is_constant(); });
    Rows rows;
    for (std::size_t n = 0; n <= s.order(); ++n) {
        if (constant) {
            rows.push_back({s[n].coeff(0)});
            continue;
        }
        std::vector<Rational> row = s[n].coeffs();
        row.resize(std::max(row.size(), n + 1));
        rows.push_back(std::move(row));
    }
    return rows;
}

CFSpec parse_cf_spec(const json& j)
{
    try {
        CFSpec spec;
        spec.name = j.value("name", std::string("cf"));
        spec.numerator = cf_terms_of(j.at("numerator"));
        spec.denominator = cf_terms_of(j.at("denominator"));
        if (j.contains("depth") && j.at("depth").is_number_unsigned())
            spec.policy = DepthPolicy::fixed(j.at("depth").get<std::size_t>());
        else if (j.contains("depth") && j.at("depth") != "stabilize")
            throw Error(ErrorKind::ParseError, "depth must be a non-negative integer or \"stabilize\"");
        return spec;
    }
    catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("CF spec: ") + e.what());
    }
}

CFSpec load_cf_spec(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
    try {
        return parse_cf_spec(json::parse(in));
    }
    catch (const json::parse_error& e) {
        throw Error(ErrorKind::ParseError, path + ": " + e.what());
    }
}

std::vector<CorpusCase> parse_corpus(std::string_view text)
{
    std::vector<CorpusCase> cases;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        json j;
        try {
            j = json::parse(line);
        }
        catch (const json::parse_error& e) {
            fail(number, "<record>", e.what());
        }
        cases.push_back(parse_case(j, number));
    }
    return cases;
}

std::vector<CorpusCase> load_corpus(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::ParseError, "cannot open corpus '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_corpus(buffer.str());
}

Rows evaluate_case(const CorpusCase& c)
{
    const std::size_t N = c.order.value_or(c.expected.size() - 1);
    const json& s = c.source;
    const auto finish = [&](Triangle t) {
        if (s.contains("post"))
            t = transform_of(s.at("post"), t);
        return c.operation == Operation::RowSums ? column(row_sums(t).terms) : t.data();
    };
    const auto from_triangle = [&](const Triangle& source) {
        const auto t = s.contains("pre") ? transform_of(s.at("pre"), source) : source;
        if (c.operation == Operation::Matrix || (c.operation == Operation::RowSums && c.target_source))
            return finish(t);
        return finish(bang_bivariate(t));
    };
    switch (c.kind) {
    case CaseKind::Ordinary: {
        const auto spec = ordinary_spec_of(s);
        if (s.contains("pre"))
            return from_triangle(to_matrix(spec, N));
        if (c.operation == Operation::Matrix || (c.operation == Operation::RowSums && c.target_source))
            return finish(to_matrix(spec, N));
        return finish(bang_riordan(spec, N));
    }
    case CaseKind::Exponential: {
        const auto spec = exp_spec_of(s);
        if (c.operation == Operation::Matrix || (c.operation == Operation::RowSums && c.target_source))
            return finish(exp_to_matrix(spec, N));
        return finish(exp_bang(spec, N));
    }
    case CaseKind::Bivariate: {
        const auto t = triangle_of(s);
        if (N + 1 > t.rows())
            throw Error(ErrorKind::InvalidArgument, "source triangle has only " + std::to_string(t.rows()) + " rows");
        return from_triangle(t.truncated(N + 1));
    }
    case CaseKind::Sequence: {
        const auto seq = sequence_of(s);
        const auto out = s.value("egf", false) ? exp_revert_transform_sequence(seq, N)
                                               : revert_transform_sequence(seq, N);
        return column(out.terms);
    }
    case CaseKind::ContinuedFraction: return series_rows(eval_cf(parse_cf_spec(s.at("cf")), N));
    }
    throw Error(ErrorKind::InvalidArgument, "unsupported case");
}

CaseReport run_case(const CorpusCase& c)
{
    CaseReport r;
    r.id = c.id;
    r.expectation = c.expectation;
    try {
        r.mismatch = compare(evaluate_case(c), c.expected);
        r.passed = !r.mismatch.has_value();
    }
    catch (const Error& e) {
        r.error = e.what();
        r.error_kind = e.kind();
    }
    catch (const std::exception& e) {
        r.error = e.what();
    }

    if (c.expectation == Expectation::Pass) {
        r.as_recorded = r.passed;
    }
    else if (c.recorded_error) {
        r.as_recorded = r.error_kind && to_string(*r.error_kind) == *c.recorded_error;
    }
    else {
        r.as_recorded = r.mismatch.has_value() &&
                        (!c.recorded_mismatch || r.mismatch->cell == *c.recorded_mismatch);
    }
    return r;
}

std::vector<CaseReport> run_corpus(const std::vector<CorpusCase>& cases, std::size_t jobs)
{
    std::vector<CaseReport> reports(cases.size());
    jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(cases.size(), 1));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cases.size(); i = next++)
            reports[i] = run_case(cases[i]);
    };
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < jobs; ++t)
        pool.emplace_back(worker);
    worker();
    return reports;
}

std::string format_report(const CaseReport& r)
{
    std::ostringstream os;
    const bool discrepancy = r.expectation == Expectation::KnownDiscrepancy;
    if (r.as_recorded)
        os << (discrepancy ? "XFAIL " : "PASS  ");
    else
        os << (discrepancy ? "XPASS?" : "FAIL  ");
    os << r.id;
    if (r.error)
        os << "  error: " << *r.error;
    else if (r.mismatch)
        os << "  first mismatch at (" << r.mismatch->cell.n << "," << r.mismatch->cell.k << "): got "
           << r.mismatch->got << ", want " << r.mismatch->want;
    return os.str();
}

}  // namespace riordan
