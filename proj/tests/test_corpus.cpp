#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "riordan/closed_forms.hpp"
#include "riordan/corpus.hpp"
#include "riordan/inversion.hpp"
#include "riordan/series_text.hpp"
#include "support.hpp"

using namespace riordan;
using testing_support::rationals;

namespace {

std::vector<std::string> lines_of(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        out.push_back(line);
    return out;
}

std::vector<std::string> words_of(const std::string& line)
{
    std::vector<std::string> out;
    std::istringstream in(line);
    for (std::string w; in >> w;)
        out.push_back(w);
    return out;
}

const char* kNarayana =
    R"({"id": "nar", "kind": "ordinary", "source": {"g": "rat:1;1,1", "f": "-x"}, "operation": "bang",)"
    R"( "expected": [[1], [1, 1], [1, 3, 1], [1, 6, 6, 1], [1, 10, 20, 10, 1], [1, 15, 50, 50, 15, 1]], "oeis": "A001263"})";

ErrorKind kind_of_parse(const std::string& text)
{
    try {
        parse_corpus(text);
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InvalidArgument;
}

std::string message_of_parse(const std::string& text)
{
    try {
        parse_corpus(text);
    } catch (const Error& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST_CASE("parse corpus")
{
    const auto cases = parse_corpus(kNarayana);
    REQUIRE(cases.size() == 1);
    CHECK(cases[0].id == "nar");
    CHECK(cases[0].kind == CaseKind::Ordinary);
    CHECK(cases[0].operation == Operation::Bang);
    CHECK(cases[0].expected.size() == 6);
    CHECK(cases[0].oeis == std::optional<std::string>("A001263"));
    CHECK(cases[0].expectation == Expectation::Pass);
    CHECK(cases[0].line == 1);

    CHECK(parse_corpus("").empty());
    CHECK(parse_corpus("\n# only a comment\n\n").empty());

    const std::string two = std::string("# header\n") + kNarayana + "\n\n" + kNarayana + "\n";
    const auto both = parse_corpus(two);
    REQUIRE(both.size() == 2);
    CHECK(both[0].line == 2);
    CHECK(both[1].line == 4);

    // rationals as strings
    const auto q = parse_corpus(R"({"id": "q", "kind": "sequence", "source": {"seq": ["1/2", 3]}, )"
                                R"("operation": "revert_seq", "expected": ["1/2", "-9/2"]})");
    REQUIRE(q.size() == 1);
    CHECK(q[0].expected[1][0] == Rational(-9, 2));
}

TEST_CASE("parse errors carry line and field")
{
    const std::string bad_rational = R"({"id": "z", "kind": "sequence", "source": {"seq": [1, 2]}, )"
                                     R"("operation": "revert_seq", "expected": ["1/0", 1]})";
    CHECK(kind_of_parse(bad_rational) == ErrorKind::ParseError);
    const auto msg = message_of_parse("\n" + bad_rational);
    CHECK(msg.find("line 2") != std::string::npos);
    CHECK(msg.find("expected") != std::string::npos);

    CHECK(kind_of_parse("{not json") == ErrorKind::ParseError);
    CHECK(message_of_parse(R"({"kind": "ordinary"})").find("id") != std::string::npos);

    const std::string bad_kind = R"({"id": "k", "kind": "hexagonal", "source": {}, "operation": "bang", "expected": []})";
    CHECK(message_of_parse(bad_kind).find("kind") != std::string::npos);

    const std::string bad_op = R"({"id": "k", "kind": "sequence", "source": {"seq": [1]}, "operation": "spin", "expected": []})";
    CHECK(message_of_parse(bad_op).find("operation") != std::string::npos);

    const std::string float_entry = R"({"id": "f", "kind": "sequence", "source": {"seq": [1]}, )"
                                    R"("operation": "revert_seq", "expected": [1.5]})";
    CHECK(kind_of_parse(float_entry) == ErrorKind::ParseError);

    // an exponential pipeline on an ordinary source
    const std::string mismatch = R"({"id": "m", "kind": "ordinary", "source": {"g": "1", "f": "x"}, )"
                                 R"("operation": "exp_bang", "expected": [[1]]})";
    CHECK(message_of_parse(mismatch).find("operation") != std::string::npos);
}

TEST_CASE("run case")
{
    auto c = parse_corpus(kNarayana).at(0);
    auto r = run_case(c);
    CHECK(r.passed);
    CHECK(r.as_recorded);
    CHECK_FALSE(r.mismatch);

    c.expected[4][2] = Rational(21);
    r = run_case(c);
    CHECK_FALSE(r.passed);
    CHECK_FALSE(r.as_recorded);
    REQUIRE(r.mismatch);
    CHECK(r.mismatch->cell == Cell{4, 2});
    CHECK(r.mismatch->got == "20");
    CHECK(r.mismatch->want == "21");

    // a recorded discrepancy at that cell
    c.expectation = Expectation::KnownDiscrepancy;
    c.recorded_mismatch = Cell{4, 2};
    CHECK(run_case(c).as_recorded);
    c.recorded_mismatch = Cell{3, 1};
    CHECK_FALSE(run_case(c).as_recorded);

    // missing rows count as a mismatch
    auto shorter = parse_corpus(kNarayana).at(0);
    shorter.expected.push_back(rationals({1, 21, 105, 175, 105, 21, 1}));
    shorter.order = 5;
    r = run_case(shorter);
    CHECK_FALSE(r.passed);
    REQUIRE(r.mismatch);
    CHECK(r.mismatch->cell.n == 6);

    // pipeline errors are captured
    const auto err = parse_corpus(R"({"id": "e", "kind": "sequence", "source": {"seq": [0, 1]}, )"
                                  R"("operation": "revert_seq", "expected": [1]})");
    r = run_case(err.at(0));
    CHECK_FALSE(r.passed);
    REQUIRE(r.error);
    REQUIRE(r.error_kind);
    CHECK(*r.error_kind == ErrorKind::ReversionNeedsUnitLinearTerm);
}

TEST_CASE("golden corpus")
{
    const auto cases = load_corpus(RIORDAN_CORPUS);
    CHECK(cases.size() >= 30);
    const auto reports = run_corpus(cases, 4);
    REQUIRE(reports.size() == cases.size());
    std::size_t discrepancies = 0;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        INFO(format_report(reports[i]));
        CHECK(reports[i].id == cases[i].id);
        CHECK(reports[i].as_recorded);
        if (cases[i].expectation == Expectation::KnownDiscrepancy) {
            ++discrepancies;
            CHECK_FALSE(reports[i].passed);
        } else {
            CHECK(reports[i].passed);
        }
    }
    CHECK(discrepancies == 3);

    const auto by_id = [&](const std::string& id) {
        return *std::find_if(cases.begin(), cases.end(), [&](const CorpusCase& c) { return c.id == id; });
    };
    CHECK(run_case(by_id("associahedron_faces")).passed);
    CHECK(run_case(by_id("airey_converging_factor")).passed);

    // sequential and parallel runs agree
    const auto serial = run_corpus(cases, 1);
    for (std::size_t i = 0; i < cases.size(); ++i)
        CHECK(serial[i].passed == reports[i].passed);
}

TEST_CASE("render")
{
    CHECK(render(Triangle::identity(3), Format::Csv) == "1\n0,1\n0,0,1");

    const auto nar = bang_riordan(RiordanSpec(parse_series("rat:1;1,1"), parse_series("-x")), 5);
    const auto json = nlohmann::json::parse(render(nar, Format::Json));
    CHECK(json.at(5) == nlohmann::json({"1", "15", "50", "50", "15", "1"}));

    const auto a060693 = bang_riordan(RiordanSpec(parse_series("1,-1"), parse_series("-x")), 5);
    const auto table = lines_of(render(a060693, Format::Table));
    REQUIRE(table.size() == 6);
    CHECK(words_of(table.back()) == std::vector<std::string>{"42", "126", "140", "70", "15", "1"});
    // right-aligned columns
    for (const auto& line : table)
        CHECK(line.size() <= table.back().size());

    const Rows fractions{rationals({1}), {Rational(1, 2), Rational(-3, 4)}};
    CHECK(render(fractions, Format::Csv) == "1\n1/2,-3/4");
    CHECK(render(fractions, Format::Json) == R"([["1"],["1/2","-3/4"]])");

    CHECK(parse_format("csv") == Format::Csv);
    CHECK(parse_format("json") == Format::Json);
    CHECK(parse_format("table") == Format::Table);
    CHECK_THROWS_AS(parse_format("xml"), Error);

    // no integer-width ceiling
    const Rows big{{Rational(factorial(30))}};
    CHECK(render(big, Format::Csv) == "265252859812191058636308480000000");
}

TEST_CASE("cf spec files")
{
    for (const char* name : {"pascal_like_r1", "gladkovskii", "one_plus_rx_r2", "second_family_r2",
                             "pascal_like_row_sums_r5"}) {
        INFO(name);
        CHECK_NOTHROW(load_cf_spec(std::string(RIORDAN_DATA) + "/cf/" + name + ".json"));
    }
    const auto spec = load_cf_spec(std::string(RIORDAN_DATA) + "/cf/pascal_like_r1.json");
    const auto nar = bang_riordan(RiordanSpec(parse_series("rat:1;1,1"), parse_series("-x")), 6);
    CHECK(verify_cf_against_triangle(spec, nar));

    CHECK_THROWS_AS(parse_cf_spec(nlohmann::json::parse(R"({"numerator": {"const": [0.5]}})")), Error);
}
