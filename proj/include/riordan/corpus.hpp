#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "riordan/contfrac.hpp"
#include "riordan/render.hpp"

namespace riordan {

enum class CaseKind { Ordinary, Exponential, Bivariate, Sequence, ContinuedFraction };
enum class Operation { Matrix, Bang, ExpBang, RevertSeq, RowSums, CfEval };
enum class Expectation { Pass, KnownDiscrepancy };

struct Cell {
    std::size_t n = 0;
    std::size_t k = 0;

    friend bool operator==(const Cell&, const Cell&) = default;
};

/// One golden case. Corpus files are JSON Lines: one case object per line;
/// blank lines and lines starting with '#' are skipped. All numbers are
/// integers or decimal strings ("p/q" allowed); floats are rejected.
///
/// Fields: id, kind, source, operation, expected, [oeis], [expectation],
/// [N], [target], [mismatch_at], [error_kind]. See README.md for the source forms.
struct CorpusCase {
    std::string id;
    CaseKind kind = CaseKind::Ordinary;
    nlohmann::json source;
    Operation operation = Operation::Matrix;
    Rows expected;  // sequences are stored as one single-entry row per term
    std::optional<std::string> oeis;
    Expectation expectation = Expectation::Pass;
    std::optional<std::size_t> order;
    bool target_source = false;              // row_sums of the source array rather than of its inversion
    std::optional<Cell> recorded_mismatch;   // for known_discrepancy cases
    std::optional<std::string> recorded_error;  // ErrorKind name, for known_discrepancy cases
    std::size_t line = 0;
};

struct Mismatch {
    Cell cell;
    std::string got;
    std::string want;
};

struct CaseReport {
    std::string id;
    Expectation expectation = Expectation::Pass;
    bool passed = false;                  // computed result equals expected
    std::optional<Mismatch> mismatch;
    std::optional<std::string> error;     // pipeline failure, captured
    std::optional<ErrorKind> error_kind;
    /// Pass cases pass; known_discrepancy cases fail, at the recorded cell if one is given.
    bool as_recorded = false;
};

std::vector<CorpusCase> parse_corpus(std::string_view text);
/// ParseError carries "line L, field F" diagnostics.
std::vector<CorpusCase> load_corpus(const std::string& path);

/// Runs the named pipeline for a case; never throws (errors go into the report).
CaseReport run_case(const CorpusCase& c);
/// Runs all cases, `jobs` at a time; reports come back in corpus order.
std::vector<CaseReport> run_corpus(const std::vector<CorpusCase>& cases, std::size_t jobs = 1);

/// Computes the rows a case produces (without comparing).
Rows evaluate_case(const CorpusCase& c);

std::string format_report(const CaseReport& r);

/// Continued-fraction spec from JSON:
///   {"name": ..., "numerator": TERMS, "denominator": TERMS, "depth": d | "stabilize"}
/// TERMS = {"at": {"i": X, ...}, "const": X, "step": X}; term i is at[i] when
/// present, else const + i*step. X is a polynomial in x: a list whose entry j
/// is the coefficient of x^j, each either a rational or a list of rationals
/// (coefficients of y^0, y^1, ...).
CFSpec parse_cf_spec(const nlohmann::json& j);
CFSpec load_cf_spec(const std::string& path);

/// Rows of a Q[y]-coefficient series: row n lists the y-coefficients of x^n
/// padded to n + 1 entries; when every coefficient is constant, one row per term.
Rows series_rows(const Series<PolyY>& s);

}  // namespace riordan
