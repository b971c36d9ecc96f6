// Command-line front end: render arrays, their inversions, revert transforms,
// continued fractions, and verify a golden corpus.

#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "riordan/corpus.hpp"
#include "riordan/exp_riordan.hpp"
#include "riordan/inversion.hpp"
#include "riordan/render.hpp"
#include "riordan/series_text.hpp"

namespace {

using namespace riordan;

constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct ArrayArgs {
    std::string g, f, array, format = "table";
    std::size_t N = 5;
    bool exp = false;
};

void add_array_options(CLI::App* cmd, ArrayArgs& a)
{
    cmd->add_option("--g", a.g, "first series (u for --exp): coefficient list or named series");
    cmd->add_option("--f", a.f, "second series (v for --exp)");
    cmd->add_option("--array", a.array, "named family FAMILY:param, e.g. PASCAL_LIKE:2");
    cmd->add_option("-N,--order", a.N, "last row index")->check(CLI::NonNegativeNumber);
    cmd->add_option("--format", a.format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
    cmd->add_flag("--exp", a.exp, "treat (g,f) as an exponential array [u,v]");
}

RiordanSpec ordinary_from(const ArrayArgs& a)
{
    if (!a.array.empty())
        return family_spec(parse_family_param(a.array));
    if (a.g.empty() || a.f.empty())
        throw Error(ErrorKind::InvalidArgument, "need --g and --f, or --array");
    return RiordanSpec(parse_series(a.g), parse_series(a.f), a.g + " | " + a.f);
}

ExpRiordanSpec exponential_from(const ArrayArgs& a)
{
    if (!a.array.empty() || a.g.empty() || a.f.empty())
        throw Error(ErrorKind::InvalidArgument, "--exp needs --g and --f");
    return ExpRiordanSpec(parse_series(a.g), parse_series(a.f), a.g + " | " + a.f);
}

Rows column(const std::vector<Rational>& terms)
{
    Rows rows;
    for (const auto& t : terms)
        rows.push_back({t});
    return rows;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Riordan arrays and their inversions, in exact arithmetic"};
    app.require_subcommand(1);

    ArrayArgs tri, bang;
    auto* triangle_cmd = app.add_subcommand("triangle", "print the matrix of an array");
    add_array_options(triangle_cmd, tri);
    auto* bang_cmd = app.add_subcommand("bang", "print the inversion of an array");
    add_array_options(bang_cmd, bang);

    std::string seq, seq_format = "table";
    std::size_t seq_N = 5;
    bool seq_exp = false;
    auto* revert_cmd = app.add_subcommand("revert-seq", "revert transform of a sequence");
    revert_cmd->add_option("--seq", seq, "comma-separated rationals, or a named series")->required();
    auto* seq_N_opt = revert_cmd->add_option("-N,--order", seq_N, "last index (default: last term of a list, else 5)")
                          ->check(CLI::NonNegativeNumber);
    revert_cmd->add_flag("--exp", seq_exp, "terms are egf coefficients (exponential revert transform)");
    revert_cmd->add_option("--format", seq_format)->check(CLI::IsMember({"table", "json", "csv"}));

    std::string corpus;
    std::size_t jobs = std::max(1u, std::thread::hardware_concurrency());
    bool quiet = false;
    auto* verify_cmd = app.add_subcommand("verify", "check every case of a corpus file");
    verify_cmd->add_option("--corpus", corpus, "JSON-lines corpus")->required();
    verify_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    verify_cmd->add_flag("-q,--quiet", quiet, "print only failures and the summary");

    std::string cf_path, cf_format = "table";
    std::size_t cf_N = 5;
    auto* cf_cmd = app.add_subcommand("cf-eval", "expand a continued fraction");
    cf_cmd->add_option("--spec", cf_path, "JSON continued-fraction spec")->required();
    cf_cmd->add_option("-N,--order", cf_N, "last index")->check(CLI::NonNegativeNumber);
    cf_cmd->add_option("--format", cf_format)->check(CLI::IsMember({"table", "json", "csv"}));

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (*triangle_cmd) {
            const auto t = tri.exp ? exp_to_matrix(exponential_from(tri), tri.N) : to_matrix(ordinary_from(tri), tri.N);
            std::cout << render(t, parse_format(tri.format)) << '\n';
        }
        else if (*bang_cmd) {
            const auto t = bang.exp ? exp_bang(exponential_from(bang), bang.N) : bang_riordan(ordinary_from(bang), bang.N);
            std::cout << render(t, parse_format(bang.format)) << '\n';
        }
        else if (*revert_cmd) {
            const bool plain = seq.find_first_not_of("0123456789+-/, ") == std::string::npos;
            const std::string list = plain ? seq : seq.rfind("prefix:", 0) == 0 ? seq.substr(7) : std::string();
            if (!list.empty() && seq_N_opt->count() == 0)
                seq_N = parse_rational_list(list).size() - 1;
            const auto g = parse_series(plain ? "prefix:" + seq : seq);
            const auto out = seq_exp ? exp_revert_transform_sequence(g, seq_N) : revert_transform_sequence(g, seq_N);
            std::cout << render(column(out.terms), parse_format(seq_format)) << '\n';
        }
        else if (*cf_cmd) {
            std::cout << render(series_rows(eval_cf(load_cf_spec(cf_path), cf_N)), parse_format(cf_format)) << '\n';
        }
        else if (*verify_cmd) {
            const auto cases = load_corpus(corpus);
            const auto reports = run_corpus(cases, jobs);
            std::size_t ok = 0;
            bool required_failed = false;
            for (const auto& r : reports) {
                ok += r.as_recorded;
                required_failed |= r.expectation == Expectation::Pass && !r.passed;
                if (!quiet || !r.as_recorded)
                    std::cout << format_report(r) << '\n';
            }
            std::cout << ok << "/" << reports.size() << " cases as recorded\n";
            return required_failed ? kVerifyFailed : 0;
        }
    }
    catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::InvalidArgument ||
                       e.kind() == ErrorKind::UnknownFamily
                   ? kUsage
                   : kVerifyFailed;
    }
    return 0;
}
