#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "riordan/closed_forms.hpp"
#include "riordan/contfrac.hpp"
#include "riordan/corpus.hpp"
#include "riordan/exp_riordan.hpp"
#include "riordan/inversion.hpp"
#include "riordan/render.hpp"
#include "riordan/series_text.hpp"

namespace py = pybind11;
using namespace riordan;

namespace {

py::object to_py(const Rational& q)
{
    const py::int_ num(py::reinterpret_steal<py::object>(PyLong_FromString(q.numerator().get_str().c_str(), nullptr, 10)));
    if (q.is_integer())
        return std::move(num);
    const py::int_ den(py::reinterpret_steal<py::object>(PyLong_FromString(q.denominator().get_str().c_str(), nullptr, 10)));
    return py::module_::import("fractions").attr("Fraction")(num, den);
}

// int, fractions.Fraction and "p/q" strings all go through their decimal text.
Rational from_py(const py::handle& h)
{
    if (py::isinstance<py::float_>(h))
        throw Error(ErrorKind::InvalidArgument, "floats are not exact; pass an int, a Fraction or a \"p/q\" string");
    return Rational::parse(py::str(h).cast<std::string>());
}

py::list rows_to_py(const Rows& rows)
{
    py::list out;
    for (const auto& row : rows) {
        py::list r;
        for (const auto& v : row)
            r.append(to_py(v));
        out.append(std::move(r));
    }
    return out;
}

py::list rows_to_py(const Triangle& t) { return rows_to_py(t.data()); }

py::list seq_to_py(const std::vector<Rational>& s)
{
    py::list out;
    for (const auto& v : s)
        out.append(to_py(v));
    return out;
}

std::vector<Rational> seq_from_py(const py::iterable& seq)
{
    std::vector<Rational> out;
    for (const auto& v : seq)
        out.push_back(from_py(v));
    return out;
}

Triangle triangle_from_py(const py::iterable& rows)
{
    Rows out;
    for (const auto& row : rows)
        out.push_back(seq_from_py(py::reinterpret_borrow<py::iterable>(row)));
    return Triangle(std::move(out));
}

RiordanSpec ordinary(const std::string& g, const std::string& f) { return RiordanSpec(parse_series(g), parse_series(f), g); }

FamilyParam family(const std::string& name, const py::handle& param) { return {parse_family(name), from_py(param)}; }

nlohmann::json json_from_py(const py::handle& h)
{
    return nlohmann::json::parse(py::module_::import("json").attr("dumps")(h).cast<std::string>());
}

std::string_view expectation_name(Expectation e) { return e == Expectation::Pass ? "pass" : "known_discrepancy"; }

}  // namespace

PYBIND11_MODULE(riordan, m)
{
    m.doc() = "Riordan arrays and their inversions in exact rational arithmetic";

    PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
    error_type.call_once_and_store_result(
        [&]() { return py::object(py::exception<Error>(m, "RiordanError", PyExc_ValueError)); });
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const Error& e) {
            const auto& type = error_type.get_stored();
            py::object inst = type(std::string(to_string(e.kind())) + ": " + e.what());
            inst.attr("kind") = std::string(to_string(e.kind()));
            PyErr_SetObject(type.ptr(), inst.ptr());
        }
    });

    m.def(
        "triangle", [](const std::string& g, const std::string& f, std::size_t N) { return rows_to_py(to_matrix(ordinary(g, f), N)); },
        py::arg("g"), py::arg("f"), py::arg("N"), "Rows 0..N of the Riordan array (g, f); g and f are series strings.");
    m.def(
        "bang", [](const std::string& g, const std::string& f, std::size_t N) { return rows_to_py(bang_riordan(ordinary(g, f), N)); },
        py::arg("g"), py::arg("f"), py::arg("N"), "Rows 0..N of the inversion of (g, f).");
    m.def(
        "family_triangle",
        [](const std::string& name, const py::object& param, std::size_t N) {
            return rows_to_py(to_matrix(family_spec(family(name, param)), N));
        },
        py::arg("name"), py::arg("param"), py::arg("N"));
    m.def(
        "family_bang",
        [](const std::string& name, const py::object& param, std::size_t N) {
            return rows_to_py(family_bang_closed(family(name, param), N));
        },
        py::arg("name"), py::arg("param"), py::arg("N"), "Inversion from the closed form of the family.");
    m.def(
        "exp_triangle",
        [](const std::string& u, const std::string& v, std::size_t N) {
            return rows_to_py(exp_to_matrix(ExpRiordanSpec(parse_series(u), parse_series(v)), N));
        },
        py::arg("u"), py::arg("v"), py::arg("N"), "Rows 0..N of the exponential array [u, v].");
    m.def(
        "exp_bang",
        [](const std::string& u, const std::string& v, std::size_t N) {
            return rows_to_py(exp_bang(ExpRiordanSpec(parse_series(u), parse_series(v)), N));
        },
        py::arg("u"), py::arg("v"), py::arg("N"));
    m.def(
        "bang_rows",
        [](const py::iterable& rows, bool exponential) {
            const auto t = triangle_from_py(rows);
            return rows_to_py(exponential ? exp_bang(t) : bang_bivariate(t));
        },
        py::arg("rows"), py::arg("exponential") = false, "Inversion of a triangle given by its rows.");
    m.def(
        "revert_transform",
        [](const py::iterable& seq, std::optional<std::size_t> N, bool exponential) {
            const auto terms = seq_from_py(seq);
            if (terms.empty())
                throw Error(ErrorKind::InvalidArgument, "empty sequence");
            const std::size_t n = N.value_or(terms.size() - 1);
            const auto g = suppliers::finite_prefix(terms);
            return seq_to_py(exponential ? exp_revert_transform_sequence(g, n).terms : revert_transform_sequence(g, n).terms);
        },
        py::arg("seq"), py::arg("N") = py::none(), py::arg("exponential") = false);
    m.def(
        "row_sums", [](const py::iterable& rows) { return seq_to_py(row_sums(triangle_from_py(rows)).terms); },
        py::arg("rows"));
    m.def(
        "render",
        [](const py::iterable& rows, const std::string& format) {
            Rows r;
            for (const auto& row : rows)
                r.push_back(seq_from_py(py::reinterpret_borrow<py::iterable>(row)));
            return render(r, parse_format(format));
        },
        py::arg("rows"), py::arg("format") = "table");
    m.def(
        "cf_eval",
        [](const py::object& spec, std::size_t N) {
            const CFSpec cf = py::isinstance<py::str>(spec) ? load_cf_spec(spec.cast<std::string>())
                                                            : parse_cf_spec(json_from_py(spec));
            return rows_to_py(series_rows(eval_cf(cf, N)));
        },
        py::arg("spec"), py::arg("N"), "Expands a continued fraction given as a dict or a JSON file path.");
    m.def(
        "verify_corpus",
        [](const std::string& path, std::size_t jobs) {
            const auto reports = run_corpus(load_corpus(path), jobs);
            py::list out;
            for (const auto& r : reports) {
                py::dict d;
                d["id"] = r.id;
                d["expectation"] = std::string(expectation_name(r.expectation));
                d["passed"] = r.passed;
                d["as_recorded"] = r.as_recorded;
                d["mismatch"] = r.mismatch ? py::object(py::make_tuple(r.mismatch->cell.n, r.mismatch->cell.k,
                                                                       r.mismatch->got, r.mismatch->want))
                                           : py::object(py::none());
                d["error"] = r.error ? py::object(py::str(*r.error)) : py::object(py::none());
                out.append(std::move(d));
            }
            return out;
        },
        py::arg("path"), py::arg("jobs") = 1);
}
