#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "alexsum/burau.hpp"
#include "alexsum/format.hpp"
#include "alexsum/hecke.hpp"
#include "alexsum/state_sum.hpp"
#include "alexsum/verify.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace py = pybind11;

namespace {

using namespace alexsum;

// Arbitrary-precision coefficients cross into Python losslessly via their
// decimal form.
py::int_ to_py_int(const Int& value) {
    PyObject* obj = PyLong_FromString(value.str().c_str(), nullptr, 10);
    if (obj == nullptr) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

py::dict laurent_to_dict(const LaurentPoly& p) {
    py::dict out;
    for (const auto& [exp, coeff] : p.terms()) out[py::int_(exp)] = to_py_int(coeff);
    return out;
}

py::dict conway_to_dict(const ConwayPoly& p) {
    py::dict out;
    for (const auto& [exp, coeff] : p.terms()) out[py::int_(exp)] = to_py_int(coeff);
    return out;
}

BraidWord word_of(const std::string& text, const std::optional<int>& strands) {
    if (strands && *strands < 1) throw std::invalid_argument("strand count must be at least 1");
    return parse_braid_word(text, strands);
}

LaurentPoly evaluate(const BraidWord& w, const std::string& method) {
    if (method == "dp") return evaluate_dp(w);
    if (method == "statesum") return state_sum(w);
    if (method == "trace") return alexander_via_trace(w);
    throw std::invalid_argument("unknown method \"" + method +
                                "\" (expected dp, statesum, or trace)");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Alexander-Conway polynomial of braid closures";

    m.def(
        "alexander",
        [](const std::string& word, std::optional<int> strands, const std::string& method) {
            return laurent_to_dict(evaluate(word_of(word, strands), method));
        },
        py::arg("word"), py::arg("strands") = std::nullopt, py::arg("method") = "dp",
        "Conway-normalized Alexander value as {v_exponent: coefficient}.");

    m.def(
        "alexander_text",
        [](const std::string& word, std::optional<int> strands, const std::string& method) {
            return render(evaluate(word_of(word, strands), method), 'v');
        },
        py::arg("word"), py::arg("strands") = std::nullopt, py::arg("method") = "dp",
        "Rendering of alexander(), e.g. \"-v^2 + 3 - v^-2\".");

    m.def(
        "conway",
        [](const std::string& word, std::optional<int> strands, const std::string& method) {
            return conway_to_dict(to_conway(evaluate(word_of(word, strands), method)));
        },
        py::arg("word"), py::arg("strands") = std::nullopt, py::arg("method") = "dp",
        "Conway polynomial as {z_exponent: coefficient}.");

    m.def(
        "conway_text",
        [](const std::string& word, std::optional<int> strands, const std::string& method) {
            return render(to_conway(evaluate(word_of(word, strands), method)));
        },
        py::arg("word"), py::arg("strands") = std::nullopt, py::arg("method") = "dp",
        "Rendering of conway(), e.g. \"1 - z^2\".");

    m.def(
        "strand_count",
        [](const std::string& word, std::optional<int> strands) {
            return word_of(word, strands).strands;
        },
        py::arg("word"), py::arg("strands") = std::nullopt);

    m.def(
        "exponent_sum",
        [](const std::string& word, std::optional<int> strands) {
            return exponent_sum(word_of(word, strands));
        },
        py::arg("word"), py::arg("strands") = std::nullopt);

    m.def(
        "components",
        [](const std::string& word, std::optional<int> strands) {
            return component_count(word_of(word, strands));
        },
        py::arg("word"), py::arg("strands") = std::nullopt,
        "Number of components of the closure.");

    m.def(
        "states",
        [](const std::string& word, std::optional<int> strands) {
            py::list out;
            for (const StateRow& row : list_states(word_of(word, strands))) {
                py::dict entry;
                entry["resolution"] = row.resolution;
                entry["signs"] = row.signs;
                entry["weight_factors"] = row.weight_factors;
                entry["weight"] = render(row.weight);
                entry["sign_product"] = row.sign_product;
                out.append(std::move(entry));
            }
            return out;
        },
        py::arg("word"), py::arg("strands") = std::nullopt,
        "Admissible states with factored weights, one dict per state.");

    m.def(
        "cross_validate",
        [](const std::string& word, std::optional<int> strands) {
            return cross_validate(word_of(word, strands));
        },
        py::arg("word"), py::arg("strands") = std::nullopt,
        "True when the Burau-determinant oracle agrees up to a unit.");

    m.def(
        "verify",
        [](unsigned seed, int samples, int hecke_n) {
            VerifyOptions opts;
            opts.seed = seed;
            opts.samples = samples;
            opts.markov_samples = samples / 2;
            opts.hecke_n = hecke_n;
            py::dict out;
            for (const SuiteResult& suite : run_verify(opts).suites) {
                py::dict entry;
                entry["checked"] = suite.checked;
                entry["failures"] = suite.failures;
                out[py::str(suite.name)] = std::move(entry);
            }
            return out;
        },
        py::arg("seed") = 42, py::arg("samples") = 200, py::arg("hecke_n") = 6,
        "Run the randomized property suites; returns per-suite tallies.");
}
