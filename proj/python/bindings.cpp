// Thin JSON-in, JSON-out layer over the core library.

#include <acmlines/criteria.hpp>
#include <acmlines/errors.hpp>
#include <acmlines/experiment.hpp>
#include <acmlines/ferrers.hpp>
#include <acmlines/io.hpp>
#include <acmlines/oracles.hpp>
#include <acmlines/report.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>

namespace py = pybind11;
using namespace acmlines;

namespace {

VarietyOfLines load(const std::string& text, bool strict) {
    auto raw = io::parse_variety_text(text);
    return compact(make_variety(raw, strict ? ValidationMode::Strict : ValidationMode::Lenient));
}

DegreeTriple triple(const std::array<int, 3>& b) { return {b[0], b[1], b[2]}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "ACM decision and Hilbert functions for varieties of lines";

    py::register_exception<Error>(m, "AcmLinesError", PyExc_ValueError);

    m.def(
        "check",
        [](const std::string& text, bool strict) { return io::verdict_to_json(is_acm(load(text, strict))).dump(); },
        py::arg("text"), py::arg("strict") = false);
    m.def(
        "is_acm", [](const std::string& text, bool strict) { return is_acm(load(text, strict)).is_acm; },
        py::arg("text"), py::arg("strict") = false);
    m.def(
        "reisner_cm", [](const std::string& text) { return reisner_cm(stanley_reisner_complex(load(text, false))); },
        py::arg("text"));
    m.def(
        "is_ferrers", [](const std::string& text) { return is_ferrers_variety(load(text, false)).ferrers; },
        py::arg("text"));
    m.def(
        "generator_degrees",
        [](const std::string& text) { return io::degrees_to_json(minimal_generators(load(text, false)).degrees).dump(); },
        py::arg("text"));
    m.def(
        "generator_products", [](const std::string& text) { return minimal_generators(load(text, false)).products(); },
        py::arg("text"));
    m.def(
        "scan_degrees",
        [](const std::string& text, std::array<int, 3> box) {
            return io::degrees_to_json(generator_degree_scan(load(text, false), triple(box)).degrees).dump();
        },
        py::arg("text"), py::arg("box"));
    m.def(
        "hilbert",
        [](const std::string& text, std::array<int, 3> box, const std::string& method) {
            auto x = load(text, false);
            Grid3 h = method == "oracle" ? hilbert_oracle(x, triple(box)) : hilbert_function(x, triple(box));
            return io::hilbert_json(first_difference(h), h).dump();
        },
        py::arg("text"), py::arg("box"), py::arg("method") = "corollary");
    m.def(
        "grid_from_points",
        [](const std::string& text) { return io::to_json(grid_from_points(io::parse_points_text(text))).dump(); },
        py::arg("text"));
    m.def(
        "grid_resolution", [](int a, int b, int c) { return grid_resolution(a, b, c).to_string(); }, py::arg("a"),
        py::arg("b"), py::arg("c"));
    m.def(
        "render",
        [](const std::string& text, int direction) { return render(load(text, false), direction_from_int(direction)); },
        py::arg("text"), py::arg("direction") = 3);
    m.def(
        "hf_experiment",
        [](int trials, int dmax, std::array<int, 3> box, std::uint64_t seed) {
            ExperimentConfig cfg;
            cfg.trials = trials;
            cfg.dmax = dmax;
            cfg.box = triple(box);
            cfg.seed = seed;
            return hf_experiment(cfg).to_json().dump();
        },
        py::arg("trials") = 500, py::arg("dmax") = 3, py::arg("box") = std::array<int, 3>{4, 4, 4},
        py::arg("seed") = 42);
}
