#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <string>
#include <vector>

#include "puncture/covering.hpp"
#include "puncture/covering_json.hpp"
#include "puncture/metric.hpp"
#include "puncture/picard.hpp"
#include "puncture/verify.hpp"

namespace py = pybind11;
using namespace puncture;

namespace {

// Exact rationals cross the boundary as fractions.Fraction (or int / "num/den"
// strings on the way in); never as floats.
Rational rational_from_py(const py::handle& obj) {
    return Rational::from_string(py::str(obj).cast<std::string>());
}

py::object rational_to_py(const Rational& r) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(r.str());
}

std::vector<Rational> rationals_from_py(const py::sequence& seq) {
    std::vector<Rational> out;
    out.reserve(seq.size());
    for (const auto& item : seq) out.push_back(rational_from_py(item));
    return out;
}

py::list rationals_to_py(const std::vector<Rational>& v) {
    py::list out;
    for (const auto& r : v) out.append(rational_to_py(r));
    return out;
}

EvalOptions make_options(const std::string& precision, double validity_radius) {
    EvalOptions opts;
    if (precision == "extended")
        opts.precision = Precision::Extended;
    else if (precision != "double")
        throw DomainError("precision must be 'double' or 'extended'");
    opts.validity_radius = validity_radius;
    return opts;
}

ComplexPoint point_from_complex(std::complex<double> p) { return ComplexPoint{p.real(), p.imag()}; }

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Kobayashi-Royden metric asymptotics on punctured spheres: exact "
              "covering-map coefficients, metric expansion and Picard radius bounds";

    py::register_exception<Error>(m, "PunctureError");

    py::class_<CoveringData>(m, "CoveringData")
        .def_readonly("level_N", &CoveringData::level_N)
        .def_readonly("order", &CoveringData::order)
        .def_property_readonly("scale_k",
                               [](const CoveringData& c) { return rational_to_py(c.scale_k); })
        .def_property_readonly("c", [](const CoveringData& c) { return rationals_to_py(c.c); })
        .def_property_readonly("b", [](const CoveringData& c) { return rationals_to_py(c.b); })
        .def_property_readonly("l", [](const CoveringData& c) { return rationals_to_py(c.l); })
        .def("to_json", [](const CoveringData& c) { return covering_to_json_string(c); })
        .def_static("from_json",
                    [](const std::string& text) { return covering_from_json_string(text); })
        .def("__repr__", [](const CoveringData& c) {
            return "<CoveringData level_N=" + std::to_string(c.level_N) + " order=" +
                   std::to_string(c.order) + ">";
        });

    py::class_<MetricValue>(m, "MetricValue")
        .def_readonly("value", &MetricValue::value)
        .def_readonly("truncation_order", &MetricValue::truncation_order)
        .def_readonly("term_breakdown", &MetricValue::term_breakdown)
        .def("__repr__", [](const MetricValue& v) {
            return "<MetricValue " + std::to_string(v.value) + " (M=" +
                   std::to_string(v.truncation_order) + ")>";
        });

    py::class_<RadiusBound>(m, "RadiusBound")
        .def_readonly("bound", &RadiusBound::bound)
        .def_readonly("truncation_order", &RadiusBound::truncation_order)
        .def_readonly("leading_term", &RadiusBound::leading_term)
        .def_readonly("direct_reciprocal", &RadiusBound::direct_reciprocal)
        .def_property_readonly(
            "p", [](const RadiusBound& b) { return std::complex<double>(b.p.re, b.p.im); })
        .def("__repr__",
             [](const RadiusBound& b) { return "<RadiusBound " + std::to_string(b.bound) + ">"; });

    m.def("sigma3", &sigma3, py::arg("m"), "sum of cubed divisors of m");

    m.def(
        "bell_polynomial",
        [](int n, int k, const py::sequence& t) {
            return rational_to_py(bell_polynomial(BellIndex{n, k}, rationals_from_py(t)));
        },
        py::arg("n"), py::arg("k"), py::arg("t"),
        "exponential Bell polynomial B_{n,k}(t_1, ..., t_{n-k+1}) over exact rationals");

    m.def(
        "solve_covering_coefficients",
        [](int N, const py::handle& c1, const py::handle& c2, int order) {
            return solve_covering_coefficients(N, rational_from_py(c1), rational_from_py(c2),
                                               order);
        },
        py::arg("N"), py::arg("c1"), py::arg("c2"), py::arg("order"),
        "solve c_3..c_order from the level-N Eisenstein/Schwarzian recursion");

    m.def(
        "covering_from_coefficients",
        [](const py::sequence& c, const py::handle& scale_k) {
            return covering_from_coefficients(rationals_from_py(c), rational_from_py(scale_k));
        },
        py::arg("c"), py::arg("scale_k") = 1);

    m.def("builtin_covering", &builtin_covering, py::arg("name"), py::arg("order") = 10,
          "'lambda' or 'gamma3'");

    m.def(
        "invert_covering_series",
        [](const py::sequence& c, int order) {
            return rationals_to_py(invert_covering_series(rationals_from_py(c), order));
        },
        py::arg("c"), py::arg("order"));

    m.def(
        "log_series_coefficients",
        [](const py::sequence& b, int order) {
            return rationals_to_py(log_series_coefficients(rationals_from_py(b), order));
        },
        py::arg("b"), py::arg("order"));

    m.def(
        "eta_quotient_expansion",
        [](const py::sequence& factors, const py::handle& prefactor, const py::handle& k,
           int order) {
            EtaQuotientSpec spec;
            for (const auto& f : factors) {
                auto pair = f.cast<py::sequence>();
                spec.factors.push_back({rational_from_py(pair[0]), pair[1].cast<int>()});
            }
            spec.prefactor = rational_from_py(prefactor);
            auto series = eta_quotient_expansion(spec, rational_from_py(k), order);
            return rationals_to_py(series.dense());
        },
        py::arg("factors"), py::arg("prefactor"), py::arg("k"), py::arg("order"),
        "degree-indexed coefficients of prod eta(scale*tau)^exponent in q_k, "
        "times the rational prefactor");

    m.def(
        "exp_reciprocal_coefficients",
        [](const py::sequence& l, int order) {
            return rationals_to_py(
                exp_reciprocal_coefficients(rationals_from_py(l), order).c_tilde);
        },
        py::arg("l"), py::arg("order"));

    m.def(
        "metric_expansion_eval",
        [](const CoveringData& cov, std::complex<double> p, double v_norm, int M,
           const std::string& precision, double validity_radius) {
            return metric_expansion_eval(point_from_complex(p), v_norm, cov, M,
                                         make_options(precision, validity_radius));
        },
        py::arg("cov"), py::arg("p"), py::arg("v_norm") = 1.0, py::arg("M") = 6,
        py::arg("precision") = "double", py::arg("validity_radius") = 0.25);

    m.def(
        "metric_direct_eval",
        [](const CoveringData& cov, std::complex<double> p, double v_norm,
           const std::string& precision, double validity_radius) {
            return metric_direct_eval(point_from_complex(p), v_norm, cov,
                                      make_options(precision, validity_radius));
        },
        py::arg("cov"), py::arg("p"), py::arg("v_norm") = 1.0, py::arg("precision") = "double",
        py::arg("validity_radius") = 0.25);

    m.def(
        "picard_radius_bound",
        [](const CoveringData& cov, std::complex<double> p, int M, const std::string& precision,
           double validity_radius) {
            return picard_radius_bound(point_from_complex(p), cov, M,
                                       make_options(precision, validity_radius));
        },
        py::arg("cov"), py::arg("p"), py::arg("M") = 3, py::arg("precision") = "double",
        py::arg("validity_radius") = 0.25);

    m.def(
        "run_verification",
        [](int order) {
            auto report = run_verification(order);
            py::list checks;
            for (const auto& c : report.checks)
                checks.append(py::make_tuple(c.name, c.pass, c.detail));
            return checks;
        },
        py::arg("order") = 14);
}
