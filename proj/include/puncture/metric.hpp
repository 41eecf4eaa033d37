#pragma once

#include <complex>
#include <vector>

#include "puncture/covering.hpp"
#include "puncture/metric_eval.hpp"

namespace puncture {

// Floating precision for metric/radius evaluation. Extended maps to binary128
// where the toolchain provides it (long double otherwise); coefficients are
// converted from exact rationals at evaluation time either way.
enum class Precision { Double, Extended };

// Evaluation point p near the puncture 0. Must be nonzero and inside the
// validity region |b1 p| <= validity_radius.
struct ComplexPoint {
    double re = 0;
    double im = 0;
};

struct EvalOptions {
    Precision precision = Precision::Double;
    double validity_radius = 0.25;
    double tail_guard = 1e-3;

    GuardOptions guards() const { return GuardOptions{validity_radius, tail_guard}; }
};

// Evaluated metric chi_M(p; v) with the per-order contributions R_m(p).
struct MetricValue {
    double value = 0;
    int truncation_order = 0;
    std::vector<std::complex<double>> term_breakdown;
};

// C_m(p): the reciprocal-log correction coefficients; C_0 = 0.
double c_m_term(int m, ComplexPoint p, const CoveringData& cov, const EvalOptions& opts = {});

// R_m(p): full m-th term of the metric expansion.
std::complex<double> r_m_term(int m, ComplexPoint p, const CoveringData& cov,
                              const EvalOptions& opts = {});

// chi_M(p; v) ~ 1/(|p||log|b1 p||) * |1 + sum_{m=1}^{M} R_m(p)| * v_norm.
MetricValue metric_expansion_eval(ComplexPoint p, double v_norm, const CoveringData& cov, int M,
                                  const EvalOptions& opts = {});

// chi_M(p; v) = |q'(p)| / (|q(p)| |log|q(p)||) * v_norm from the truncated
// inversion series; independent of the expansion path above.
MetricValue metric_direct_eval(ComplexPoint p, double v_norm, const CoveringData& cov,
                               const EvalOptions& opts = {});

} // namespace puncture
