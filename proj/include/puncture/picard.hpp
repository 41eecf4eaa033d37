#pragma once

#include <vector>

#include "puncture/metric.hpp"

namespace puncture {

// Reciprocal-exponential coefficients ct_m of
//   1 / (1 + sum_{m>=1} m l_m f^m / m!) = 1 + sum_{m>=1} ct_m f^m / m!,
//   ct_m = sum_{k=1}^{m} (-1)^k k! B_{m,k}(l_1, 2 l_2, ..., (m-k+1) l_{m-k+1}).
struct ExpCoefficients {
    std::vector<Rational> c_tilde; // ct_1..ct_order

    const Rational& at(int m) const;
};

ExpCoefficients exp_reciprocal_coefficients(const std::vector<Rational>& l, int order);

// Upper bound for the maximal radius R of a holomorphic disk through p with
// unit derivative, together with the leading factor |p log|b1 p|| and the
// reciprocal of the direct-series metric for cross-checking.
struct RadiusBound {
    double bound = 0;
    ComplexPoint p;
    int truncation_order = 0;
    double leading_term = 0;
    double direct_reciprocal = 0;
};

RadiusBound picard_radius_bound(ComplexPoint p, const CoveringData& cov, int M,
                                const EvalOptions& opts = {});

} // namespace puncture
