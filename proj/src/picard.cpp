#include "puncture/picard.hpp"

#include <string>

#include "puncture/bell.hpp"

namespace puncture {

const Rational& ExpCoefficients::at(int m) const {
    if (m < 1 || m > static_cast<int>(c_tilde.size()))
        throw TruncationError("ExpCoefficients: ct_" + std::to_string(m) + " not retained");
    return c_tilde[static_cast<std::size_t>(m - 1)];
}

ExpCoefficients exp_reciprocal_coefficients(const std::vector<Rational>& l, int order) {
    if (order < 0) throw DomainError("exp_reciprocal_coefficients: negative order");
    if (static_cast<int>(l.size()) < order)
        throw DomainError("exp_reciprocal_coefficients: need l_1..l_order");
    std::vector<Rational> t;
    t.reserve(static_cast<std::size_t>(order));
    for (int j = 1; j <= order; ++j)
        t.push_back(Rational(j) * l[static_cast<std::size_t>(j - 1)]);
    return ExpCoefficients{bell_reciprocal_terms(std::span<const Rational>(t), order)};
}

namespace {

#ifdef PUNCTURE_HAVE_FLOAT128
using extended_t = __float128;
#else
using extended_t = long double;
#endif

template <typename F>
RadiusBound run_bound(ComplexPoint p, const CoveringData& cov, int M, const EvalOptions& opts,
                      const ExpCoefficients& ct) {
    detail::Evaluator<F> ev(cov, opts.guards());
    const Cx<F> pc{static_cast<F>(p.re), static_cast<F>(p.im)};
    auto bv = ev.picard_bound(pc, M, std::span<const Rational>(ct.c_tilde));
    RadiusBound out;
    out.bound = static_cast<double>(bv.bound);
    out.p = p;
    out.truncation_order = M;
    out.leading_term = static_cast<double>(bv.leading);
    out.direct_reciprocal = 1.0 / static_cast<double>(ev.direct(pc, F{1}).value);
    return out;
}

} // namespace

RadiusBound picard_radius_bound(ComplexPoint p, const CoveringData& cov, int M,
                                const EvalOptions& opts) {
    const auto ct = exp_reciprocal_coefficients(cov.l, std::min<int>(M, static_cast<int>(cov.l.size())));
    if (M > static_cast<int>(ct.c_tilde.size()))
        throw TruncationError("picard_radius_bound: M exceeds covering data");
    if (opts.precision == Precision::Extended) return run_bound<extended_t>(p, cov, M, opts, ct);
    return run_bound<double>(p, cov, M, opts, ct);
}

} // namespace puncture
