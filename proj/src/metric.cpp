#include "puncture/metric.hpp"

namespace puncture {

namespace {

#ifdef PUNCTURE_HAVE_FLOAT128
using extended_t = __float128;
#else
using extended_t = long double;
#endif

template <typename F>
MetricValue run_expansion(ComplexPoint p, double v_norm, const CoveringData& cov, int M,
                          const EvalOptions& opts) {
    detail::Evaluator<F> ev(cov, opts.guards());
    auto res = ev.expansion(Cx<F>{static_cast<F>(p.re), static_cast<F>(p.im)},
                            static_cast<F>(v_norm), M);
    MetricValue out;
    out.value = static_cast<double>(res.value);
    out.truncation_order = M;
    out.term_breakdown.reserve(res.terms.size());
    for (const auto& t : res.terms) out.term_breakdown.push_back(to_std_complex(t));
    return out;
}

template <typename F>
MetricValue run_direct(ComplexPoint p, double v_norm, const CoveringData& cov,
                       const EvalOptions& opts) {
    detail::Evaluator<F> ev(cov, opts.guards());
    auto res = ev.direct(Cx<F>{static_cast<F>(p.re), static_cast<F>(p.im)},
                         static_cast<F>(v_norm));
    MetricValue out;
    out.value = static_cast<double>(res.value);
    out.truncation_order = cov.order;
    return out;
}

void check_v_norm(double v_norm) {
    if (v_norm < 0) throw DomainError("v_norm must be nonnegative");
}

} // namespace

double c_m_term(int m, ComplexPoint p, const CoveringData& cov, const EvalOptions& opts) {
    detail::Evaluator<double> ev(cov, opts.guards());
    return ev.c_terms(Cx<double>{p.re, p.im}, m).back();
}

std::complex<double> r_m_term(int m, ComplexPoint p, const CoveringData& cov,
                              const EvalOptions& opts) {
    if (m < 1) throw DomainError("r_m_term: m must be >= 1");
    detail::Evaluator<double> ev(cov, opts.guards());
    return to_std_complex(ev.r_terms(Cx<double>{p.re, p.im}, m).back());
}

MetricValue metric_expansion_eval(ComplexPoint p, double v_norm, const CoveringData& cov, int M,
                                  const EvalOptions& opts) {
    check_v_norm(v_norm);
    if (opts.precision == Precision::Extended)
        return run_expansion<extended_t>(p, v_norm, cov, M, opts);
    return run_expansion<double>(p, v_norm, cov, M, opts);
}

MetricValue metric_direct_eval(ComplexPoint p, double v_norm, const CoveringData& cov,
                               const EvalOptions& opts) {
    check_v_norm(v_norm);
    if (opts.precision == Precision::Extended)
        return run_direct<extended_t>(p, v_norm, cov, opts);
    return run_direct<double>(p, v_norm, cov, opts);
}

} // namespace puncture
