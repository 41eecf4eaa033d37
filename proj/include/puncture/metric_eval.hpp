#pragma once

#include <span>
#include <vector>

#include "puncture/covering.hpp"
#include "puncture/errors.hpp"
#include "puncture/float_ops.hpp"

namespace puncture {

// Guard settings shared by the metric and radius evaluations. The expansion
// and the inversion series are trustworthy only near the puncture; points
// outside |b1 p| <= validity_radius are rejected rather than extrapolated.
struct GuardOptions {
    double validity_radius = 0.25;
    double tail_guard = 1e-3;
};

namespace detail {

// All three evaluations (metric expansion, direct series metric, radius
// bound) at one floating precision F. Coefficients are converted from exact
// rationals on construction, point work happens per call.
template <typename F>
class Evaluator {
public:
    Evaluator(const CoveringData& cov, GuardOptions guards = {})
        : guards_(guards), order_(cov.order) {
        b_.reserve(cov.b.size());
        for (const auto& x : cov.b) b_.push_back(rational_to<F>(x));
        l_.reserve(cov.l.size());
        for (const auto& x : cov.l) l_.push_back(rational_to<F>(x));
    }

    struct Value {
        F value{0};
        std::vector<Cx<F>> terms;
    };

    // log|b1 p| with the validity-region and singularity guards applied.
    F log_abs_b1p(Cx<F> p) const {
        const F ab = FloatOps<F>::abs(b_[0]) * p.abs();
        if (!(p.abs() > F{0})) throw DomainError("evaluation point p must be nonzero");
        if (static_cast<double>(ab) > guards_.validity_radius)
            throw DivergenceGuardError("point outside validity region |b1 p| <= " +
                                       std::to_string(guards_.validity_radius));
        const F L = FloatOps<F>::log(ab);
        if (L == F{0}) throw SingularLogError("log|b1 p| vanishes at this point");
        return L;
    }

    // C_0..C_M; C_m = sum_{k=1}^m (-1)^k k!/log^k|b1 p| * B_{m,k}(Re(l_1 p),...).
    std::vector<F> c_terms(Cx<F> p, int M) const {
        require_order(M);
        const F L = log_abs_b1p(p);
        const std::vector<Cx<F>> pw = powers(p, M);
        std::vector<F> t(static_cast<std::size_t>(M), F{0});
        for (int j = 1; j <= M; ++j)
            t[static_cast<std::size_t>(j - 1)] = (l_[static_cast<std::size_t>(j - 1)] * pw[static_cast<std::size_t>(j)]).re;
        std::vector<F> out(static_cast<std::size_t>(M) + 1, F{0});
        for (int m = 1; m <= M; ++m) {
            F acc{0};
            F inv_L_pow = F{1};
            for (int k = 1; k <= m; ++k) {
                inv_L_pow = inv_L_pow / L;
                F term = integer_to<F>(factorial(k)) * inv_L_pow *
                         bell_polynomial(BellIndex{m, k},
                                         std::span<const F>(t.data(), static_cast<std::size_t>(m - k + 1)));
                if (k % 2 == 1)
                    acc = acc - term;
                else
                    acc = acc + term;
            }
            out[static_cast<std::size_t>(m)] = acc;
        }
        return out;
    }

    // R_m combining the log-derivative and reciprocal-log contributions:
    //   R_m = l_m p^m/(m-1)! + sum_{k=1}^{m-1} l_k C_{m-k} p^k/((k-1)!(m-k)!)
    //         + C_m/m!.
    std::vector<Cx<F>> r_terms(Cx<F> p, int M) const {
        const std::vector<F> C = c_terms(p, M);
        const std::vector<Cx<F>> pw = powers(p, M);
        std::vector<Cx<F>> out(static_cast<std::size_t>(M) + 1);
        for (int m = 1; m <= M; ++m) {
            Cx<F> acc = l_[static_cast<std::size_t>(m - 1)] * pw[static_cast<std::size_t>(m)] /
                        integer_to<F>(factorial(m - 1));
            for (int k = 1; k <= m - 1; ++k) {
                const F scale = C[static_cast<std::size_t>(m - k)] /
                                (integer_to<F>(factorial(k - 1)) * integer_to<F>(factorial(m - k)));
                acc = acc + l_[static_cast<std::size_t>(k - 1)] * pw[static_cast<std::size_t>(k)] * scale;
            }
            acc = acc + Cx<F>{C[static_cast<std::size_t>(m)] / integer_to<F>(factorial(m)), F{0}};
            out[static_cast<std::size_t>(m)] = acc;
        }
        return out;
    }

    // chi(p; v) from the truncated expansion, with the per-m breakdown.
    Value expansion(Cx<F> p, F v_norm, int M) const {
        const F L = log_abs_b1p(p);
        Value out;
        out.terms = r_terms(p, M);
        Cx<F> S{F{1}, F{0}};
        for (int m = 1; m <= M; ++m) S = S + out.terms[static_cast<std::size_t>(m)];
        out.terms.erase(out.terms.begin()); // drop the unused m=0 slot
        const F base = S.abs() / (p.abs() * FloatOps<F>::abs(L));
        out.value = base * v_norm;
        return out;
    }

    // chi(p; v) = |q'(p)| / (|q(p)| |log|q(p)||) * v from the truncated
    // inversion series itself; the oracle the expansion is checked against.
    Value direct(Cx<F> p, F v_norm) const {
        log_abs_b1p(p); // reuse the region/zero guards
        Cx<F> q{F{0}, F{0}};
        Cx<F> qp{F{0}, F{0}};
        for (int m = order_; m >= 1; --m) {
            q = q * p + Cx<F>{b_[static_cast<std::size_t>(m - 1)], F{0}};
            qp = qp * p + Cx<F>{integer_to<F>(mpz_class(m)) * b_[static_cast<std::size_t>(m - 1)], F{0}};
        }
        q = q * p; // no constant term
        if (!(q.abs() > F{0})) throw SingularLogError("q(p) evaluates to zero");
        if (order_ >= 2) {
            F last = FloatOps<F>::abs(b_[static_cast<std::size_t>(order_ - 1)]);
            for (int i = 0; i < order_; ++i) last = last * p.abs();
            if (!(static_cast<double>(last) <
                  guards_.tail_guard * static_cast<double>(q.abs())))
                throw DivergenceGuardError(
                    "inversion series tail too large: last retained term is not "
                    "small against the partial sum");
        }
        const F lq = FloatOps<F>::log(q.abs());
        if (lq == F{0}) throw SingularLogError("log|q(p)| vanishes at this point");
        Value out;
        out.value = qp.abs() / (q.abs() * FloatOps<F>::abs(lq)) * v_norm;
        return out;
    }

    // Radius-bound expansion |p||log|b1 p|| * |1 + sum_m (ct_m p^m/m!
    //   + sum_{k=1}^m ct_{m-k} p^{m-k} Re(l_k p^k)/((m-k)! k! log|b1 p|))|,
    // with ct_0 = 1 and ct the reciprocal-exponential coefficients.
    struct BoundValue {
        F bound{0};
        F leading{0};
    };
    BoundValue picard_bound(Cx<F> p, int M, std::span<const Rational> c_tilde) const {
        require_order(M);
        if (static_cast<int>(c_tilde.size()) < M)
            throw TruncationError("picard bound: fewer reciprocal coefficients than M");
        const F L = log_abs_b1p(p);
        const std::vector<Cx<F>> pw = powers(p, M);
        std::vector<F> ct(static_cast<std::size_t>(M) + 1, F{1});
        for (int m = 1; m <= M; ++m)
            ct[static_cast<std::size_t>(m)] = rational_to<F>(c_tilde[static_cast<std::size_t>(m - 1)]);
        Cx<F> S{F{1}, F{0}};
        for (int m = 1; m <= M; ++m) {
            Cx<F> term = ct[static_cast<std::size_t>(m)] * pw[static_cast<std::size_t>(m)] /
                         integer_to<F>(factorial(m));
            for (int k = 1; k <= m; ++k) {
                const F re_lp = (l_[static_cast<std::size_t>(k - 1)] * pw[static_cast<std::size_t>(k)]).re;
                const F denom = integer_to<F>(factorial(m - k)) * integer_to<F>(factorial(k)) * L;
                term = term + ct[static_cast<std::size_t>(m - k)] * pw[static_cast<std::size_t>(m - k)] *
                                  (re_lp / denom);
            }
            S = S + term;
        }
        BoundValue out;
        out.leading = p.abs() * FloatOps<F>::abs(L);
        out.bound = out.leading * S.abs();
        return out;
    }

private:
    void require_order(int M) const {
        if (M < 0) throw DomainError("truncation order M must be nonnegative");
        if (M > static_cast<int>(l_.size()))
            throw TruncationError("truncation order M=" + std::to_string(M) +
                                  " exceeds covering data (have l_1..l_" +
                                  std::to_string(l_.size()) + ")");
    }

    // [p^0, p^1, ..., p^M]
    std::vector<Cx<F>> powers(Cx<F> p, int M) const {
        std::vector<Cx<F>> pw(static_cast<std::size_t>(M) + 1, Cx<F>{F{1}, F{0}});
        for (int j = 1; j <= M; ++j)
            pw[static_cast<std::size_t>(j)] = pw[static_cast<std::size_t>(j - 1)] * p;
        return pw;
    }

    GuardOptions guards_;
    int order_;
    std::vector<F> b_;
    std::vector<F> l_;
};

} // namespace detail

} // namespace puncture
