#include "puncture/verify.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "puncture/covering.hpp"
#include "puncture/metric.hpp"
#include "puncture/metric_eval.hpp"
#include "puncture/picard.hpp"
#include "puncture/series.hpp"

namespace puncture {

namespace {

#ifdef PUNCTURE_HAVE_FLOAT128
using extended_t = __float128;
#else
using extended_t = long double;
#endif

Rational random_rational(std::mt19937& rng, bool nonzero = false) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 6);
    int n = num(rng);
    while (nonzero && n == 0) n = num(rng);
    return Rational(n, den(rng));
}

std::vector<Rational> random_series(std::mt19937& rng, int order) {
    std::vector<Rational> c;
    c.reserve(static_cast<std::size_t>(order));
    c.push_back(random_rational(rng, true));
    for (int m = 2; m <= order; ++m) c.push_back(random_rational(rng));
    return c;
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << x;
    return os.str();
}

CheckResult check_composition_identity(const CoveringData& lambda, const CoveringData& gamma3,
                                       std::mt19937& rng) {
    CheckResult res{"composition-identity", true, ""};
    auto probe = [&](const std::vector<Rational>& c, const std::string& label) {
        const int order = static_cast<int>(c.size());
        auto b = invert_covering_series(c, order);
        auto composed = series_compose(RationalSeries::from_one_based(c),
                                       RationalSeries::from_one_based(b));
        if (!series_agree_through(composed, RationalSeries::identity(order + 1), order + 1)) {
            res.pass = false;
            res.detail = "nonzero residual for " + label;
        }
    };
    probe(lambda.c, "lambda");
    probe(gamma3.c, "gamma3");
    for (int trial = 0; trial < 20 && res.pass; ++trial)
        probe(random_series(rng, 16), "random trial " + std::to_string(trial));
    if (res.pass) res.detail = "all residual coefficients exactly 0 (builtins + 20 random, order 16)";
    return res;
}

CheckResult check_bell_vs_newton(std::mt19937& rng) {
    CheckResult res{"bell-vs-newton-reversion", true, ""};
    std::uniform_int_distribution<int> ord(3, 15);
    for (int trial = 0; trial < 20 && res.pass; ++trial) {
        const int order = ord(rng);
        auto c = random_series(rng, order);
        auto b_bell = invert_covering_series(c, order);
        auto b_newton = invert_series_newton(RationalSeries::from_one_based(c));
        for (int m = 1; m <= order; ++m) {
            if (!(b_bell[static_cast<std::size_t>(m - 1)] == b_newton.coeff(m))) {
                res.pass = false;
                res.detail = "mismatch at b_" + std::to_string(m) + ", trial " + std::to_string(trial);
                break;
            }
        }
    }
    if (res.pass) res.detail = "exact agreement, 20 random trials, orders <= 15";
    return res;
}

CheckResult check_log_dual_path(std::mt19937& rng) {
    CheckResult res{"log-coefficients-dual-path", true, ""};
    std::uniform_int_distribution<int> ord(2, 15);
    for (int trial = 0; trial < 20 && res.pass; ++trial) {
        const int order = ord(rng);
        auto b = random_series(rng, order + 1);
        auto l = log_series_coefficients(b, order);
        // series route: log(1 + sum b_{m+1}/b_1 f^m), m-th coefficient = l_m/m!
        std::vector<Rational> unit(static_cast<std::size_t>(order) + 1, Rational(0));
        unit[0] = Rational(1);
        for (int m = 1; m <= order; ++m)
            unit[static_cast<std::size_t>(m)] = b[static_cast<std::size_t>(m)] / b[0];
        auto logs = series_log_unit(RationalSeries::polynomial(std::move(unit), order + 1));
        for (int m = 1; m <= order; ++m) {
            if (!(logs.coeff(m) * Rational(factorial(m)) == l[static_cast<std::size_t>(m - 1)])) {
                res.pass = false;
                res.detail = "mismatch at l_" + std::to_string(m) + ", trial " + std::to_string(trial);
                break;
            }
        }
    }
    if (res.pass) res.detail = "exact agreement, 20 random trials, orders <= 15";
    return res;
}

CheckResult check_lambda_eta(const CoveringData& lambda) {
    CheckResult res{"lambda-eta-oracle", true, ""};
    auto eta = eta_quotient_expansion(lambda_eta_spec(), Rational(2), lambda.order);
    for (int m = 1; m <= lambda.order; ++m) {
        if (!(eta.coeff(m) == lambda.c_at(m))) {
            res.pass = false;
            res.detail = "c_" + std::to_string(m) + " = " + lambda.c_at(m).str() +
                         " vs eta " + eta.coeff(m).str();
            break;
        }
    }
    if (res.pass)
        res.detail = "recursion == eta quotient through c_" + std::to_string(lambda.order);
    return res;
}

CheckResult check_gamma3(const CoveringData& gamma3) {
    CheckResult res{"gamma3-example", true, ""};
    auto eta = eta_quotient_expansion(gamma3_eta_spec(), Rational(3), std::max(gamma3.order, 3));
    if (!(gamma3.c_at(3) == Rational(9)) || !(gamma3.b_at(2) == Rational(-3)) ||
        !(gamma3.b_at(3) == Rational(9)) || !(eta.coeff(1) == Rational(1)) ||
        !(eta.coeff(2) == Rational(3)) || !(eta.coeff(3) == Rational(9))) {
        res.pass = false;
        res.detail = "got c3=" + gamma3.c_at(3).str() + " b2=" + gamma3.b_at(2).str() +
                     " b3=" + gamma3.b_at(3).str();
        return res;
    }
    for (int m = 1; m <= gamma3.order; ++m) {
        if (!(eta.coeff(m) == gamma3.c_at(m))) {
            res.pass = false;
            res.detail = "eta mismatch at c_" + std::to_string(m);
            return res;
        }
    }
    res.detail = "c3=9, b2=-3, b3=9; recursion == eta quotient through c_" +
                 std::to_string(gamma3.order);
    return res;
}

CheckResult check_eisenstein(int order) {
    CheckResult res{"eisenstein-self-consistency", true, ""};
    const int depth = std::min(order, 14);
    for (int N = 2; N <= 5 && res.pass; ++N) {
        Rational c1(N == 2 ? 16 : 1), c2(N == 2 ? -128 : 3);
        auto cov = solve_covering_coefficients(N, c1, c2, depth);
        auto f = cov.c_series();
        auto sch = schwarzian(f);
        auto sch_log = schwarzian_via_log_terms(f);
        if (!series_agree_through(sch, sch_log, sch.order())) {
            res.pass = false;
            res.detail = "schwarzian dual-path mismatch at N=" + std::to_string(N);
            break;
        }
        // 1 - q^2 {f,q} = 1 + 240 sum sigma3(j) q^{N j}
        for (int j = 2; j - 2 < sch.order(); ++j) {
            Rational expect(0);
            if (j % N == 0) expect = Rational(-240) * Rational(sigma3(j / N));
            if (!(sch.coeff(j - 2) == expect)) {
                res.pass = false;
                res.detail = "N=" + std::to_string(N) + ": coefficient of q^" +
                             std::to_string(j - 2) + " is " + sch.coeff(j - 2).str() +
                             ", expected " + expect.str();
                break;
            }
        }
    }
    if (res.pass)
        res.detail = "N=2..5 reproduce 240*sigma3 slots exactly through order " +
                     std::to_string(depth);
    return res;
}

CheckResult check_expansion_vs_direct(const CoveringData& lambda, const CoveringData& gamma3,
                                      VerifyProfile profile) {
    CheckResult res{"expansion-vs-direct", true, ""};
    const double gate = profile == VerifyProfile::Strict ? 1e-4 : 1e-3;
    double worst_gap = 0;
    GuardOptions guards;
    for (const CoveringData* cov : {&lambda, &gamma3}) {
        detail::Evaluator<extended_t> ev(*cov, guards);
        for (double theta : {0.0, M_PI / 3.0, M_PI}) {
            double prev_gap = -1;
            for (double r : {1e-2, 1e-3}) {
                Cx<extended_t> p{static_cast<extended_t>(r * std::cos(theta)),
                                 static_cast<extended_t>(r * std::sin(theta))};
                const extended_t exp_v = ev.expansion(p, extended_t{1}, 6).value;
                const extended_t dir_v = ev.direct(p, extended_t{1}).value;
                // keep the difference in extended precision: the true gaps sit
                // far below double's resolution at small r
                const double gap =
                    static_cast<double>(FloatOps<extended_t>::abs(exp_v - dir_v) / dir_v);
                if (r == 1e-2) {
                    worst_gap = std::max(worst_gap, gap);
                    if (gap > gate) {
                        res.pass = false;
                        res.detail = "gap " + fmt(gap) + " above gate at r=1e-2";
                        return res;
                    }
                } else if (prev_gap >= 0 && gap > prev_gap / 10.0) {
                    res.pass = false;
                    res.detail = "gap did not shrink 10x from r=1e-2 to r=1e-3 (" +
                                 fmt(prev_gap) + " -> " + fmt(gap) + ")";
                    return res;
                }
                prev_gap = gap;
            }
        }
    }
    res.detail = "M=6 worst relative gap at r=1e-2: " + fmt(worst_gap) +
                 "; shrinks >= 10x into r=1e-3";
    return res;
}

CheckResult check_picard_reciprocal(const CoveringData& lambda) {
    CheckResult res{"picard-reciprocal", true, ""};
    double worst = 0;
    for (double theta : {0.0, M_PI / 3.0, M_PI}) {
        for (double r : {1e-3, 1e-4}) {
            ComplexPoint p{r * std::cos(theta), r * std::sin(theta)};
            auto bound = picard_radius_bound(p, lambda, 3);
            auto metric = metric_expansion_eval(p, 1.0, lambda, 3);
            const double product = bound.bound * metric.value;
            worst = std::max(worst, std::fabs(product - 1.0));
            if (std::fabs(product - 1.0) > 10.0 * r) {
                res.pass = false;
                res.detail = "product " + fmt(product) + " outside [1-10|p|, 1+10|p|] at r=" + fmt(r);
                return res;
            }
        }
    }
    double prev = 0;
    for (int j = 2; j <= 6; ++j) {
        const double r = std::pow(10.0, -j);
        auto bound = picard_radius_bound(ComplexPoint{r, 0.0}, lambda, 3);
        if (j > 2 && bound.bound >= prev) {
            res.pass = false;
            res.detail = "bound not strictly decreasing at p=1e-" + std::to_string(j);
            return res;
        }
        prev = bound.bound;
    }
    res.detail = "worst |bound*metric - 1| = " + fmt(worst) + "; bound strictly decreasing on 1e-2..1e-6";
    return res;
}

} // namespace

VerifyReport run_verification(int order, VerifyProfile profile, bool inject_corruption) {
    if (order < 8) throw DomainError("verification needs order >= 8 (M=6 checks consume l_1..l_7)");
    VerifyReport report;
    std::mt19937 rng(20240317u);

    CoveringData lambda = builtin_covering("lambda", order);
    CoveringData gamma3 = builtin_covering("gamma3", order);
    if (inject_corruption) lambda.c[2] += Rational(1);

    report.checks.push_back(check_composition_identity(lambda, gamma3, rng));
    report.checks.push_back(check_bell_vs_newton(rng));
    report.checks.push_back(check_log_dual_path(rng));
    report.checks.push_back(check_lambda_eta(lambda));
    report.checks.push_back(check_gamma3(gamma3));
    report.checks.push_back(check_eisenstein(order));
    report.checks.push_back(check_expansion_vs_direct(lambda, gamma3, profile));
    report.checks.push_back(check_picard_reciprocal(lambda));
    return report;
}

} // namespace puncture
