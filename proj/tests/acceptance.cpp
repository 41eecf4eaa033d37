// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Exact checks run over GMP rationals; the convergence criteria evaluate in
// binary128 so the truncation gaps stay far above the floating floor.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "puncture/covering.hpp"
#include "puncture/metric.hpp"
#include "puncture/metric_eval.hpp"
#include "puncture/picard.hpp"
#include "puncture/series.hpp"

using namespace puncture;

namespace {

#ifdef PUNCTURE_HAVE_FLOAT128
using extended_t = __float128;
#else
using extended_t = long double;
#endif

int failures = 0;

struct Criterion {
    int id;
    std::string label;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string note;

    Criterion(int id_, std::string label_) : id(id_), label(std::move(label_)) {}

    void fail(const std::string& why) {
        if (ok) note = why;
        ok = false;
    }

    void finish(double budget_seconds = 0.0) {
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (budget_seconds > 0.0 && secs > budget_seconds)
            fail("runtime " + std::to_string(secs) + "s exceeds budget " +
                 std::to_string(budget_seconds) + "s");
        std::printf("%s %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", id, label.c_str(), secs,
                    ok ? "" : " — ", ok ? "" : note.c_str());
        if (!ok) ++failures;
    }
};

Rational random_rational(std::mt19937& rng, bool nonzero = false) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 6);
    int n = num(rng);
    while (nonzero && n == 0) n = num(rng);
    return Rational(n, den(rng));
}

std::vector<Rational> random_series(std::mt19937& rng, int order) {
    std::vector<Rational> c{random_rational(rng, true)};
    for (int m = 2; m <= order; ++m) c.push_back(random_rational(rng));
    return c;
}

// ---- criterion 1: lambda coefficients vs the eta-quotient oracle ----------
void criterion_1() {
    Criterion cr(1, "lambda covering coefficients match the eta-quotient oracle to order 10");
    auto solved = solve_covering_coefficients(2, Rational(16), Rational(-128), 10);
    auto eta = eta_quotient_expansion(lambda_eta_spec(), Rational(2), 10);
    if (!(solved.c_at(1) == Rational(16)) || !(solved.c_at(2) == Rational(-128)))
        cr.fail("anchor coefficients c1/c2 wrong");
    for (int m = 1; m <= 10 && cr.ok; ++m)
        if (!(solved.c_at(m) == eta.coeff(m)))
            cr.fail("mismatch at c_" + std::to_string(m) + ": " + solved.c_at(m).str() + " vs " +
                    eta.coeff(m).str());
    cr.finish(5.0);
}

// ---- criterion 2: the gamma3 example ---------------------------------------
void criterion_2() {
    Criterion cr(2, "gamma3 example: c3=9, b2=-3, b3=9 and eta expansion 1,3,9");
    auto solved = solve_covering_coefficients(3, Rational(1), Rational(3), 4);
    if (!(solved.c_at(3) == Rational(9))) cr.fail("c3 != 9");
    if (!(solved.b_at(2) == Rational(-3))) cr.fail("b2 != -3");
    if (!(solved.b_at(3) == Rational(9))) cr.fail("b3 != 9");
    auto eta = eta_quotient_expansion(gamma3_eta_spec(), Rational(3), 3);
    if (!(eta.coeff(1) == Rational(1) && eta.coeff(2) == Rational(3) &&
          eta.coeff(3) == Rational(9)))
        cr.fail("eta quotient of (eta(3t)/eta(t/3))^3 does not open 1, 3, 9");
    cr.finish(5.0);
}

// ---- criterion 3: composition identity -------------------------------------
void criterion_3() {
    Criterion cr(3, "composition identity c(b(x)) = x through x^16, builtins + 20 random");
    std::mt19937 rng(101u);
    auto probe = [&](const std::vector<Rational>& c, const std::string& label) {
        const int order = static_cast<int>(c.size());
        auto b = invert_covering_series(c, order);
        auto composed = series_compose(RationalSeries::from_one_based(c),
                                       RationalSeries::from_one_based(b));
        if (!series_agree_through(composed, RationalSeries::identity(order + 1), order + 1))
            cr.fail("nonzero residual for " + label);
    };
    probe(builtin_covering("lambda", 16).c, "lambda");
    probe(builtin_covering("gamma3", 16).c, "gamma3");
    for (int trial = 0; trial < 20 && cr.ok; ++trial)
        probe(random_series(rng, 16), "random trial " + std::to_string(trial));
    cr.finish(10.0);
}

// ---- criterion 4: dual-path equality ---------------------------------------
void criterion_4() {
    Criterion cr(4, "Bell reversion == Newton reversion and Bell l_m == log-series l_m");
    std::mt19937 rng(103u);
    std::uniform_int_distribution<int> ord(2, 15);
    for (int trial = 0; trial < 20 && cr.ok; ++trial) {
        const int order = ord(rng);
        auto c = random_series(rng, order);
        auto b_bell = invert_covering_series(c, order);
        auto b_newton = invert_series_newton(RationalSeries::from_one_based(c));
        for (int m = 1; m <= order; ++m)
            if (!(b_bell[static_cast<std::size_t>(m - 1)] == b_newton.coeff(m)))
                cr.fail("reversion mismatch at b_" + std::to_string(m));
    }
    for (int trial = 0; trial < 20 && cr.ok; ++trial) {
        const int order = ord(rng);
        auto b = random_series(rng, order + 1);
        auto l = log_series_coefficients(b, order);
        std::vector<Rational> unit{Rational(1)};
        for (int m = 1; m <= order; ++m) unit.push_back(b[static_cast<std::size_t>(m)] / b[0]);
        auto logs = series_log_unit(RationalSeries::polynomial(std::move(unit), order + 1));
        for (int m = 1; m <= order; ++m)
            if (!(l[static_cast<std::size_t>(m - 1)] == logs.coeff(m) * Rational(factorial(m))))
                cr.fail("log-coefficient mismatch at l_" + std::to_string(m));
    }
    cr.finish(0.0);
}

// ---- criterion 5: first-order metric law -----------------------------------
void criterion_5() {
    Criterion cr(5, "M=1 expansion at p=1e-4 matches the closed first-order formula to 1e-12");
    auto lam = builtin_covering("lambda", 8);
    const double p = 1e-4;
    auto mv = metric_expansion_eval(ComplexPoint{p, 0}, 1.0, lam, 1);
    const double L = std::log(std::fabs(p / 16.0));
    const double closed = 1.0 / (p * std::fabs(L)) * std::fabs(1.0 + 0.5 * (p - p / L));
    const double relerr = std::fabs(mv.value - closed) / closed;
    if (!(relerr < 1e-12)) cr.fail("relative error " + std::to_string(relerr));
    cr.finish(0.0);
}

// ---- criterion 6: expansion-vs-direct convergence --------------------------
void criterion_6() {
    Criterion cr(6, "expansion(M=6) vs direct: gap <= 1e-3 at r=1e-2, shrinking 10x per decade");
    GuardOptions guards;
    for (const char* name : {"lambda", "gamma3"}) {
        auto cov = builtin_covering(name, 10);
        detail::Evaluator<extended_t> ev(cov, guards);
        for (double theta : {0.0, M_PI / 3.0, M_PI}) {
            double prev_gap = -1.0;
            for (double r : {1e-2, 1e-3, 1e-4}) {
                const Cx<extended_t> p{static_cast<extended_t>(r * std::cos(theta)),
                                       static_cast<extended_t>(r * std::sin(theta))};
                const extended_t e = ev.expansion(p, extended_t{1}, 6).value;
                const extended_t d = ev.direct(p, extended_t{1}).value;
                const double gap = static_cast<double>(FloatOps<extended_t>::abs(e - d) / d);
                if (r == 1e-2 && gap > 1e-3)
                    cr.fail(std::string(name) + ": gap " + std::to_string(gap) + " at r=1e-2");
                if (prev_gap >= 0.0 && gap > prev_gap / 10.0)
                    cr.fail(std::string(name) + ": gap shrank only " +
                            std::to_string(prev_gap / gap) + "x into r=" + std::to_string(r));
                prev_gap = gap;
            }
        }
    }
    cr.finish(10.0);
}

// ---- criterion 7: Picard bound behavior ------------------------------------
void criterion_7() {
    Criterion cr(7, "Picard bound decreasing on p=10^-j and within 10|p| of the displayed terms");
    auto lam = builtin_covering("lambda", 8);
    double prev = 1e300;
    for (int j = 2; j <= 6 && cr.ok; ++j) {
        const double p = std::pow(10.0, -j);
        auto rb = picard_radius_bound(ComplexPoint{p, 0}, lam, 3);
        if (!(rb.bound < prev)) cr.fail("not strictly decreasing at p=1e-" + std::to_string(j));
        prev = rb.bound;
        const double L = std::log(p / 16.0);
        const double displayed = std::fabs(p * L + 0.5 * p * p - p * p * L);
        const double ratio = rb.bound / displayed;
        if (!(ratio >= 1.0 - 10.0 * p && ratio <= 1.0 + 10.0 * p))
            cr.fail("ratio " + std::to_string(ratio) + " outside [1-10|p|, 1+10|p|] at p=1e-" +
                    std::to_string(j));
    }
    cr.finish(0.0);
}

// ---- criterion 8: Eisenstein self-consistency ------------------------------
void criterion_8() {
    Criterion cr(8, "solved series reproduce 240*sigma3 slots of the Eisenstein relation, order 12");
    const std::map<int, std::pair<Rational, Rational>> seeds{
        {2, {Rational(16), Rational(-128)}},
        {3, {Rational(1), Rational(3)}},
        {4, {Rational(1), Rational(1, 2)}},
        {5, {Rational(2, 3), Rational(-5, 7)}},
    };
    for (const auto& [N, seed] : seeds) {
        auto cov = solve_covering_coefficients(N, seed.first, seed.second, 15);
        auto sch = schwarzian(cov.c_series());
        auto sch_log = schwarzian_via_log_terms(cov.c_series());
        if (!series_agree_through(sch, sch_log, sch.order()))
            cr.fail("Schwarzian dual paths disagree at N=" + std::to_string(N));
        // 1 + 240 sum sigma3(j) q^{N j} = 1 - q^2 {f, q}
        for (int j = 2; j <= 12 && cr.ok; ++j) {
            Rational expect(0);
            if (j % N == 0) expect = Rational(-240) * Rational(sigma3(j / N));
            if (!(sch.coeff(j - 2) == expect))
                cr.fail("N=" + std::to_string(N) + ", slot q^" + std::to_string(j) + ": got " +
                        sch.coeff(j - 2).str() + ", expected " + expect.str());
        }
    }
    cr.finish(0.0);
}

// ---- criterion 9: Bell brute-force oracle ----------------------------------
Rational bell_partition_oracle(int n, int k, const std::vector<Rational>& t) {
    std::vector<int> assign(static_cast<std::size_t>(n), 0);
    Rational total(0);
    auto rec = [&](auto&& self, int i, int used) -> void {
        if (i == n) {
            if (used != k) return;
            std::map<int, int> sizes;
            for (int a : assign) sizes[a]++;
            Rational prod(1);
            for (const auto& [block, size] : sizes) prod *= t[static_cast<std::size_t>(size - 1)];
            total += prod;
            return;
        }
        for (int b = 0; b <= used && b < k; ++b) {
            assign[static_cast<std::size_t>(i)] = b;
            self(self, i + 1, std::max(used, b + 1));
        }
    };
    rec(rec, 0, 0);
    return total;
}

void criterion_9() {
    Criterion cr(9, "Bell polynomials equal the set-partition enumeration, all n <= 8");
    std::mt19937 rng(107u);
    for (int n = 1; n <= 8 && cr.ok; ++n) {
        std::vector<Rational> t;
        for (int i = 0; i < n; ++i) t.push_back(random_rational(rng));
        for (int k = 1; k <= n && cr.ok; ++k)
            if (!(bell_polynomial(BellIndex{n, k}, t) == bell_partition_oracle(n, k, t)))
                cr.fail("mismatch at B_{" + std::to_string(n) + "," + std::to_string(k) + "}");
    }
    cr.finish(0.0);
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    if (failures == 0)
        std::printf("acceptance: all 9 criteria PASS\n");
    else
        std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
