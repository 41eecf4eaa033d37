#include "doctest.h"

#include <random>
#include <vector>

#include "puncture/covering.hpp"

using namespace puncture;

namespace {

std::vector<Rational> random_one_based(std::mt19937& rng, int order) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 6);
    std::vector<Rational> c;
    c.push_back(Rational(num(rng) | 1, den(rng)));
    for (int m = 2; m <= order; ++m) c.push_back(Rational(num(rng), den(rng)));
    return c;
}

// Coefficients of prod_n (1 - x^n)^{-3}: partitions with three colors.
// Small independent oracle for the low-degree gamma3 eta coefficients.
std::vector<long> three_colored_partitions(int upto) {
    std::vector<long> dp(static_cast<std::size_t>(upto) + 1, 0);
    dp[0] = 1;
    for (int part = 1; part <= upto; ++part)
        for (int color = 0; color < 3; ++color)
            for (int j = part; j <= upto; ++j) dp[static_cast<std::size_t>(j)] += dp[static_cast<std::size_t>(j - part)];
    return dp;
}

} // namespace

TEST_CASE("sigma3") {
    CHECK(sigma3(1) == 1);
    CHECK(sigma3(2) == 9);
    CHECK(sigma3(6) == 252);
    CHECK_THROWS_AS(sigma3(0), DomainError);
    // brute-force divisor scan
    for (std::int64_t m = 1; m <= 200; ++m) {
        std::int64_t expect = 0;
        for (std::int64_t d = 1; d <= m; ++d)
            if (m % d == 0) expect += d * d * d;
        CHECK(sigma3(m) == expect);
    }
}

TEST_CASE("level-2 recursion solves the lambda coefficients") {
    auto cov = solve_covering_coefficients(2, Rational(16), Rational(-128), 3);
    CHECK(cov.c_at(3) == Rational(704));

    auto deep = solve_covering_coefficients(2, Rational(16), Rational(-128), 10);
    auto eta = eta_quotient_expansion(lambda_eta_spec(), Rational(2), 10);
    for (int m = 1; m <= 10; ++m) CHECK(deep.c_at(m) == eta.coeff(m));
    CHECK(deep.level_N == 2);
    CHECK(deep.scale_k == Rational(2));
}

TEST_CASE("level-3 recursion solves the gamma3 coefficients") {
    auto cov = solve_covering_coefficients(3, Rational(1), Rational(3), 3);
    CHECK(cov.c_at(3) == Rational(9));

    auto shallow = solve_covering_coefficients(3, Rational(1), Rational(3), 2);
    CHECK(shallow.order == 2);
    CHECK(shallow.c_at(1) == Rational(1));
    CHECK(shallow.c_at(2) == Rational(3));

    auto deep = solve_covering_coefficients(3, Rational(1), Rational(3), 5);
    CHECK(deep.c_at(4) == Rational(22));
    CHECK(deep.c_at(5) == Rational(51));
    CHECK(deep.b_at(1) == Rational(1));
    CHECK(deep.b_at(2) == Rational(-3));
    CHECK(deep.b_at(3) == Rational(9));
}

TEST_CASE("recursion rejects bad inputs") {
    CHECK_THROWS_AS(solve_covering_coefficients(6, Rational(1), Rational(1), 5), DomainError);
    CHECK_THROWS_AS(solve_covering_coefficients(1, Rational(1), Rational(1), 5), DomainError);
    CHECK_THROWS_AS(solve_covering_coefficients(2, Rational(0), Rational(1), 5), DomainError);
    CHECK_THROWS_AS(solve_covering_coefficients(2, Rational(16), Rational(-128), 1), DomainError);
}

TEST_CASE("Bell reversion formula") {
    auto b1 = invert_covering_series({Rational(1)}, 1);
    CHECK(b1 == std::vector<Rational>{Rational(1)});

    auto bl = invert_covering_series({Rational(16), Rational(-128), Rational(704)}, 3);
    CHECK(bl[0] == Rational(1, 16));
    CHECK(bl[1] == Rational(1, 32));

    auto bg = invert_covering_series({Rational(1), Rational(3), Rational(9)}, 3);
    CHECK(bg == std::vector<Rational>{Rational(1), Rational(-3), Rational(9)});

    CHECK_THROWS_AS(invert_covering_series({Rational(0), Rational(1)}, 2), DomainError);
}

TEST_CASE("Bell reversion matches the coefficient-matching oracle") {
    std::mt19937 rng(41u);
    std::uniform_int_distribution<int> ord(2, 15);
    for (int trial = 0; trial < 20; ++trial) {
        const int order = ord(rng);
        auto c = random_one_based(rng, order);
        auto b_bell = invert_covering_series(c, order);
        auto b_newton = invert_series_newton(RationalSeries::from_one_based(c));
        for (int m = 1; m <= order; ++m)
            CHECK(b_bell[static_cast<std::size_t>(m - 1)] == b_newton.coeff(m));
    }
}

TEST_CASE("log-expansion coefficients") {
    auto l0 = log_series_coefficients({Rational(1), Rational(0), Rational(0), Rational(0)}, 3);
    for (const auto& v : l0) CHECK(v == Rational(0));

    auto lam = builtin_covering("lambda", 4);
    CHECK(lam.l_at(1) == Rational(1, 2));

    auto g3 = builtin_covering("gamma3", 4);
    CHECK(g3.l_at(1) == Rational(-3));
    CHECK(g3.l_at(2) == Rational(9));

    CHECK_THROWS_AS(log_series_coefficients({Rational(0), Rational(1)}, 1), DomainError);
    // needs b_{order+1}
    CHECK_THROWS_AS(log_series_coefficients({Rational(1), Rational(2)}, 2), DomainError);
}

TEST_CASE("log-expansion coefficients match the series logarithm") {
    std::mt19937 rng(43u);
    std::uniform_int_distribution<int> ord(1, 12);
    for (int trial = 0; trial < 20; ++trial) {
        const int order = ord(rng);
        auto b = random_one_based(rng, order + 1);
        auto l = log_series_coefficients(b, order);
        std::vector<Rational> unit{Rational(1)};
        for (int m = 1; m <= order; ++m) unit.push_back(b[static_cast<std::size_t>(m)] / b[0]);
        auto logs = series_log_unit(RationalSeries::polynomial(std::move(unit), order + 1));
        for (int m = 1; m <= order; ++m)
            CHECK(l[static_cast<std::size_t>(m - 1)] == logs.coeff(m) * Rational(factorial(m)));
    }
}

TEST_CASE("eta quotient expansions") {
    // empty product is the constant 1
    auto one = eta_quotient_expansion(EtaQuotientSpec{}, Rational(1), 3);
    CHECK(one.coeff(0) == Rational(1));
    for (int d = 1; d <= 3; ++d) CHECK(one.coeff(d) == Rational(0));

    // (eta(3 tau)/eta(tau/3))^3 = q3 + 3 q3^2 + 9 q3^3 + ...; below degree 9
    // the coefficients are the three-colored partition numbers
    auto g3 = eta_quotient_expansion(gamma3_eta_spec(), Rational(3), 8);
    auto p3 = three_colored_partitions(7);
    CHECK(g3.coeff(0) == Rational(0));
    for (int m = 1; m <= 8; ++m) CHECK(g3.coeff(m) == Rational(p3[static_cast<std::size_t>(m - 1)]));

    auto lam = eta_quotient_expansion(lambda_eta_spec(), Rational(2), 4);
    CHECK(lam.coeff(1) == Rational(16));
    CHECK(lam.coeff(2) == Rational(-128));
    CHECK(lam.coeff(3) == Rational(704));
    CHECK(lam.coeff(4) == Rational(-3072));
}

TEST_CASE("eta spec leading powers") {
    CHECK(lambda_eta_spec().leading_q_power() == Rational(1, 2));
    CHECK(gamma3_eta_spec().leading_q_power() == Rational(1, 3));
}

TEST_CASE("eta quotient rejects non-integral exponents") {
    EtaQuotientSpec spec;
    spec.factors = {{Rational(1, 5), 24}};
    CHECK_THROWS_AS(eta_quotient_expansion(spec, Rational(2), 6), DomainError);

    EtaQuotientSpec negative;
    negative.factors = {{Rational(1, 3), -3}};
    CHECK_THROWS_AS(eta_quotient_expansion(negative, Rational(3), 6), DomainError);
}

TEST_CASE("user-supplied covering data") {
    auto cov = covering_from_coefficients({Rational(2), Rational(1)}, Rational(1));
    CHECK(cov.level_N == 0);
    CHECK(cov.b_at(1) == Rational(1, 2));
    CHECK(cov.b_at(2) == Rational(-1, 8));
    CHECK_THROWS_AS(covering_from_coefficients({Rational(0)}, Rational(1)), DomainError);
}

TEST_CASE("covering validation catches corrupted data") {
    auto cov = builtin_covering("lambda", 5);
    cov.validate();
    cov.c[2] += Rational(1);
    CHECK_THROWS_AS(cov.validate(), DomainError);
}

TEST_CASE("composition identity holds for every produced covering") {
    std::mt19937 rng(47u);
    for (int trial = 0; trial < 10; ++trial) {
        auto c = random_one_based(rng, 10);
        auto cov = covering_from_coefficients(c, Rational(1));
        auto composed = series_compose(cov.c_series(), cov.b_series());
        CHECK(series_agree_through(composed, RationalSeries::identity(11), 11));
    }
}

TEST_CASE("builtin covering names") {
    CHECK_THROWS_AS(builtin_covering("unknown", 5), DomainError);
}

TEST_CASE("deep solves stay consistent for all levels") {
    for (int N = 2; N <= 5; ++N) {
        const Rational c1 = N == 2 ? Rational(16) : Rational(1);
        const Rational c2 = N == 2 ? Rational(-128) : Rational(N, 2);
        auto cov = solve_covering_coefficients(N, c1, c2, 24);
        auto composed = series_compose(cov.c_series(), cov.b_series());
        CHECK(series_agree_through(composed, RationalSeries::identity(25), 25));
        auto sch = schwarzian(cov.c_series());
        for (int j = 2; j - 2 < sch.order(); ++j) {
            Rational expect(0);
            if (j % N == 0) expect = Rational(-240) * Rational(sigma3(j / N));
            CHECK(sch.coeff(j - 2) == expect);
        }
    }
}
