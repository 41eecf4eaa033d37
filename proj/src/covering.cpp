#include "puncture/covering.hpp"

#include <string>

#include "puncture/bell.hpp"

namespace puncture {

const Rational& CoveringData::c_at(int m) const {
    if (m < 1 || m > static_cast<int>(c.size()))
        throw TruncationError("CoveringData: c_" + std::to_string(m) + " not retained");
    return c[static_cast<std::size_t>(m - 1)];
}

const Rational& CoveringData::b_at(int m) const {
    if (m < 1 || m > static_cast<int>(b.size()))
        throw TruncationError("CoveringData: b_" + std::to_string(m) + " not retained");
    return b[static_cast<std::size_t>(m - 1)];
}

const Rational& CoveringData::l_at(int m) const {
    if (m < 1 || m > static_cast<int>(l.size()))
        throw TruncationError("CoveringData: l_" + std::to_string(m) + " not retained");
    return l[static_cast<std::size_t>(m - 1)];
}

void CoveringData::validate() const {
    if (order < 1) throw DomainError("CoveringData: order must be >= 1");
    if (level_N != 0 && (level_N < 2 || level_N > 5))
        throw DomainError("CoveringData: level_N must be 0 (user-supplied) or 2..5");
    if (static_cast<int>(c.size()) != order || static_cast<int>(b.size()) != order)
        throw DomainError("CoveringData: c and b must hold exactly `order` coefficients");
    if (static_cast<int>(l.size()) != std::max(order - 1, 0))
        throw DomainError("CoveringData: l must hold order-1 coefficients");
    if (c[0].is_zero()) throw DomainError("CoveringData: c1 must be nonzero");
    if (!(b[0] * c[0] == Rational(1)))
        throw DomainError("CoveringData: b1 must equal 1/c1");
    if (scale_k.sign() <= 0) throw DomainError("CoveringData: scale_k must be positive");
    auto composed = series_compose(c_series(), b_series());
    if (!series_agree_through(composed, RationalSeries::identity(order + 1),
                              std::min(composed.order(), order + 1)))
        throw DomainError("CoveringData: c(b(x)) does not reduce to the identity");
}

std::int64_t sigma3(std::int64_t m) {
    if (m < 1) throw DomainError("sigma3: argument must be >= 1");
    if (m > 50000) throw DomainError("sigma3: argument too large for exact int64 result");
    std::int64_t total = 0;
    for (std::int64_t d = 1; d * d <= m; ++d) {
        if (m % d != 0) continue;
        total += d * d * d;
        const std::int64_t e = m / d;
        if (e != d) total += e * e * e;
    }
    return total;
}

std::vector<Rational> invert_covering_series(const std::vector<Rational>& c, int order) {
    if (order < 1) throw DomainError("invert_covering_series: order must be >= 1");
    if (static_cast<int>(c.size()) < order)
        throw DomainError("invert_covering_series: fewer than `order` coefficients supplied");
    if (c[0].is_zero()) throw DomainError("invert_covering_series: c1 must be nonzero");
    const Rational inv_c1 = c[0].inverse();

    std::vector<Rational> b;
    b.reserve(static_cast<std::size_t>(order));
    b.push_back(inv_c1);
    for (int m = 2; m <= order; ++m) {
        // argument vector (0, 2! c_2, ..., m! c_m): exactly m entries, the
        // arity B_{m+k-1,k} requires for every k
        std::vector<Rational> t(static_cast<std::size_t>(m), Rational(0));
        for (int j = 2; j <= m; ++j)
            t[static_cast<std::size_t>(j - 1)] = Rational(factorial(j)) * c[static_cast<std::size_t>(j - 1)];
        Rational acc(0);
        Rational c1_pow = inv_c1; // 1/c1^{m+k} built incrementally from 1/c1^{m+1}
        for (int i = 0; i < m; ++i) c1_pow *= inv_c1;
        for (int k = 1; k <= m - 1; ++k) {
            Rational term = bell_polynomial(BellIndex{m + k - 1, k}, std::span<const Rational>(t)) * c1_pow;
            if (k % 2 == 1)
                acc -= term;
            else
                acc += term;
            c1_pow *= inv_c1;
        }
        b.push_back(acc / Rational(factorial(m)));
    }
    return b;
}

std::vector<Rational> log_series_coefficients(const std::vector<Rational>& b, int order) {
    if (order < 0) throw DomainError("log_series_coefficients: negative order");
    if (static_cast<int>(b.size()) < order + 1)
        throw DomainError("log_series_coefficients: need b_1..b_{order+1}");
    if (b[0].is_zero()) throw DomainError("log_series_coefficients: b1 must be nonzero");
    const Rational inv_b1 = b[0].inverse();
    std::vector<Rational> t;
    t.reserve(static_cast<std::size_t>(order));
    for (int j = 1; j <= order; ++j)
        t.push_back(Rational(factorial(j)) * b[static_cast<std::size_t>(j)] * inv_b1);
    return bell_log_terms(std::span<const Rational>(t), order);
}

namespace {

// Assembles b and l for already-known c coefficients and validates the bundle.
CoveringData finish_covering(int level_N, Rational scale_k, std::vector<Rational> c) {
    CoveringData cov;
    cov.level_N = level_N;
    cov.scale_k = std::move(scale_k);
    cov.order = static_cast<int>(c.size());
    cov.b = invert_covering_series(c, cov.order);
    cov.l = log_series_coefficients(cov.b, cov.order - 1);
    cov.c = std::move(c);
    cov.validate();
    return cov;
}

} // namespace

CoveringData solve_covering_coefficients(int N, const Rational& c1, const Rational& c2, int order) {
    if (N < 2 || N > 5)
        throw DomainError("solve_covering_coefficients: level N must be one of 2,3,4,5");
    if (c1.is_zero()) throw DomainError("solve_covering_coefficients: c1 must be nonzero");
    if (order < 2) throw DomainError("solve_covering_coefficients: order must be >= 2");

    const Rational inv_c1 = c1.inverse();
    std::vector<Rational> c{c1, c2};
    std::vector<Rational> lt{Rational(2) * c2 * inv_c1}; // lt[i] = lt_{i+1}

    for (int m = 0; m + 3 <= order; ++m) {
        // lt_{m+2} from the level relation
        Rational conv(0);
        for (int k = 0; k <= m; ++k) {
            const mpz_class denom = factorial(k) * factorial(m - k);
            conv += lt[static_cast<std::size_t>(k)] * lt[static_cast<std::size_t>(m - k)] /
                    Rational(denom);
        }
        Rational rhs(0);
        if ((m + 2) % N == 0) rhs = Rational(-240) * Rational(sigma3((m + 2) / N));
        const Rational lt_next = (rhs + conv) * Rational(factorial(m)) / Rational(2);

        // lt_{m+2} = (m+3)! c_{m+3} / c1 + known lower-order Bell terms; peel
        // the k >= 2 part off and solve for c_{m+3}
        std::vector<Rational> t;
        t.reserve(static_cast<std::size_t>(m + 1));
        for (int j = 1; j <= m + 1; ++j)
            t.push_back(Rational(factorial(j + 1)) * c[static_cast<std::size_t>(j)]);
        Rational rest(0);
        Rational c1_pow = inv_c1 * inv_c1;
        for (int k = 2; k <= m + 2; ++k) {
            Rational term = Rational(factorial(k - 1)) *
                            bell_polynomial(BellIndex{m + 2, k},
                                            std::span<const Rational>(t.data(),
                                                                      static_cast<std::size_t>(m + 3 - k))) *
                            c1_pow;
            if (k % 2 == 1)
                rest += term;
            else
                rest -= term;
            c1_pow *= inv_c1;
        }
        c.push_back((lt_next - rest) * c1 / Rational(factorial(m + 3)));
        lt.push_back(lt_next);
    }

    return finish_covering(N, Rational(N), std::move(c));
}

CoveringData covering_from_coefficients(std::vector<Rational> c, const Rational& scale_k) {
    if (c.empty()) throw DomainError("covering_from_coefficients: empty coefficient list");
    if (c[0].is_zero()) throw DomainError("covering_from_coefficients: c1 must be nonzero");
    if (scale_k.sign() <= 0) throw DomainError("covering_from_coefficients: scale_k must be positive");
    return finish_covering(0, scale_k, std::move(c));
}

Rational EtaQuotientSpec::leading_q_power() const {
    Rational total(0);
    for (const auto& f : factors) total += f.scale * Rational(f.exponent);
    return total / Rational(24);
}

namespace {

RationalSeries series_pow(const RationalSeries& base, int exponent) {
    if (exponent < 0) return series_pow(series_reciprocal(base), -exponent);
    RationalSeries acc = RationalSeries::constant(Rational(1), base.order());
    for (int i = 0; i < exponent; ++i) acc = series_mul(acc, base);
    return acc;
}

} // namespace

RationalSeries eta_quotient_expansion(const EtaQuotientSpec& spec, const Rational& common_scale_k,
                                      int order) {
    if (order < 0) throw DomainError("eta_quotient_expansion: negative order");
    if (common_scale_k.sign() <= 0)
        throw DomainError("eta_quotient_expansion: scale k must be positive");

    const Rational lead = common_scale_k * spec.leading_q_power();
    if (lead.denominator() != 1 || lead.sign() < 0)
        throw DomainError("eta_quotient_expansion: leading power " + lead.str() +
                          " is not a nonnegative integer at the requested common power");
    const long low = lead.numerator().get_si();
    if (low > order) {
        // everything retained is below the first term: known-zero series
        return RationalSeries::zero(order + 1);
    }

    const int unit_order = order - static_cast<int>(low) + 1;
    RationalSeries product = RationalSeries::constant(spec.prefactor, unit_order);
    for (const auto& factor : spec.factors) {
        if (factor.scale.sign() <= 0)
            throw DomainError("eta_quotient_expansion: eta scales must be positive");
        const Rational step_r = common_scale_k * factor.scale;
        if (step_r.denominator() != 1)
            throw DomainError("eta_quotient_expansion: exponent " + step_r.str() +
                              " cannot be made integral at the requested common power");
        const long step = step_r.numerator().get_si();
        // Euler product prod_n (1 - x^{step*n}); factors with step*n beyond
        // the kept degrees cannot touch retained coefficients
        RationalSeries euler = RationalSeries::constant(Rational(1), unit_order);
        for (long n = 1; step * n < unit_order; ++n) {
            std::vector<Rational> dense(static_cast<std::size_t>(step * n) + 1, Rational(0));
            dense[0] = Rational(1);
            dense[static_cast<std::size_t>(step * n)] = Rational(-1);
            euler = series_mul(euler, RationalSeries::polynomial(std::move(dense), unit_order));
        }
        product = series_mul(product, series_pow(euler, factor.exponent));
    }

    std::vector<Rational> dense(static_cast<std::size_t>(order) + 1, Rational(0));
    for (int d = 0; d < unit_order; ++d)
        dense[static_cast<std::size_t>(d + low)] = product.coeff(d);
    return RationalSeries::polynomial(std::move(dense), order + 1);
}

EtaQuotientSpec lambda_eta_spec() {
    EtaQuotientSpec spec;
    spec.factors = {{Rational(1, 2), 8}, {Rational(2), 16}, {Rational(1), -24}};
    spec.prefactor = Rational(16);
    return spec;
}

EtaQuotientSpec gamma3_eta_spec() {
    EtaQuotientSpec spec;
    spec.factors = {{Rational(3), 3}, {Rational(1, 3), -3}};
    spec.prefactor = Rational(1);
    return spec;
}

CoveringData builtin_covering(std::string_view name, int order) {
    if (name == "lambda") return solve_covering_coefficients(2, Rational(16), Rational(-128), order);
    if (name == "gamma3") return solve_covering_coefficients(3, Rational(1), Rational(3), order);
    throw DomainError("builtin_covering: unknown dataset '" + std::string(name) +
                      "' (expected 'lambda' or 'gamma3')");
}

} // namespace puncture
