#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "puncture/rational.hpp"
#include "puncture/series.hpp"

namespace puncture {

// Exact coefficient data of one covering map f(q_k) = sum c_m q_k^m and its
// inverse q_k(f) = sum b_m f^m, together with the log-expansion coefficients
// l_m of log q_k = log(b_1 f) + sum l_m f^m / m!.
//
// `order` is the highest retained degree: c and b hold degrees 1..order,
// l holds l_1..l_{order-1} (l_m consumes b_{m+1}).
struct CoveringData {
    int level_N = 0; // 2..5 when produced by the level recursion, 0 = user-supplied
    Rational scale_k{1};
    std::vector<Rational> c;
    std::vector<Rational> b;
    std::vector<Rational> l;
    int order = 0;

    const Rational& c_at(int m) const;
    const Rational& b_at(int m) const;
    const Rational& l_at(int m) const;

    RationalSeries c_series() const { return RationalSeries::from_one_based(c); }
    RationalSeries b_series() const { return RationalSeries::from_one_based(b); }

    // Checks b1 = 1/c1, length consistency and the composition identity
    // c(b(x)) = x through the retained order. Throws on violation.
    void validate() const;
};

// Sum of cubed divisors of m.
std::int64_t sigma3(std::int64_t m);

// Inverse-series coefficients b_1..b_order from c_1..c_order by the
// Bell-polynomial reversion formula
//   b_m = (1/m!) sum_{k=1}^{m-1} (-1)^k / c_1^{m+k} *
//         B_{m+k-1,k}(0, 2! c_2, ..., m! c_m),  b_1 = 1/c_1.
std::vector<Rational> invert_covering_series(const std::vector<Rational>& c, int order);

// Log-expansion coefficients l_1..l_order from b_1..b_{order+1}:
//   l_m = sum_{k=1}^{m} (-1)^{k-1} (k-1)! / b_1^k *
//         B_{m,k}(1! b_2, 2! b_3, ..., (m-k+1)! b_{m-k+2}).
std::vector<Rational> log_series_coefficients(const std::vector<Rational>& b, int order);

// Solves c_3..c_order for the special levels N = 2,3,4,5 from the
// Eisenstein/Schwarzian relation: writing (log f')' = sum lt_{m+1} q^m / m!,
// each step m >= 0 fixes lt_{m+2} from
//   2 lt_{m+2}/m! - sum_{k=0}^{m} lt_{k+1} lt_{m-k+1} / (k!(m-k)!)
//     = -240 sigma3((m+2)/N) when N | m+2, else 0,
// and lt_{m+2} is linear in the next unknown c coefficient. Every output is
// an exact rational in c1, c2. Returns the full CoveringData bundle.
CoveringData solve_covering_coefficients(int N, const Rational& c1, const Rational& c2, int order);

// Builds the bundle from user-supplied c_1..c_M (level recursion not used).
CoveringData covering_from_coefficients(std::vector<Rational> c, const Rational& scale_k);

// Product of Dedekind-eta factors eta(scale * tau)^exponent times a rational
// prefactor. leading_q_power is the net power of q = exp(2 pi i tau)
// contributed by the eta prefactors q^{1/24}.
struct EtaQuotientSpec {
    struct Factor {
        Rational scale;
        int exponent = 1;
    };
    std::vector<Factor> factors;
    Rational prefactor{1};

    Rational leading_q_power() const;
};

// Expands the quotient in the variable x = q_k = exp(2 pi i tau / k):
// eta(s tau) = x^{k s/24} prod_n (1 - x^{k s n}). Every exponent k*s and the
// net leading power must come out as integers at the requested k, otherwise
// the spec is rejected. Returns an exact series with terms through degree
// `order` (exclusive truncation order order+1).
RationalSeries eta_quotient_expansion(const EtaQuotientSpec& spec, const Rational& common_scale_k,
                                      int order);

// The two datasets used throughout: the level-2 hauptmodul (16 * eta
// quotient, punctures {0,1,inf}) and the level-3 covering
// (eta(3 tau)/eta(tau/3))^3.
EtaQuotientSpec lambda_eta_spec();
EtaQuotientSpec gamma3_eta_spec();

// "lambda" -> solve(N=2, 16, -128, order); "gamma3" -> solve(N=3, 1, 3, order).
CoveringData builtin_covering(std::string_view name, int order);

} // namespace puncture
