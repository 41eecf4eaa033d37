#pragma once

#include <gmpxx.h>

#include <span>
#include <vector>

#include "puncture/errors.hpp"
#include "puncture/rational.hpp"

namespace puncture {

// Index pair of the exponential Bell polynomial B_{n,k}.
struct BellIndex {
    int n = 1;
    int k = 1;
};

// Ring hook used by the generic Bell machinery: how to turn an exact big
// integer into a coefficient of type T. Rational is exact; floating
// specializations live in float_ops.hpp.
template <typename T>
struct RingTraits;

template <>
struct RingTraits<Rational> {
    static Rational from_integer(const mpz_class& z) { return Rational(z); }
};

namespace detail {

// Walks all (r_1,...,r_L), L = n-k+1, with sum r_i = k and sum i*r_i = n,
// calling visit(r) for each. Parts are chosen from the largest index down so
// dead branches prune early.
template <typename Visit>
void for_each_bell_composition(int n, int k, Visit&& visit) {
    const int L = n - k + 1;
    std::vector<int> r(static_cast<std::size_t>(L), 0);
    // recurse over part size j = L..1 with `count` parts and `weight` left
    auto rec = [&](auto&& self, int j, int count, int weight) -> void {
        if (count == 0) {
            if (weight == 0) visit(r);
            return;
        }
        if (j < 1 || weight < count || weight > count * j) return;
        const int rmax = std::min(count, weight / j);
        for (int rj = rmax; rj >= 0; --rj) {
            r[static_cast<std::size_t>(j - 1)] = rj;
            self(self, j - 1, count - rj, weight - rj * j);
        }
        r[static_cast<std::size_t>(j - 1)] = 0;
    };
    rec(rec, L, k, n);
}

// n! / (prod r_i! * prod (i!)^{r_i}) -- always an exact integer.
inline mpz_class bell_multinomial(int n, std::span<const int> r) {
    mpz_class denom = 1;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] == 0) continue;
        denom *= factorial(r[i]);
        mpz_class fp;
        mpz_pow_ui(fp.get_mpz_t(), factorial(static_cast<int>(i) + 1).get_mpz_t(),
                   static_cast<unsigned long>(r[i]));
        denom *= fp;
    }
    mpz_class out;
    mpz_divexact(out.get_mpz_t(), factorial(n).get_mpz_t(), denom.get_mpz_t());
    return out;
}

} // namespace detail

// Exponential Bell polynomial B_{n,k}(t_1,...,t_{n-k+1}).
// t[0] corresponds to t_1. Exact when T is exact.
template <typename T>
T bell_polynomial(BellIndex idx, std::span<const T> t) {
    const int n = idx.n, k = idx.k;
    if (n < 1 || k < 1 || k > n)
        throw DomainError("bell_polynomial: need 1 <= k <= n");
    const int L = n - k + 1;
    if (static_cast<int>(t.size()) < L)
        throw DomainError("bell_polynomial: argument list shorter than n-k+1");
    T sum{};
    detail::for_each_bell_composition(n, k, [&](const std::vector<int>& r) {
        T term = RingTraits<T>::from_integer(detail::bell_multinomial(n, r));
        for (int i = 0; i < L; ++i)
            for (int c = 0; c < r[static_cast<std::size_t>(i)]; ++c)
                term = term * t[static_cast<std::size_t>(i)];
        sum = sum + term;
    });
    return sum;
}

template <typename T>
T bell_polynomial(BellIndex idx, const std::vector<T>& t) {
    return bell_polynomial(idx, std::span<const T>(t));
}

// Coefficient transform of the formal logarithm: with
//   u(x) = 1 + sum_{j>=1} t_j x^j / j!,
// log u(x) = sum_{m>=1} L_m x^m / m! where
//   L_m = sum_{k=1}^{m} (-1)^{k-1} (k-1)! B_{m,k}(t_1,...,t_{m-k+1}).
// Returns [L_1,...,L_order]; requires t.size() >= order.
template <typename T>
std::vector<T> bell_log_terms(std::span<const T> t, int order) {
    if (order < 0) throw DomainError("bell_log_terms: negative order");
    if (static_cast<int>(t.size()) < order)
        throw DomainError("bell_log_terms: need at least `order` arguments");
    std::vector<T> out;
    out.reserve(static_cast<std::size_t>(order));
    for (int m = 1; m <= order; ++m) {
        T acc{};
        for (int k = 1; k <= m; ++k) {
            T b = bell_polynomial(BellIndex{m, k}, t.subspan(0, static_cast<std::size_t>(m - k + 1)));
            T scaled = RingTraits<T>::from_integer(factorial(k - 1)) * b;
            if (k % 2 == 1)
                acc = acc + scaled;
            else
                acc = acc - scaled;
        }
        out.push_back(acc);
    }
    return out;
}

// Coefficient transform of the formal reciprocal: with u as above,
// 1 / u(x) = 1 + sum_{m>=1} R_m x^m / m! where
//   R_m = sum_{k=1}^{m} (-1)^k k! B_{m,k}(t_1,...,t_{m-k+1}).
// Returns [R_1,...,R_order]; requires t.size() >= order.
template <typename T>
std::vector<T> bell_reciprocal_terms(std::span<const T> t, int order) {
    if (order < 0) throw DomainError("bell_reciprocal_terms: negative order");
    if (static_cast<int>(t.size()) < order)
        throw DomainError("bell_reciprocal_terms: need at least `order` arguments");
    std::vector<T> out;
    out.reserve(static_cast<std::size_t>(order));
    for (int m = 1; m <= order; ++m) {
        T acc{};
        for (int k = 1; k <= m; ++k) {
            T b = bell_polynomial(BellIndex{m, k}, t.subspan(0, static_cast<std::size_t>(m - k + 1)));
            T scaled = RingTraits<T>::from_integer(factorial(k)) * b;
            if (k % 2 == 0)
                acc = acc + scaled;
            else
                acc = acc - scaled;
        }
        out.push_back(acc);
    }
    return out;
}

} // namespace puncture
