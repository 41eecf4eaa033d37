#pragma once

#include <algorithm>
#include <span>
#include <utility>
#include <vector>

#include "puncture/bell.hpp"
#include "puncture/errors.hpp"
#include "puncture/rational.hpp"

namespace puncture {

// Formal power series truncated at an exclusive order: coefficients of
// degrees [low_degree, order) are known, everything at `order` and beyond is
// unknown (not zero). Operations never fabricate unknown coefficients; a
// result's order is the largest bound the operands justify.
template <typename T>
class TruncatedSeries {
public:
    TruncatedSeries() = default;

    TruncatedSeries(int low_degree, int order, std::vector<T> coeffs)
        : low_(low_degree), order_(order), coeffs_(std::move(coeffs)) {
        if (low_ < 0) throw DomainError("TruncatedSeries: negative low degree");
        if (order_ < low_) throw DomainError("TruncatedSeries: order below low degree");
        if (static_cast<int>(coeffs_.size()) != order_ - low_)
            throw DomainError("TruncatedSeries: coefficient count must equal order - low_degree");
    }

    // All-unknown-beyond-`order` zero series.
    static TruncatedSeries zero(int order) {
        return TruncatedSeries(0, order, std::vector<T>(static_cast<std::size_t>(order), T{}));
    }

    static TruncatedSeries constant(T value, int order) {
        auto s = zero(order);
        if (order > 0) s.coeffs_[0] = std::move(value);
        return s;
    }

    static TruncatedSeries monomial(T value, int degree, int order) {
        if (degree < 0) throw DomainError("TruncatedSeries: negative degree");
        if (degree >= order) throw DomainError("TruncatedSeries: monomial degree beyond order");
        auto s = zero(order);
        s.coeffs_[static_cast<std::size_t>(degree)] = std::move(value);
        return s.trimmed();
    }

    static TruncatedSeries identity(int order) {
        return monomial(RingTraits<T>::from_integer(1), 1, order);
    }

    // Exact polynomial a_0 + a_1 x + ... promoted to a series known to `order`
    // (coefficients beyond the polynomial degree are known zeros).
    static TruncatedSeries polynomial(std::vector<T> dense, int order) {
        if (static_cast<int>(dense.size()) > order)
            throw DomainError("TruncatedSeries: polynomial longer than order");
        dense.resize(static_cast<std::size_t>(order), T{});
        return TruncatedSeries(0, order, std::move(dense));
    }

    // Coefficients given as c_1..c_M (one-based, no constant term), known
    // through degree M, i.e. order M+1.
    static TruncatedSeries from_one_based(const std::vector<T>& c) {
        std::vector<T> dense;
        dense.reserve(c.size() + 1);
        dense.push_back(T{});
        dense.insert(dense.end(), c.begin(), c.end());
        return polynomial(std::move(dense), static_cast<int>(c.size()) + 1);
    }

    int low_degree() const { return low_; }
    int order() const { return order_; }

    // Coefficient of x^d; zero below low_degree, error at or beyond `order`.
    const T& coeff(int d) const {
        if (d >= order_)
            throw TruncationError("TruncatedSeries: coefficient beyond truncation order");
        if (d < low_) return zero_value();
        return coeffs_[static_cast<std::size_t>(d - low_)];
    }

    // Degree-indexed coefficients [0, order).
    std::vector<T> dense() const {
        std::vector<T> out(static_cast<std::size_t>(order_), T{});
        for (int d = low_; d < order_; ++d)
            out[static_cast<std::size_t>(d)] = coeffs_[static_cast<std::size_t>(d - low_)];
        return out;
    }

    // First degree with a nonzero known coefficient, or `order` if none.
    int first_nonzero() const {
        for (int d = low_; d < order_; ++d)
            if (!(coeff(d) == T{})) return d;
        return order_;
    }

    bool is_known_zero() const { return first_nonzero() == order_; }

    // Same series with stored leading zeros dropped from the representation.
    TruncatedSeries trimmed() const {
        int fn = first_nonzero();
        if (fn == low_) return *this;
        std::vector<T> c(coeffs_.begin() + (fn - low_), coeffs_.end());
        return TruncatedSeries(fn, order_, std::move(c));
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        if (a.order_ != b.order_) return false;
        for (int d = 0; d < a.order_; ++d)
            if (!(a.coeff(d) == b.coeff(d))) return false;
        return true;
    }

private:
    static const T& zero_value() {
        static const T z{};
        return z;
    }

    int low_ = 0;
    int order_ = 0;
    std::vector<T> coeffs_;
};

namespace detail {

// Dense (degree-indexed) convolution truncated below `cap`.
template <typename T>
std::vector<T> mul_dense(const std::vector<T>& a, const std::vector<T>& b, int cap) {
    std::vector<T> out(static_cast<std::size_t>(std::max(cap, 0)), T{});
    for (std::size_t i = 0; i < a.size() && static_cast<int>(i) < cap; ++i) {
        if (a[i] == T{}) continue;
        for (std::size_t j = 0; j < b.size() && static_cast<int>(i + j) < cap; ++j) {
            if (b[j] == T{}) continue;
            out[i + j] = out[i + j] + a[i] * b[j];
        }
    }
    return out;
}

template <typename T>
TruncatedSeries<T> from_dense(std::vector<T> dense, int order) {
    dense.resize(static_cast<std::size_t>(order), T{});
    return TruncatedSeries<T>(0, order, std::move(dense)).trimmed();
}

} // namespace detail

template <typename T>
TruncatedSeries<T> series_add(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
    int order = std::min(a.order(), b.order());
    std::vector<T> out(static_cast<std::size_t>(order), T{});
    for (int d = 0; d < order; ++d) out[static_cast<std::size_t>(d)] = a.coeff(d) + b.coeff(d);
    return detail::from_dense(std::move(out), order);
}

template <typename T>
TruncatedSeries<T> series_sub(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
    int order = std::min(a.order(), b.order());
    std::vector<T> out(static_cast<std::size_t>(order), T{});
    for (int d = 0; d < order; ++d) out[static_cast<std::size_t>(d)] = a.coeff(d) - b.coeff(d);
    return detail::from_dense(std::move(out), order);
}

template <typename T>
TruncatedSeries<T> series_scale(const TruncatedSeries<T>& a, const T& s) {
    std::vector<T> out(static_cast<std::size_t>(a.order()), T{});
    for (int d = a.low_degree(); d < a.order(); ++d)
        out[static_cast<std::size_t>(d)] = a.coeff(d) * s;
    return detail::from_dense(std::move(out), a.order());
}

// Cauchy product. The result order is the best bound the operands justify:
// unknown tails of one factor first reach degree order_a + low_b (and
// symmetrically), where low uses the first actually-nonzero coefficient.
template <typename T>
TruncatedSeries<T> series_mul(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
    const int la = a.first_nonzero();
    const int lb = b.first_nonzero();
    const int order = std::min(a.order() + lb, b.order() + la);
    return detail::from_dense(detail::mul_dense(a.dense(), b.dense(), order), order);
}

template <typename T>
TruncatedSeries<T> operator+(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
    return series_add(a, b);
}
template <typename T>
TruncatedSeries<T> operator-(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
    return series_sub(a, b);
}
template <typename T>
TruncatedSeries<T> operator*(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
    return series_mul(a, b);
}

// outer(inner) for inner with zero constant term.
template <typename T>
TruncatedSeries<T> series_compose(const TruncatedSeries<T>& outer, const TruncatedSeries<T>& inner) {
    if (inner.order() < 1 || !(inner.coeff(0) == T{}))
        throw DomainError("series_compose: inner series must have zero constant term");
    int li = inner.first_nonzero();
    if (li == 0) li = 1; // stored-but-zero constant slot
    // first index >= 1 whose outer coefficient is nonzero: only those terms
    // propagate inner's unknown tail
    int m1 = outer.order();
    for (int m = std::max(outer.low_degree(), 1); m < outer.order(); ++m)
        if (!(outer.coeff(m) == T{})) { m1 = m; break; }
    const int target =
        std::min(outer.order() * li, (std::max(m1, 1) - 1) * li + inner.order());

    std::vector<T> acc(static_cast<std::size_t>(std::max(target, 0)), T{});
    if (target > 0 && outer.low_degree() == 0 && outer.order() > 0) acc[0] = outer.coeff(0);
    const std::vector<T> inner_dense = inner.dense();
    std::vector<T> power(1, RingTraits<T>::from_integer(1)); // inner^0
    for (int m = 1; m < outer.order(); ++m) {
        power = detail::mul_dense(power, inner_dense, target);
        bool all_zero = true;
        for (const T& c : power)
            if (!(c == T{})) { all_zero = false; break; }
        if (all_zero) break;
        if (m < std::max(outer.low_degree(), 1)) continue;
        const T& om = outer.coeff(m);
        if (om == T{}) continue;
        for (std::size_t d = 0; d < power.size(); ++d)
            if (!(power[d] == T{})) acc[d] = acc[d] + om * power[d];
    }
    return detail::from_dense(std::move(acc), target);
}

// Term-wise derivative; the truncation order drops by one.
template <typename T>
TruncatedSeries<T> series_derivative(const TruncatedSeries<T>& a) {
    const int order = std::max(a.order() - 1, 0);
    std::vector<T> out(static_cast<std::size_t>(order), T{});
    for (int d = std::max(a.low_degree(), 1); d < a.order(); ++d)
        out[static_cast<std::size_t>(d - 1)] = a.coeff(d) * RingTraits<T>::from_integer(d);
    return detail::from_dense(std::move(out), order);
}

// 1 / a for a with nonzero constant term.
template <typename T>
TruncatedSeries<T> series_reciprocal(const TruncatedSeries<T>& a) {
    if (a.order() < 1 || a.coeff(0) == T{})
        throw DomainError("series_reciprocal: constant term must be nonzero");
    const int order = a.order();
    const std::vector<T> ad = a.dense();
    std::vector<T> r(static_cast<std::size_t>(order), T{});
    r[0] = RingTraits<T>::from_integer(1) / ad[0];
    for (int d = 1; d < order; ++d) {
        T s{};
        for (int j = 1; j <= d; ++j) s = s + ad[static_cast<std::size_t>(j)] * r[static_cast<std::size_t>(d - j)];
        r[static_cast<std::size_t>(d)] = (T{} - s) / ad[0];
    }
    return detail::from_dense(std::move(r), order);
}

template <typename T>
TruncatedSeries<T> series_div(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
    return series_mul(a, series_reciprocal(b));
}

// log a for a with constant term exactly 1, via the Mercator series in a - 1.
template <typename T>
TruncatedSeries<T> series_log_unit(const TruncatedSeries<T>& a) {
    if (a.order() < 1 || !(a.coeff(0) == RingTraits<T>::from_integer(1)))
        throw DomainError("series_log_unit: constant term must be 1");
    const int order = a.order();
    std::vector<T> z = a.dense();
    z[0] = T{};
    std::vector<T> acc(static_cast<std::size_t>(order), T{});
    std::vector<T> power(1, RingTraits<T>::from_integer(1));
    for (int m = 1; m < order; ++m) {
        power = detail::mul_dense(power, z, order);
        bool all_zero = true;
        for (const T& c : power)
            if (!(c == T{})) { all_zero = false; break; }
        if (all_zero) break;
        const T inv_m = RingTraits<T>::from_integer(1) / RingTraits<T>::from_integer(m);
        for (std::size_t d = 0; d < power.size(); ++d) {
            if (power[d] == T{}) continue;
            if (m % 2 == 1)
                acc[d] = acc[d] + power[d] * inv_m;
            else
                acc[d] = acc[d] - power[d] * inv_m;
        }
    }
    return detail::from_dense(std::move(acc), order);
}

// exp a for a with zero constant term.
template <typename T>
TruncatedSeries<T> series_exp_zero(const TruncatedSeries<T>& a) {
    if (a.order() < 1 || !(a.coeff(0) == T{}))
        throw DomainError("series_exp_zero: constant term must be 0");
    const int order = a.order();
    const std::vector<T> z = a.dense();
    std::vector<T> acc(static_cast<std::size_t>(order), T{});
    acc[0] = RingTraits<T>::from_integer(1);
    std::vector<T> power(1, RingTraits<T>::from_integer(1));
    for (int m = 1; m < order; ++m) {
        power = detail::mul_dense(power, z, order);
        bool all_zero = true;
        for (const T& c : power)
            if (!(c == T{})) { all_zero = false; break; }
        if (all_zero) break;
        const T inv = RingTraits<T>::from_integer(1) / RingTraits<T>::from_integer(factorial(m));
        for (std::size_t d = 0; d < power.size(); ++d)
            if (!(power[d] == T{})) acc[d] = acc[d] + power[d] * inv;
    }
    return detail::from_dense(std::move(acc), order);
}

// Compositional inverse by degree-by-degree coefficient matching: returns b
// with c(b(x)) = x up to the truncation order. Deliberately shares no code
// with the Bell-polynomial reversion formula it serves as an oracle for.
template <typename T>
TruncatedSeries<T> invert_series_newton(const TruncatedSeries<T>& c) {
    if (c.order() < 1 || !(c.coeff(0) == T{}))
        throw DomainError("invert_series_newton: series must have zero constant term");
    if (c.order() < 2)
        throw TruncationError("invert_series_newton: linear coefficient unknown");
    const T c1 = c.coeff(1);
    if (c1 == T{}) throw DomainError("invert_series_newton: c1 must be nonzero");
    const int order = c.order();
    const std::vector<T> cd = c.dense();
    const T one = RingTraits<T>::from_integer(1);
    std::vector<T> b(static_cast<std::size_t>(order), T{});
    b[1] = one / c1;
    for (int m = 2; m < order; ++m) {
        // [x^m] of sum_{k>=2} c_k * (b_<m)(x)^k; the k=1 part is c1*b_m
        const int cap = m + 1;
        std::vector<T> partial(b.begin(), b.begin() + m);
        std::vector<T> power = partial; // partial^1
        T residue{};
        for (int k = 2; k < order && k <= m; ++k) {
            power = detail::mul_dense(power, partial, cap);
            if (static_cast<int>(power.size()) > m && !(cd[static_cast<std::size_t>(k)] == T{}))
                residue = residue + cd[static_cast<std::size_t>(k)] * power[static_cast<std::size_t>(m)];
        }
        b[static_cast<std::size_t>(m)] = (T{} - residue) / c1;
    }
    return detail::from_dense(std::move(b), order);
}

// Schwarzian derivative {f,q} = 2 (f''/f')' - (f''/f')^2, computed directly
// from derivatives and a series division.
template <typename T>
TruncatedSeries<T> schwarzian(const TruncatedSeries<T>& f) {
    if (f.order() < 1 || !(f.coeff(0) == T{}))
        throw DomainError("schwarzian: series must have zero constant term");
    if (f.order() < 2) throw TruncationError("schwarzian: linear coefficient unknown");
    if (f.coeff(1) == T{}) throw DomainError("schwarzian: f1 must be nonzero");
    auto fp = series_derivative(f);
    auto fpp = series_derivative(fp);
    auto h = series_div(fpp, fp);
    auto two = RingTraits<T>::from_integer(2);
    return series_sub(series_scale(series_derivative(h), two), series_mul(h, h));
}

// Same Schwarzian through the logarithmic-derivative route: expand
// (log f')' = lt_1 + sum lt_{m+1} q^m/m! with lt_m given by the Bell-log
// transform of the scaled coefficients (j+1)! c_{j+1} / c_1, then
// {f,q}_m = 2 lt_{m+2}/m! - sum_{k=0}^m lt_{k+1} lt_{m-k+1} / (k!(m-k)!).
template <typename T>
TruncatedSeries<T> schwarzian_via_log_terms(const TruncatedSeries<T>& f) {
    if (f.order() < 1 || !(f.coeff(0) == T{}))
        throw DomainError("schwarzian: series must have zero constant term");
    if (f.order() < 2) throw TruncationError("schwarzian: linear coefficient unknown");
    const T c1 = f.coeff(1);
    if (c1 == T{}) throw DomainError("schwarzian: f1 must be nonzero");
    const int lt_count = std::max(f.order() - 2, 0); // lt_m needs c_{m+1}
    std::vector<T> t;
    t.reserve(static_cast<std::size_t>(lt_count));
    for (int j = 1; j <= lt_count; ++j)
        t.push_back(RingTraits<T>::from_integer(factorial(j + 1)) * f.coeff(j + 1) / c1);
    const std::vector<T> lt = bell_log_terms(std::span<const T>(t), lt_count);
    const int order = std::max(f.order() - 3, 0);
    std::vector<T> out(static_cast<std::size_t>(order), T{});
    for (int m = 0; m + 2 <= lt_count && m < order; ++m) {
        T s = RingTraits<T>::from_integer(2) * lt[static_cast<std::size_t>(m + 1)] /
              RingTraits<T>::from_integer(factorial(m));
        for (int k = 0; k <= m; ++k) {
            T denom = RingTraits<T>::from_integer(mpz_class(factorial(k) * factorial(m - k)));
            s = s - lt[static_cast<std::size_t>(k)] * lt[static_cast<std::size_t>(m - k)] / denom;
        }
        out[static_cast<std::size_t>(m)] = s;
    }
    return detail::from_dense(std::move(out), order);
}

// True when the known coefficients of a and b agree on degrees [0, upto).
template <typename T>
bool series_agree_through(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b, int upto) {
    if (a.order() < upto || b.order() < upto) return false;
    for (int d = 0; d < upto; ++d)
        if (!(a.coeff(d) == b.coeff(d))) return false;
    return true;
}

using RationalSeries = TruncatedSeries<Rational>;

} // namespace puncture
