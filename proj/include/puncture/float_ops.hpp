#pragma once

#include <cmath>
#include <complex>

#if defined(__SIZEOF_FLOAT128__) && !defined(_MSC_VER) && !defined(PUNCTURE_NO_FLOAT128)
#define PUNCTURE_HAVE_FLOAT128 1
#include <quadmath.h>
#endif

#include "puncture/bell.hpp"
#include "puncture/rational.hpp"

namespace puncture {

// Elementary real operations per floating type.
template <typename F>
struct FloatOps {
    static F log(F x) { return std::log(x); }
    static F abs(F x) { return std::fabs(x); }
    static F hypot(F x, F y) { return std::hypot(x, y); }
};

#ifdef PUNCTURE_HAVE_FLOAT128
template <>
struct FloatOps<__float128> {
    static __float128 log(__float128 x) { return logq(x); }
    static __float128 abs(__float128 x) { return fabsq(x); }
    static __float128 hypot(__float128 x, __float128 y) { return hypotq(x, y); }
};
#endif

// Rational -> F by peeling double-sized chunks; three chunks carry ~159 bits
// of mantissa, enough for binary128. Each chunk subtraction is exact.
template <typename F>
F rational_to(const Rational& r) {
    F acc = 0;
    Rational rem = r;
    for (int i = 0; i < 3; ++i) {
        const double chunk = rem.to_double();
        acc += static_cast<F>(chunk);
        if (chunk == 0.0) break;
        rem -= Rational::from_double(chunk);
    }
    return acc;
}

template <typename F>
F integer_to(const mpz_class& z) {
    return rational_to<F>(Rational(z));
}

template <>
inline double rational_to<double>(const Rational& r) {
    return r.to_double();
}

template <typename F>
struct RingTraits {
    static F from_integer(const mpz_class& z) { return integer_to<F>(z); }
};

// Minimal complex value over any of the supported floating types
// (std::complex is only specified for the three standard ones).
template <typename F>
struct Cx {
    F re{0};
    F im{0};

    friend Cx operator+(Cx a, Cx b) { return {a.re + b.re, a.im + b.im}; }
    friend Cx operator-(Cx a, Cx b) { return {a.re - b.re, a.im - b.im}; }
    friend Cx operator*(Cx a, Cx b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Cx operator*(F s, Cx a) { return {s * a.re, s * a.im}; }
    friend Cx operator*(Cx a, F s) { return {a.re * s, a.im * s}; }
    friend Cx operator/(Cx a, F s) { return {a.re / s, a.im / s}; }

    F abs() const { return FloatOps<F>::hypot(re, im); }
    Cx conj() const { return {re, -im}; }
};

template <typename F>
std::complex<double> to_std_complex(const Cx<F>& z) {
    return {static_cast<double>(z.re), static_cast<double>(z.im)};
}

} // namespace puncture
