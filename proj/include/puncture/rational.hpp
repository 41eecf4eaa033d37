#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

#include "puncture/errors.hpp"

namespace puncture {

// Arbitrary-precision exact rational. Always stored in lowest terms with a
// positive denominator; every operation is exact. Backed by GMP.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long num) : v_(num) {}
    Rational(long num, long den) {
        if (den == 0) throw DomainError("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& num) : v_(num) {}
    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw DomainError("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Parses "num/den" or "num" (optionally signed). Exact; rejects malformed
    // input and zero denominators.
    static Rational from_string(std::string_view s);

    // Exact dyadic rational from a finite double (used by guards/tests).
    static Rational from_double(double x);

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    // Canonical form: "num" when the denominator is 1, else "num/den".
    std::string str() const;

    double to_double() const { return v_.get_d(); }

    Rational operator-() const { return Rational(mpq_class(-v_), already_canonical{}); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DomainError("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return sign() < 0 ? -*this : *this; }
    Rational inverse() const {
        if (is_zero()) throw DomainError("Rational: inverse of zero");
        return Rational(mpq_class(1) / v_, already_canonical{});
    }

private:
    struct already_canonical {};
    Rational(mpq_class q, already_canonical) : v_(std::move(q)) {}
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Exact n! as a big integer, memoized.
const mpz_class& factorial(int n);

} // namespace puncture
