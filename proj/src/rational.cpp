#include "puncture/rational.hpp"

#include <cctype>
#include <cmath>
#include <mutex>
#include <ostream>
#include <vector>

namespace puncture {

namespace {

bool valid_integer_token(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational Rational::from_string(std::string_view s) {
    std::string_view num = s, den = "1";
    if (auto pos = s.find('/'); pos != std::string_view::npos) {
        num = s.substr(0, pos);
        den = s.substr(pos + 1);
    }
    if (!valid_integer_token(num) || !valid_integer_token(den))
        throw ParseError("Rational: malformed value '" + std::string(s) + "'");
    mpz_class n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0) throw ParseError("Rational: zero denominator in '" + std::string(s) + "'");
    return Rational(n, d);
}

Rational Rational::from_double(double x) {
    if (!std::isfinite(x)) throw DomainError("Rational: non-finite double");
    mpq_class q;
    mpq_set_d(q.get_mpq_t(), x);
    return Rational(q);
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

const mpz_class& factorial(int n) {
    if (n < 0) throw DomainError("factorial: negative argument");
    static std::vector<mpz_class> cache{1, 1};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(cache.size()) <= n)
        cache.push_back(cache.back() * static_cast<unsigned long>(cache.size()));
    return cache[static_cast<std::size_t>(n)];
}

} // namespace puncture
