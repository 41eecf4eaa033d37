#pragma once

#include <stdexcept>
#include <string>

namespace puncture {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid argument: zero denominator, k > n, c1 = 0, unsupported level, ...
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Requested data beyond the truncation order actually available.
struct TruncationError : Error {
    explicit TruncationError(const std::string& msg) : Error(msg) {}
};

// log|b1 p| vanishes (|b1 p| = 1) or |q(p)| = 1: the metric formulas degenerate.
struct SingularLogError : Error {
    explicit SingularLogError(const std::string& msg) : Error(msg) {}
};

// Heuristic series-divergence guard tripped: the evaluation point is outside
// the region where the truncated inversion series is trustworthy.
struct DivergenceGuardError : Error {
    explicit DivergenceGuardError(const std::string& msg) : Error(msg) {}
};

// Malformed serialized data (JSON covering files, rational strings).
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

} // namespace puncture
