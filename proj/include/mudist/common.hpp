#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace mudist {

using Vector = std::vector<double>;
using VectorSet = std::vector<Vector>;

// Raised when user-supplied data (sets, files, argument values) is malformed.
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised when a configuration is incomplete or inconsistent.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Sentinel used instead of IEEE infinity so that optimizer comparisons stay
// total-ordered even when penalties and degenerate values mix.
inline constexpr double kInfValue = std::numeric_limits<double>::max();

// Minimization convention throughout: a weakly dominates b iff a <= b in
// every objective.
inline bool weakly_dominates(const Vector& a, const Vector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline bool dominates(const Vector& a, const Vector& b) {
    bool strict = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
        if (a[i] < b[i]) strict = true;
    }
    return strict;
}

inline double sq_euclid(const Vector& a, const Vector& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

inline double euclid(const Vector& a, const Vector& b) {
    return std::sqrt(sq_euclid(a, b));
}

inline void require_uniform_dimension(const VectorSet& s, const char* what) {
    if (s.empty()) throw InvalidInput(std::string(what) + ": empty set");
    const std::size_t m = s.front().size();
    for (const auto& v : s)
        if (v.size() != m)
            throw InvalidInput(std::string(what) + ": inconsistent dimensions");
}

}  // namespace mudist
