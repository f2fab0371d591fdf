#pragma once

#include <cmath>
#include <limits>

namespace symineq {

/// A nonnegative real stored on the natural-log scale. Zero is encoded as
/// log_magnitude = -infinity, which log_add/log_mul propagate correctly, so
/// sums and products of values spanning hundreds of orders of magnitude never
/// overflow.
struct LogValue {
    double log_magnitude = -std::numeric_limits<double>::infinity();

    static LogValue from_log(double l) { return LogValue{l}; }

    static LogValue from_value(double v) {
        return LogValue{v == 0.0 ? -std::numeric_limits<double>::infinity()
                                 : std::log(v)};
    }

    bool zero_flag() const { return std::isinf(log_magnitude) && log_magnitude < 0; }

    double value() const { return zero_flag() ? 0.0 : std::exp(log_magnitude); }
};

/// log(exp(a) + exp(b)) with max-shift; tolerates -inf on either side.
inline double log_add_exp(double a, double b) {
    if (std::isinf(a) && a < 0) return b;
    if (std::isinf(b) && b < 0) return a;
    const double m = a > b ? a : b;
    return m + std::log1p(std::exp(-(a > b ? a - b : b - a)));
}

inline LogValue log_add(LogValue a, LogValue b) {
    return LogValue{log_add_exp(a.log_magnitude, b.log_magnitude)};
}

inline LogValue log_mul(LogValue a, LogValue b) {
    if (a.zero_flag() || b.zero_flag()) return LogValue{};
    return LogValue{a.log_magnitude + b.log_magnitude};
}

}  // namespace symineq
