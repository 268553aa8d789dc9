#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <string>

namespace discgrowth {

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double two_pi = 2.0 * pi;

// Neumaier-compensated accumulator.  Summation order is fixed by the caller,
// so results are reproducible for a given input ordering.
struct CompensatedSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            carry += (sum - t) + x;
        else
            carry += (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + carry; }
};

// Shortest text that round-trips the double (used for all CSV/stdout values).
inline std::string format_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

// Reduce an angle to the principal interval (-pi, pi].
inline double wrap_angle(double a) {
    double w = std::remainder(a, two_pi);
    if (w <= -pi) w += two_pi;
    return w;
}

}  // namespace discgrowth
