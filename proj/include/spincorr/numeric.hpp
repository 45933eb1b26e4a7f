// Small numeric helpers shared across the library: exact binomial
// coefficients, integer powers, compensated summation.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>

namespace spincorr {

// Binomial coefficient as a double. Exact integer arithmetic up to n = 60
// (fits in uint64_t), log-gamma beyond that.
inline double binomial_coefficient(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0.0;
    if (k > n - k) k = n - k;
    if (n <= 60) {
        std::uint64_t acc = 1;
        for (int i = 1; i <= k; ++i) {
            acc = acc * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
        }
        return static_cast<double>(acc);
    }
    return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

// x^n for non-negative integer n by binary exponentiation; defines 0^0 = 1.
template <typename T>
T integer_power(T x, int n) {
    if (n < 0) throw std::invalid_argument("integer_power: negative exponent");
    T result{1};
    while (n > 0) {
        if (n & 1) result *= x;
        x *= x;
        n >>= 1;
    }
    return result;
}

// Kahan compensated accumulator.
class KahanSum {
  public:
    void add(double x) {
        const double y = x - comp_;
        const double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline double relative_deviation(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale > 0.0 ? std::abs(a - b) / scale : 0.0;
}

// Symmetric relative difference |a-b| / (|a|+|b|); 0 when both vanish.
inline double symmetric_relative_difference(double a, double b) {
    const double denom = std::abs(a) + std::abs(b);
    return denom > 0.0 ? std::abs(a - b) / denom : 0.0;
}

}  // namespace spincorr
