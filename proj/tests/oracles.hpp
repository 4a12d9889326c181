#pragma once

// Reference computations used only by the tests. None of these call into the
// library's evaluation paths.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>

namespace oracle {

/// F_lambda(x, y) by its closed form in long double: (y^a - x^a)/a, ln(y/x) at a = 0.
inline long double closed_form_F(long double lambda, long double x, long double y) {
    const long double a = 1.0L - lambda;
    if (a == 0.0L) return std::log(y / x);
    return (std::pow(y, a) - std::pow(x, a)) / a;
}

/// F_lambda(x, y) = integral from x to y of t^-lambda dt, substituted t = e^s and
/// integrated with 5-point Gauss-Legendre on 1024 panels.
inline long double quadrature_F(long double lambda, long double x, long double y) {
    static constexpr long double nodes[5] = {0.0L, -0.5384693101056830910363144L, 0.5384693101056830910363144L,
                                             -0.9061798459386639927976269L, 0.9061798459386639927976269L};
    static constexpr long double weights[5] = {0.5688888888888888888888889L, 0.4786286704993664680412915L,
                                               0.4786286704993664680412915L, 0.2369268850561890875142640L,
                                               0.2369268850561890875142640L};
    const long double a = 1.0L - lambda;
    const long double lo = std::log(x);
    const long double hi = std::log(y);
    constexpr int panels = 1024;
    const long double width = (hi - lo) / panels;
    long double sum = 0.0L;
    for (int i = 0; i < panels; ++i) {
        const long double mid = lo + (i + 0.5L) * width;
        for (int j = 0; j < 5; ++j) sum += weights[j] * std::exp(a * (mid + 0.5L * width * nodes[j]));
    }
    return sum * 0.5L * width;
}

/// Root of a continuous fn on [lo, hi] with a sign change, by plain bisection.
inline double bisect(const std::function<double(double)>& fn, double lo, double hi, int iterations = 200) {
    double flo = fn(lo);
    for (int i = 0; i < iterations; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        const double fm = fn(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// k-th central difference of fn at t with step h, divided by h^k.
inline long double central_difference(const std::function<long double(long double)>& fn, long double t,
                                       long double h, int k) {
    long double sum = 0.0L;
    long double binom = 1.0L;
    for (int i = 0; i <= k; ++i) {
        sum += ((i % 2 == 0) ? 1.0L : -1.0L) * binom * fn(t + (0.5L * k - i) * h);
        binom = binom * (k - i) / (i + 1);
    }
    return sum / std::pow(h, static_cast<long double>(k));
}

/// Richardson-extrapolated k-th derivative: removes the h^2 error term.
inline long double derivative(const std::function<long double(long double)>& fn, long double t, long double h,
                              int k) {
    const long double coarse = central_difference(fn, t, h, k);
    const long double fine = central_difference(fn, t, 0.5L * h, k);
    return (4.0L * fine - coarse) / 3.0L;
}

inline double relative_error(double actual, double expected) {
    if (actual == expected) return 0.0;
    return std::abs(actual - expected) / std::max(std::abs(actual), std::abs(expected));
}

/// Deterministic sampler for hand-rolled property tests.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(engine_() >> 11) * 0x1.0p-53);
    }
    double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }

private:
    std::mt19937_64 engine_;
};

}  // namespace oracle
