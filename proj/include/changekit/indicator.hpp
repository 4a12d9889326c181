#pragma once

// Indicators of change between a past value x and a present value y.
//
//   abs(x, y)   = y - x
//   rel(x, y)   = (y - x) / x
//   r(x, y)     = ln(y / x)
//   f_l(x, y)   = (y - x) / x^l                       interpolates abs (l=0) and rel (l=1)
//   F_l(x, y)   = (y^(1-l) - x^(1-l)) / (1 - l)       antisymmetric, additive; ln(y/x) at l=1
//
// f_l carries the unit u^(1-l) when x and y are measured in unit u. Units are
// not tracked; only quotients of f_l values are unit-free.

#include <string>

#include "changekit/error.hpp"

namespace changekit {

/// Interpolation parameter. Any finite real; [0, 1] interpolates between
/// absolute and relative change.
class Lambda {
public:
    explicit Lambda(double value);

    [[nodiscard]] double value() const noexcept { return value_; }

    friend bool operator==(Lambda, Lambda) = default;

private:
    double value_;
};

/// Past and present value of one observation, both strictly positive.
class PositivePair {
public:
    PositivePair(double past, double present);

    [[nodiscard]] double x() const noexcept { return x_; }
    [[nodiscard]] double y() const noexcept { return y_; }

    friend bool operator==(const PositivePair&, const PositivePair&) = default;

private:
    double x_;
    double y_;
};

struct LabeledObservation {
    std::string label;
    PositivePair pair;
};

/// base^exponent for base > 0. Exponents 0 and 1 are exact; otherwise
/// evaluated as exp(exponent * ln base).
[[nodiscard]] double positive_power(double base, double exponent);

[[nodiscard]] double abs_change(const PositivePair& p) noexcept;
[[nodiscard]] double rel_change(const PositivePair& p) noexcept;

/// ln(y / x). Uses log1p of the relative change when y/x lies in [1/2, 2]
/// (where y - x is exact) and ln y - ln x otherwise, so the result never
/// overflows and its sign always matches y - x.
[[nodiscard]] double log_ratio(const PositivePair& p) noexcept;

/// (y - x) / x^lambda. Bitwise equal to abs_change at lambda = 0 and to
/// rel_change at lambda = 1.
[[nodiscard]] double eval_f(Lambda lambda, const PositivePair& p);

/// (y^(1-lambda) - x^(1-lambda)) / (1 - lambda), and ln(y/x) at lambda = 1.
///
/// Evaluated as x^(1-lambda) * expm1((1-lambda) * r) / (1-lambda) with
/// r = log_ratio(p). The expm1 form has no cancellation as lambda -> 1, so
/// the family is continuous across lambda = 1 without a switching threshold.
/// lambda = 0 returns abs_change and lambda = 1 returns log_ratio bitwise.
[[nodiscard]] double eval_F(Lambda lambda, const PositivePair& p);

/// rel^lambda * abs^(1-lambda), the Cobb-Douglas reading of f_lambda.
/// Only defined for growth (y > x); throws DomainError(GrowthOnly) otherwise.
[[nodiscard]] double cobb_douglas_f(Lambda lambda, const PositivePair& p);

/// y / x^lambda for a quantity y >= 0 relative to x > 0.
[[nodiscard]] double quantity_indicator(Lambda lambda, double x, double y);

/// f_lambda(b) / f_lambda(a). Unit-free. Throws DomainError(StagnantPair)
/// when the reference pair a has x == y.
[[nodiscard]] double relative_comparison(Lambda lambda, const PositivePair& a,
                                         const PositivePair& b);

}  // namespace changekit
