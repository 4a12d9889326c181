#pragma once

#include <utility>

#include "changekit/indicator.hpp"

namespace changekit {

/// Two transitions that should receive the same f_lambda value.
struct CalibrationInput {
    PositivePair reference;   // (x, y)
    PositivePair comparison;  // (x_bar, y_bar)
};

/// The unique lambda with f_lambda(reference) == f_lambda(comparison):
///
///   lambda = ln((y_bar - x_bar) / (y - x)) / ln(x_bar / x)
///
/// Errors (DomainError kinds): StagnantPair if either pair has no change,
/// EqualPastValues if x == x_bar (or |ln(x_bar/x)| < 1e-12), SignMismatch if
/// the pairs change in opposite directions. The result is re-checked against
/// both pairs (1e-9 relative); a failed check raises NumericalError.
/// The returned lambda is not clamped to [0, 1].
[[nodiscard]] Lambda calibrate_lambda(const CalibrationInput& input);

/// f_lambda(Cx, Cy) - f_lambda(x/C, y - x + x/C).
///
/// The first pair keeps the relative change and scales the absolute change
/// by C; the second keeps the absolute change and scales the relative change
/// by C. Analytically (C^(1-lambda) - C^lambda) f_lambda(x, y), which vanishes
/// for every C only at lambda = 1/2.
[[nodiscard]] double symmetric_scaling_residual(Lambda lambda, const PositivePair& p, double scale);

/// (f_lambda(2, 4), f_lambda(1/2, 3/2)) = (2^(1-lambda), 2^lambda).
/// Doubling the absolute change vs doubling the relative change of (1, 2).
[[nodiscard]] std::pair<double, double> doubling_example(Lambda lambda);

/// Marginal rate of substitution of the Cobb-Douglas form of f_lambda,
/// lambda / (1 - lambda) * x. Only x is used. Throws at lambda = 1.
[[nodiscard]] double mrs_cobb_douglas(Lambda lambda, const PositivePair& p);

}  // namespace changekit
