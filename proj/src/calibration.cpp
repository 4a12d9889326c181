#include "changekit/calibration.hpp"

#include <algorithm>
#include <cmath>

namespace changekit {

namespace {

constexpr double kMinLogPastRatio = 1e-12;
constexpr double kCalibrationTolerance = 1e-9;

}  // namespace

Lambda calibrate_lambda(const CalibrationInput& input) {
    const PositivePair& ref = input.reference;
    const PositivePair& cmp = input.comparison;

    if (ref.x() == ref.y() || cmp.x() == cmp.y()) {
        throw DomainError(DomainErrorKind::StagnantPair, "both pairs must show a change (x != y)");
    }
    if (ref.x() == cmp.x()) {
        throw DomainError(DomainErrorKind::EqualPastValues, "past values must differ");
    }
    const double d_ref = ref.y() - ref.x();
    const double d_cmp = cmp.y() - cmp.x();
    if ((d_ref > 0.0) != (d_cmp > 0.0)) {
        throw DomainError(DomainErrorKind::SignMismatch, "pairs change in opposite directions");
    }

    const double log_past = log_ratio(PositivePair(ref.x(), cmp.x()));
    if (std::abs(log_past) < kMinLogPastRatio) {
        throw DomainError(DomainErrorKind::EqualPastValues, "past values too close to separate");
    }
    const double log_change = log_ratio(PositivePair(std::abs(d_ref), std::abs(d_cmp)));
    const double value = log_change / log_past + 0.0;  // no negative zero
    if (!std::isfinite(value)) throw NumericalError("calibrated lambda is not finite");

    const Lambda lambda(value);
    const double f_ref = eval_f(lambda, ref);
    const double f_cmp = eval_f(lambda, cmp);
    const double scale = std::max(std::abs(f_ref), std::abs(f_cmp));
    if (!std::isfinite(f_ref) || !std::isfinite(f_cmp) ||
        std::abs(f_ref - f_cmp) > kCalibrationTolerance * scale) {
        throw NumericalError("calibrated lambda does not equate the two pairs");
    }
    return lambda;
}

double symmetric_scaling_residual(Lambda lambda, const PositivePair& p, double scale) {
    if (!std::isfinite(scale) || scale <= 0.0) {
        throw DomainError(DomainErrorKind::NonPositive, "scale factor C must be finite and > 0");
    }
    const double shrunk_past = p.x() / scale;
    const double shifted_present = p.y() - p.x() + shrunk_past;
    if (!(shrunk_past > 0.0) || !(shifted_present > 0.0)) {
        throw DomainError(DomainErrorKind::InvalidConstructedPair,
                          "y - x + x/C must be > 0 for the constructed pair");
    }
    const PositivePair scaled(scale * p.x(), scale * p.y());
    const PositivePair shifted(shrunk_past, shifted_present);
    return eval_f(lambda, scaled) - eval_f(lambda, shifted);
}

std::pair<double, double> doubling_example(Lambda lambda) {
    return {eval_f(lambda, PositivePair(2.0, 4.0)), eval_f(lambda, PositivePair(0.5, 1.5))};
}

double mrs_cobb_douglas(Lambda lambda, const PositivePair& p) {
    const double l = lambda.value();
    if (l == 1.0) {
        throw DomainError(DomainErrorKind::SingularParameter,
                          "marginal rate of substitution undefined at lambda = 1");
    }
    return l / (1.0 - l) * p.x();
}

}  // namespace changekit
