#include "changekit/indicator.hpp"

#include <cmath>

namespace changekit {

namespace {

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw DomainError(DomainErrorKind::NonFinite, std::string(what) + " must be finite");
    }
}

}  // namespace

Lambda::Lambda(double value) : value_(value) { require_finite(value, "lambda"); }

PositivePair::PositivePair(double past, double present) : x_(past), y_(present) {
    require_finite(past, "past value");
    require_finite(present, "present value");
    if (past <= 0.0) throw DomainError(DomainErrorKind::NonPositive, "past value must be > 0");
    if (present <= 0.0) throw DomainError(DomainErrorKind::NonPositive, "present value must be > 0");
}

double positive_power(double base, double exponent) {
    if (exponent == 0.0) return 1.0;
    if (exponent == 1.0) return base;
    return std::pow(base, exponent);
}

double abs_change(const PositivePair& p) noexcept { return p.y() - p.x(); }

double rel_change(const PositivePair& p) noexcept { return (p.y() - p.x()) / p.x(); }

double log_ratio(const PositivePair& p) noexcept {
    const double x = p.x();
    const double y = p.y();
    // Sterbenz: y - x is exact for x/2 <= y <= 2x.
    if (y >= 0.5 * x && y <= 2.0 * x) return std::log1p((y - x) / x);
    return std::log(y) - std::log(x);
}

double eval_f(Lambda lambda, const PositivePair& p) {
    const double l = lambda.value();
    if (l == 0.0) return abs_change(p);
    if (l == 1.0) return rel_change(p);
    return (p.y() - p.x()) / positive_power(p.x(), l);
}

double eval_F(Lambda lambda, const PositivePair& p) {
    const double l = lambda.value();
    if (l == 0.0) return abs_change(p);
    if (l == 1.0) return log_ratio(p);

    const double a = 1.0 - l;
    const double r = log_ratio(p);
    if (std::abs(a * r) <= 1.0) {
        return positive_power(p.x(), a) * std::expm1(a * r) / a;
    }
    // y^a and x^a differ by more than a factor e: no cancellation left to avoid.
    return (positive_power(p.y(), a) - positive_power(p.x(), a)) / a;
}

double cobb_douglas_f(Lambda lambda, const PositivePair& p) {
    if (!(p.y() > p.x())) {
        throw DomainError(DomainErrorKind::GrowthOnly,
                          "Cobb-Douglas form needs y > x (fractional powers of a non-positive change)");
    }
    const double l = lambda.value();
    return positive_power(rel_change(p), l) * positive_power(abs_change(p), 1.0 - l);
}

double quantity_indicator(Lambda lambda, double x, double y) {
    require_finite(x, "x");
    require_finite(y, "y");
    if (x <= 0.0) throw DomainError(DomainErrorKind::NonPositive, "reference quantity x must be > 0");
    if (y < 0.0) throw DomainError(DomainErrorKind::Negative, "quantity y must be >= 0");
    return y / positive_power(x, lambda.value());
}

double relative_comparison(Lambda lambda, const PositivePair& a, const PositivePair& b) {
    if (a.x() == a.y()) {
        throw DomainError(DomainErrorKind::StagnantPair,
                          "reference pair has no change; quotient would divide by zero");
    }
    return eval_f(lambda, b) / eval_f(lambda, a);
}

}  // namespace changekit
