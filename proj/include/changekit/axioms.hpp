#pragma once

// Sampling-based checkers for the properties an indicator of change may have:
// affine linearity in y, naturality, relative scaling invariance, scale
// invariance, antisymmetry, additivity and normedness.
//
// Every checker draws a deterministic stream of samples from SampleConfig,
// computes a normalized residual per sample and keeps the worst one as a
// witness. Identities are exact in real arithmetic; residuals are divided by
// max(1, magnitude) so they read as relative above 1 and absolute below.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "changekit/indicator.hpp"

namespace changekit::axioms {

using Indicator = std::function<double(const PositivePair&)>;
using IndicatorFamily = std::function<Indicator(Lambda)>;

inline constexpr double kPassTolerance = 1e-9;
/// Expected failures must exhibit at least one sample above this residual.
inline constexpr double kFailureThreshold = 1e-6;
inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

struct Range {
    double lo;
    double hi;
};

struct SampleConfig {
    std::uint64_t seed = kDefaultSeed;
    std::size_t count = 10000;
    Range values{1e-3, 1e3};  // log-uniform, 0 < lo < hi
    Range lambdas{0.0, 1.0};  // uniform, lo <= hi
    Range scales{1e-3, 1e3};  // log-uniform, 0 < lo <= hi

    /// Throws DomainError(OutOfRange) on an empty or non-positive range or a zero count.
    void validate() const;
};

/// One sample's deviation from an identity.
struct Residual {
    double raw = 0.0;    // |lhs - rhs|, or a violation flag for sign properties
    double scale = 0.0;  // magnitude the residual is normalized by

    /// raw / max(1, scale); +inf when raw is not finite.
    [[nodiscard]] double normalized() const noexcept;
};

struct Witness {
    std::vector<std::pair<std::string, double>> inputs;
    Residual residual;
};

struct CheckReport {
    std::string property;
    std::size_t samples = 0;
    double max_residual = 0.0;
    double tolerance = kPassTolerance;
    Witness worst_case;
    bool pass = true;
};

/// {"property", "samples", "max_residual", "worst_case", "pass"} in that order.
/// Non-finite residuals serialize as null.
[[nodiscard]] nlohmann::ordered_json to_json(const CheckReport& report);

// Indicators under test.
[[nodiscard]] Indicator f_indicator(Lambda lambda);
[[nodiscard]] Indicator F_indicator(Lambda lambda);
[[nodiscard]] Indicator abs_indicator();
[[nodiscard]] Indicator rel_indicator();
[[nodiscard]] Indicator log_ratio_indicator();
[[nodiscard]] IndicatorFamily f_family();
[[nodiscard]] IndicatorFamily F_family();

// Per-sample residuals; the checkers below aggregate these.
[[nodiscard]] Residual affine_linearity_residual(const Indicator& ind, double x, double y1, double y2,
                                                 double t);
/// 0 when the sign of ind(x, y) matches y - x (exact zero at x == y) and
/// ind(x, .) increases from y to y2; otherwise a violation of at least 1.
[[nodiscard]] Residual naturality_residual(const Indicator& ind, double x, double y, double y2);
[[nodiscard]] Residual relative_scaling_residual(const Indicator& ind, double x, double y, double x_bar,
                                                 double y_bar, double scale);
[[nodiscard]] Residual vartia_residual(const Indicator& ind, double x, double y, double scale);
[[nodiscard]] Residual antisymmetry_residual(const Indicator& ind, double x, double y);
[[nodiscard]] Residual additivity_residual(const Indicator& ind, double x, double y, double z);
/// Excess of |F(x, x+h) - f(x, x+h)| over the second-order bound
/// |lambda| * max(x, x+h endpoints of t^-(1+lambda)) * h^2, relative to the
/// first-order term.
[[nodiscard]] Residual normed_residual(const Indicator& big, const Indicator& small, Lambda lambda,
                                       double x, double h);

/// f(x, (1-t) y1 + t y2) == (1-t) f(x, y1) + t f(x, y2).
[[nodiscard]] CheckReport check_affine_linearity(const Indicator& ind, const SampleConfig& cfg);
/// Sign follows y - x, zero at stagnation, increasing in y.
[[nodiscard]] CheckReport check_naturality(const Indicator& ind, const SampleConfig& cfg);
/// f(x, y) f(C x_bar, C y_bar) == f(x_bar, y_bar) f(C x, C y).
[[nodiscard]] CheckReport check_relative_scaling(const Indicator& ind, const SampleConfig& cfg);
/// f(C x, C y) == f(x, y).
[[nodiscard]] CheckReport check_vartia_invariance(const Indicator& ind, const SampleConfig& cfg);
/// f(x, y) == -f(y, x).
[[nodiscard]] CheckReport check_antisymmetry(const Indicator& ind, const SampleConfig& cfg);
/// f(x, y) + f(y, z) == f(x, z).
[[nodiscard]] CheckReport check_additivity(const Indicator& ind, const SampleConfig& cfg);
/// The linearization of y -> F_lambda(x, y) at x is f_lambda(x, y): checked by
/// shrinking h over {1e-1, ..., 1e-4} * x in both directions, lambda drawn
/// from cfg.lambdas.
[[nodiscard]] CheckReport check_normed(const IndicatorFamily& big, const IndicatorFamily& small,
                                       const SampleConfig& cfg);

/// Deterministic sample source shared by the checkers.
class SampleStream {
public:
    explicit SampleStream(std::uint64_t seed) : engine_(seed) {}

    [[nodiscard]] double uniform(double lo, double hi);
    [[nodiscard]] double log_uniform(double lo, double hi);

private:
    std::mt19937_64 engine_;
};

}  // namespace changekit::axioms
