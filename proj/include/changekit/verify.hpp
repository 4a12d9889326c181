#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "changekit/axioms.hpp"

namespace changekit {

enum class VerifyTarget { f, F, rel, abs, log };

[[nodiscard]] std::optional<VerifyTarget> parse_verify_target(std::string_view name);
[[nodiscard]] std::string_view to_string(VerifyTarget target);

struct VerifyEntry {
    axioms::CheckReport report;
    bool expected_pass = true;

    /// Expected passes must pass; expected failures must fail with a witness
    /// above axioms::kFailureThreshold.
    [[nodiscard]] bool as_expected() const noexcept;
};

/// Runs the property checks that apply to `target`, each paired with
/// whether the indicator is supposed to satisfy it:
///
///   f     affine linearity, naturality, relative scaling; scale invariance only at lambda = 1
///   F     naturality, relative scaling, antisymmetry, additivity, normed
///   rel   fails antisymmetry and additivity, satisfies the rest
///   abs   fails scale invariance, satisfies the rest
///   log   fails affine linearity, satisfies the rest
///
/// `lambda` parameterizes f and F; cfg.lambdas is replaced by [lambda, lambda].
/// Checks run concurrently; the result order is fixed.
[[nodiscard]] std::vector<VerifyEntry> run_verify_suite(VerifyTarget target, Lambda lambda,
                                                        axioms::SampleConfig cfg);

}  // namespace changekit
