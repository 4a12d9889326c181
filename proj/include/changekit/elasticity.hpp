#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include "changekit/indicator.hpp"

namespace changekit {

/// A positive-valued economic function g on an open interval of (0, inf).
struct EconFunction {
    using Fn = std::function<double(double)>;

    std::string name;
    Fn eval;
    std::optional<Fn> derivative;  // exact g'
    std::optional<Fn> elasticity;  // exact x g'(x) / g(x), when known in closed form
    double domain_lo = 0.0;
    double domain_hi = std::numeric_limits<double>::infinity();

    [[nodiscard]] bool in_domain(double x) const noexcept { return x > domain_lo && x < domain_hi; }
};

/// A * x^k, A > 0. Elasticity k everywhere.
[[nodiscard]] EconFunction power_function(double scale, double exponent);
/// A * e^(b x), A > 0. Elasticity b x.
[[nodiscard]] EconFunction exponential_function(double scale, double rate);
/// a + b x, restricted to the x > 0 where it is positive.
[[nodiscard]] EconFunction affine_function(double intercept, double slope);

/// Built-in registry lookup: "power:A=5,k=0.3", "exp:A=1,b=2", "affine:a=1,b=2".
/// Throws ValidationError on unknown names, missing or malformed parameters.
[[nodiscard]] EconFunction parse_econ_function(std::string_view text);

/// g'(x): the exact derivative when available, else a central difference
/// with step max(|x|, 1) * 1e-6 (one-sided three-point near a domain edge).
[[nodiscard]] double marginal(const EconFunction& g, double x);

/// g'(x) x / g(x).
[[nodiscard]] double classical_elasticity(const EconFunction& g, double x);

/// g'(x) (x / g(x))^lambda. Returns marginal() at lambda = 0 and
/// classical_elasticity() at lambda = 1.
[[nodiscard]] double generalized_elasticity(Lambda lambda, const EconFunction& g, double x);

/// The pre-limit quotient ((g(x+h) - g(x)) / g(x)^lambda) / (h / x^lambda).
/// Converges to generalized_elasticity with error O(h).
[[nodiscard]] double elasticity_quotient(Lambda lambda, const EconFunction& g, double x, double h);

}  // namespace changekit
