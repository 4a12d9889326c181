#include "changekit/elasticity.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <set>

#include "changekit/number_format.hpp"

namespace changekit {

namespace {

constexpr double kRelativeStep = 1e-6;

double value_at(const EconFunction& g, double x) {
    if (!std::isfinite(x) || !g.in_domain(x)) {
        throw DomainError(DomainErrorKind::OutOfRange,
                          "x = " + format_shortest(x) + " outside the domain of " + g.name);
    }
    const double v = g.eval(x);
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw DomainError(DomainErrorKind::NonPositive, g.name + " must be positive at x = " + format_shortest(x));
    }
    return v;
}

void require_positive_scale(double a, const char* what) {
    if (!std::isfinite(a) || a <= 0.0) {
        throw DomainError(DomainErrorKind::NonPositive, std::string(what) + " must be finite and > 0");
    }
}

std::string param_text(double v) { return format_shortest(v); }

}  // namespace

EconFunction power_function(double scale, double exponent) {
    require_positive_scale(scale, "A");
    if (!std::isfinite(exponent)) throw DomainError(DomainErrorKind::NonFinite, "k must be finite");
    EconFunction g;
    g.name = "power(A=" + param_text(scale) + ",k=" + param_text(exponent) + ")";
    g.eval = [scale, exponent](double x) { return scale * std::pow(x, exponent); };
    g.derivative = [scale, exponent](double x) { return scale * exponent * std::pow(x, exponent - 1.0); };
    g.elasticity = [exponent](double) { return exponent; };
    return g;
}

EconFunction exponential_function(double scale, double rate) {
    require_positive_scale(scale, "A");
    if (!std::isfinite(rate)) throw DomainError(DomainErrorKind::NonFinite, "b must be finite");
    EconFunction g;
    g.name = "exp(A=" + param_text(scale) + ",b=" + param_text(rate) + ")";
    g.eval = [scale, rate](double x) { return scale * std::exp(rate * x); };
    g.derivative = [scale, rate](double x) { return scale * rate * std::exp(rate * x); };
    g.elasticity = [rate](double x) { return rate * x; };
    return g;
}

EconFunction affine_function(double intercept, double slope) {
    if (!std::isfinite(intercept) || !std::isfinite(slope)) {
        throw DomainError(DomainErrorKind::NonFinite, "affine coefficients must be finite");
    }
    EconFunction g;
    g.name = "affine(a=" + param_text(intercept) + ",b=" + param_text(slope) + ")";
    g.eval = [intercept, slope](double x) { return intercept + slope * x; };
    g.derivative = [slope](double) { return slope; };
    g.elasticity = [intercept, slope](double x) { return slope * x / (intercept + slope * x); };
    // a + b x > 0 on x > 0
    if (slope > 0.0) {
        g.domain_lo = std::max(0.0, -intercept / slope);
    } else if (slope < 0.0) {
        g.domain_hi = -intercept / slope;
    } else if (intercept <= 0.0) {
        g.domain_hi = 0.0;
    }
    if (!(g.domain_lo < g.domain_hi)) {
        throw DomainError(DomainErrorKind::NonPositive, g.name + " is not positive anywhere on x > 0");
    }
    return g;
}

EconFunction parse_econ_function(std::string_view text) {
    const auto fail = [&](const std::string& why) -> ValidationError {
        return ValidationError("", "--fn", "'" + std::string(text) + "': " + why);
    };

    const auto colon = text.find(':');
    const std::string family(text.substr(0, colon));
    std::map<std::string, double> params;
    if (colon != std::string_view::npos) {
        std::string_view rest = text.substr(colon + 1);
        while (!rest.empty()) {
            const auto comma = rest.find(',');
            const std::string_view item = rest.substr(0, comma);
            rest = (comma == std::string_view::npos) ? std::string_view{} : rest.substr(comma + 1);
            const auto eq = item.find('=');
            if (eq == std::string_view::npos) throw fail("expected key=value, got '" + std::string(item) + "'");
            const std::string key(item.substr(0, eq));
            const std::string_view number = item.substr(eq + 1);
            double value = 0.0;
            const auto [end, ec] = std::from_chars(number.data(), number.data() + number.size(), value);
            if (ec != std::errc{} || end != number.data() + number.size() || !std::isfinite(value)) {
                throw fail("parameter " + key + " is not a finite number");
            }
            if (!params.emplace(key, value).second) throw fail("parameter " + key + " given twice");
        }
    }

    const auto take = [&](const std::set<std::string>& expected) {
        for (const auto& [key, value] : params) {
            if (!expected.contains(key)) throw fail("unknown parameter " + key);
        }
        for (const auto& key : expected) {
            if (!params.contains(key)) throw fail("missing parameter " + key);
        }
    };

    try {
        if (family == "power") {
            take({"A", "k"});
            return power_function(params["A"], params["k"]);
        }
        if (family == "exp") {
            take({"A", "b"});
            return exponential_function(params["A"], params["b"]);
        }
        if (family == "affine") {
            take({"a", "b"});
            return affine_function(params["a"], params["b"]);
        }
    } catch (const DomainError& e) {
        throw fail(e.what());
    }
    throw fail("unknown function family '" + family + "' (expected power, exp or affine)");
}

double marginal(const EconFunction& g, double x) {
    value_at(g, x);
    if (g.derivative) return (*g.derivative)(x);

    const double h = std::max(std::abs(x), 1.0) * kRelativeStep;
    if (g.in_domain(x - h) && g.in_domain(x + h)) {
        return (g.eval(x + h) - g.eval(x - h)) / (2.0 * h);
    }
    if (g.in_domain(x + 2.0 * h)) {
        return (-3.0 * g.eval(x) + 4.0 * g.eval(x + h) - g.eval(x + 2.0 * h)) / (2.0 * h);
    }
    return (3.0 * g.eval(x) - 4.0 * g.eval(x - h) + g.eval(x - 2.0 * h)) / (2.0 * h);
}

double classical_elasticity(const EconFunction& g, double x) {
    const double gx = value_at(g, x);
    if (g.elasticity) return (*g.elasticity)(x);
    return marginal(g, x) * x / gx;
}

double generalized_elasticity(Lambda lambda, const EconFunction& g, double x) {
    const double l = lambda.value();
    if (l == 0.0) return marginal(g, x);
    if (l == 1.0) return classical_elasticity(g, x);
    const double gx = value_at(g, x);
    return marginal(g, x) * positive_power(x / gx, l);
}

double elasticity_quotient(Lambda lambda, const EconFunction& g, double x, double h) {
    if (h == 0.0 || !std::isfinite(h)) {
        throw DomainError(DomainErrorKind::OutOfRange, "step h must be finite and non-zero");
    }
    const double gx = value_at(g, x);
    const double gxh = value_at(g, x + h);
    const double l = lambda.value();
    return ((gxh - gx) / positive_power(gx, l)) / (h / positive_power(x, l));
}

}  // namespace changekit
