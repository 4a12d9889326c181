#include "changekit/axioms.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace changekit::axioms {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool valid_positive_range(Range r) {
    return std::isfinite(r.lo) && std::isfinite(r.hi) && r.lo > 0.0 && r.lo <= r.hi;
}

double max_abs(std::initializer_list<double> values) {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
}

double at(const Indicator& ind, double x, double y) { return ind(PositivePair(x, y)); }

using Inputs = std::vector<std::pair<std::string, double>>;

// Draws cfg.count samples with `draw(stream, index) -> Witness` and keeps the
// first sample with the largest normalized residual.
template <class Draw>
CheckReport run_check(std::string property, const SampleConfig& cfg, Draw&& draw) {
    cfg.validate();
    SampleStream stream(cfg.seed);
    CheckReport report;
    report.property = std::move(property);
    report.samples = cfg.count;
    report.tolerance = kPassTolerance;
    double worst = -1.0;
    for (std::size_t i = 0; i < cfg.count; ++i) {
        Witness w = draw(stream, i);
        const double n = w.residual.normalized();
        if (n > worst) {
            worst = n;
            report.worst_case = std::move(w);
        }
    }
    report.max_residual = worst;
    report.pass = worst <= report.tolerance;
    return report;
}

nlohmann::ordered_json number_or_null(double v) {
    if (!std::isfinite(v)) return nullptr;
    return v;
}

}  // namespace

void SampleConfig::validate() const {
    if (count == 0) throw DomainError(DomainErrorKind::OutOfRange, "sample count must be positive");
    if (!valid_positive_range(values) || !(values.lo < values.hi)) {
        throw DomainError(DomainErrorKind::OutOfRange, "value range must satisfy 0 < lo < hi");
    }
    if (!std::isfinite(lambdas.lo) || !std::isfinite(lambdas.hi) || lambdas.lo > lambdas.hi) {
        throw DomainError(DomainErrorKind::OutOfRange, "lambda range must satisfy lo <= hi");
    }
    if (!valid_positive_range(scales)) {
        throw DomainError(DomainErrorKind::OutOfRange, "scale range must satisfy 0 < lo <= hi");
    }
}

double Residual::normalized() const noexcept {
    if (!std::isfinite(raw) || std::isnan(scale) || std::isinf(scale)) return kInf;
    return raw / std::max(1.0, scale);
}

double SampleStream::uniform(double lo, double hi) {
    // 53 random mantissa bits; independent of the standard library's
    // distribution implementations so streams are reproducible everywhere.
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

double SampleStream::log_uniform(double lo, double hi) {
    if (lo == hi) return lo;
    return std::exp(uniform(std::log(lo), std::log(hi)));
}

nlohmann::ordered_json to_json(const CheckReport& report) {
    nlohmann::ordered_json worst = nlohmann::ordered_json::object();
    for (const auto& [name, value] : report.worst_case.inputs) worst[name] = number_or_null(value);
    worst["raw_residual"] = number_or_null(report.worst_case.residual.raw);
    worst["scale"] = number_or_null(report.worst_case.residual.scale);

    nlohmann::ordered_json j;
    j["property"] = report.property;
    j["samples"] = report.samples;
    j["max_residual"] = number_or_null(report.max_residual);
    j["worst_case"] = std::move(worst);
    j["pass"] = report.pass;
    return j;
}

Indicator f_indicator(Lambda lambda) {
    return [lambda](const PositivePair& p) { return eval_f(lambda, p); };
}

Indicator F_indicator(Lambda lambda) {
    return [lambda](const PositivePair& p) { return eval_F(lambda, p); };
}

Indicator abs_indicator() { return [](const PositivePair& p) { return abs_change(p); }; }
Indicator rel_indicator() { return [](const PositivePair& p) { return rel_change(p); }; }
Indicator log_ratio_indicator() { return [](const PositivePair& p) { return log_ratio(p); }; }

IndicatorFamily f_family() { return [](Lambda l) { return f_indicator(l); }; }
IndicatorFamily F_family() { return [](Lambda l) { return F_indicator(l); }; }

Residual affine_linearity_residual(const Indicator& ind, double x, double y1, double y2, double t) {
    const double mixed = at(ind, x, (1.0 - t) * y1 + t * y2);
    const double a = (1.0 - t) * at(ind, x, y1);
    const double b = t * at(ind, x, y2);
    return {std::abs(mixed - a - b), max_abs({mixed, a, b})};
}

Residual naturality_residual(const Indicator& ind, double x, double y, double y2) {
    const double v = at(ind, x, y);
    if (!std::isfinite(v)) return {kInf, 0.0};

    double violation = 0.0;
    if (x == y) {
        violation = std::abs(v);
    } else if ((y > x) ? !(v > 0.0) : !(v < 0.0)) {
        violation = 1.0 + std::abs(v);
    }

    const double lo = std::min(y, y2);
    const double hi = std::max(y, y2);
    if (hi > lo) {
        const double v_lo = at(ind, x, lo);
        const double v_hi = at(ind, x, hi);
        if (!std::isfinite(v_lo) || !std::isfinite(v_hi)) return {kInf, 0.0};
        // Strictly increasing, except where two nearby inputs may round to one value.
        const bool distinct = hi - lo > 1e-9 * hi;
        if (v_hi < v_lo || (distinct && !(v_hi > v_lo))) {
            violation = std::max(violation, 1.0 + (v_lo - v_hi));
        }
    }
    return {violation, 0.0};
}

Residual relative_scaling_residual(const Indicator& ind, double x, double y, double x_bar, double y_bar,
                                   double scale) {
    const double lhs = at(ind, x, y) * at(ind, scale * x_bar, scale * y_bar);
    const double rhs = at(ind, x_bar, y_bar) * at(ind, scale * x, scale * y);
    return {std::abs(lhs - rhs), std::abs(lhs)};
}

Residual vartia_residual(const Indicator& ind, double x, double y, double scale) {
    const double scaled = at(ind, scale * x, scale * y);
    const double base = at(ind, x, y);
    return {std::abs(scaled - base), max_abs({scaled, base})};
}

Residual antisymmetry_residual(const Indicator& ind, double x, double y) {
    const double forward = at(ind, x, y);
    const double backward = at(ind, y, x);
    return {std::abs(forward + backward), max_abs({forward, backward})};
}

Residual additivity_residual(const Indicator& ind, double x, double y, double z) {
    const double first = at(ind, x, y);
    const double second = at(ind, y, z);
    const double whole = at(ind, x, z);
    return {std::abs(first + second - whole), max_abs({first, second, whole})};
}

Residual normed_residual(const Indicator& big, const Indicator& small, Lambda lambda, double x, double h) {
    const double xh = x + h;
    const double big_value = at(big, x, xh);
    const double small_value = at(small, x, xh);
    if (!std::isfinite(big_value) || !std::isfinite(small_value)) return {kInf, 0.0};

    const double exponent = -(1.0 + lambda.value());
    const double curvature = std::abs(lambda.value()) * std::max(std::pow(x, exponent), std::pow(xh, exponent));
    const double excess = std::max(0.0, std::abs(big_value - small_value) - curvature * h * h);
    const double first_order = std::max(std::abs(h), std::abs(small_value));
    return {first_order > 0.0 ? excess / first_order : 0.0, 0.0};
}

CheckReport check_affine_linearity(const Indicator& ind, const SampleConfig& cfg) {
    return run_check("affine_linearity", cfg, [&](SampleStream& s, std::size_t) {
        const double x = s.log_uniform(cfg.values.lo, cfg.values.hi);
        const double y1 = s.log_uniform(cfg.values.lo, cfg.values.hi);
        const double y2 = s.log_uniform(cfg.values.lo, cfg.values.hi);
        const double t = s.uniform(0.0, 1.0);
        return Witness{Inputs{{"x", x}, {"y1", y1}, {"y2", y2}, {"t", t}},
                       affine_linearity_residual(ind, x, y1, y2, t)};
    });
}

CheckReport check_naturality(const Indicator& ind, const SampleConfig& cfg) {
    return run_check("naturality", cfg, [&](SampleStream& s, std::size_t i) {
        const double x = s.log_uniform(cfg.values.lo, cfg.values.hi);
        const double drawn = s.log_uniform(cfg.values.lo, cfg.values.hi);
        const double y = (i % 8 == 0) ? x : drawn;  // stagnation cases
        const double y2 = s.log_uniform(cfg.values.lo, cfg.values.hi);
        return Witness{Inputs{{"x", x}, {"y", y}, {"y2", y2}}, naturality_residual(ind, x, y, y2)};
    });
}

CheckReport check_relative_scaling(const Indicator& ind, const SampleConfig& cfg) {
    return run_check("relative_scaling", cfg, [&](SampleStream& s, std::size_t) {
        const double x = s.log_uniform(cfg.values.lo, cfg.values.hi);
        const double y = s.log_uniform(cfg.values.lo, cfg.values.hi);
        const double x_bar = s.log_uniform(cfg.values.lo, cfg.values.hi);
        const double y_bar = s.log_uniform(cfg.values.lo, cfg.values.hi);
        const double c = s.log_uniform(cfg.scales.lo, cfg.scales.hi);
        return Witness{Inputs{{"x", x}, {"y", y}, {"x_bar", x_bar}, {"y_bar", y_bar}, {"C", c}},
                       relative_scaling_residual(ind, x, y, x_bar, y_bar, c)};
    });
}

CheckReport check_vartia_invariance(const Indicator& ind, const SampleConfig& cfg) {
    return run_check("vartia_scale_invariance", cfg, [&](SampleStream& s, std::size_t) {
        const double x = s.log_uniform(cfg.values.lo, cfg.values.hi);
        const double y = s.log_uniform(cfg.values.lo, cfg.values.hi);
        const double c = s.log_uniform(cfg.scales.lo, cfg.scales.hi);
        return Witness{Inputs{{"x", x}, {"y", y}, {"C", c}}, vartia_residual(ind, x, y, c)};
    });
}

CheckReport check_antisymmetry(const Indicator& ind, const SampleConfig& cfg) {
    return run_check("antisymmetry", cfg, [&](SampleStream& s, std::size_t) {
        const double x = s.log_uniform(cfg.values.lo, cfg.values.hi);
        const double y = s.log_uniform(cfg.values.lo, cfg.values.hi);
        return Witness{Inputs{{"x", x}, {"y", y}}, antisymmetry_residual(ind, x, y)};
    });
}

CheckReport check_additivity(const Indicator& ind, const SampleConfig& cfg) {
    return run_check("additivity", cfg, [&](SampleStream& s, std::size_t) {
        const double x = s.log_uniform(cfg.values.lo, cfg.values.hi);
        const double y = s.log_uniform(cfg.values.lo, cfg.values.hi);
        const double z = s.log_uniform(cfg.values.lo, cfg.values.hi);
        return Witness{Inputs{{"x", x}, {"y", y}, {"z", z}}, additivity_residual(ind, x, y, z)};
    });
}

CheckReport check_normed(const IndicatorFamily& big, const IndicatorFamily& small, const SampleConfig& cfg) {
    static constexpr std::array kSteps{1e-1, 1e-2, 1e-3, 1e-4};
    return run_check("normed", cfg, [&](SampleStream& s, std::size_t) {
        const Lambda lambda(s.uniform(cfg.lambdas.lo, cfg.lambdas.hi));
        const double x = s.log_uniform(cfg.values.lo, cfg.values.hi);
        const Indicator big_ind = big(lambda);
        const Indicator small_ind = small(lambda);
        Witness worst{Inputs{{"lambda", lambda.value()}, {"x", x}, {"h", 0.0}}, {}};
        double worst_n = -1.0;
        for (double step : kSteps) {
            for (double h : {step * x, -step * x}) {
                const Residual r = normed_residual(big_ind, small_ind, lambda, x, h);
                if (r.normalized() > worst_n) {
                    worst_n = r.normalized();
                    worst.inputs[2].second = h;
                    worst.residual = r;
                }
            }
        }
        return worst;
    });
}

}  // namespace changekit::axioms
