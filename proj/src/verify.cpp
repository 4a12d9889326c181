#include "changekit/verify.hpp"

#include <functional>
#include <future>

namespace changekit {

using namespace changekit::axioms;

std::optional<VerifyTarget> parse_verify_target(std::string_view name) {
    if (name == "f") return VerifyTarget::f;
    if (name == "F") return VerifyTarget::F;
    if (name == "rel") return VerifyTarget::rel;
    if (name == "abs") return VerifyTarget::abs;
    if (name == "log") return VerifyTarget::log;
    return std::nullopt;
}

std::string_view to_string(VerifyTarget target) {
    switch (target) {
        case VerifyTarget::f: return "f";
        case VerifyTarget::F: return "F";
        case VerifyTarget::rel: return "rel";
        case VerifyTarget::abs: return "abs";
        case VerifyTarget::log: return "log";
    }
    return "?";
}

bool VerifyEntry::as_expected() const noexcept {
    return expected_pass ? report.pass : (!report.pass && report.max_residual > kFailureThreshold);
}

std::vector<VerifyEntry> run_verify_suite(VerifyTarget target, Lambda lambda, SampleConfig cfg) {
    cfg.lambdas = {lambda.value(), lambda.value()};
    cfg.validate();

    using Check = CheckReport (*)(const Indicator&, const SampleConfig&);
    struct Planned {
        std::function<CheckReport()> run;
        bool expected_pass;
    };
    std::vector<Planned> plan;
    const auto add = [&](Check check, const Indicator& ind, bool expected) {
        plan.push_back({[check, ind, cfg] { return check(ind, cfg); }, expected});
    };

    switch (target) {
        case VerifyTarget::f: {
            const Indicator ind = f_indicator(lambda);
            add(check_affine_linearity, ind, true);
            add(check_naturality, ind, true);
            add(check_relative_scaling, ind, true);
            add(check_vartia_invariance, ind, lambda.value() == 1.0);
            break;
        }
        case VerifyTarget::F: {
            const Indicator ind = F_indicator(lambda);
            add(check_naturality, ind, true);
            add(check_relative_scaling, ind, true);
            add(check_antisymmetry, ind, true);
            add(check_additivity, ind, true);
            plan.push_back({[cfg] { return check_normed(F_family(), f_family(), cfg); }, true});
            break;
        }
        case VerifyTarget::rel: {
            const Indicator ind = rel_indicator();
            add(check_affine_linearity, ind, true);
            add(check_naturality, ind, true);
            add(check_relative_scaling, ind, true);
            add(check_vartia_invariance, ind, true);
            add(check_antisymmetry, ind, false);
            add(check_additivity, ind, false);
            break;
        }
        case VerifyTarget::abs: {
            const Indicator ind = abs_indicator();
            add(check_affine_linearity, ind, true);
            add(check_naturality, ind, true);
            add(check_relative_scaling, ind, true);
            add(check_vartia_invariance, ind, false);
            add(check_antisymmetry, ind, true);
            add(check_additivity, ind, true);
            break;
        }
        case VerifyTarget::log: {
            const Indicator ind = log_ratio_indicator();
            add(check_affine_linearity, ind, false);
            add(check_naturality, ind, true);
            add(check_relative_scaling, ind, true);
            add(check_vartia_invariance, ind, true);
            add(check_antisymmetry, ind, true);
            add(check_additivity, ind, true);
            break;
        }
    }

    std::vector<std::future<CheckReport>> running;
    running.reserve(plan.size());
    for (const auto& p : plan) running.push_back(std::async(std::launch::async, p.run));

    std::vector<VerifyEntry> entries;
    entries.reserve(plan.size());
    for (std::size_t i = 0; i < plan.size(); ++i) entries.push_back({running[i].get(), plan[i].expected_pass});
    return entries;
}

}  // namespace changekit
