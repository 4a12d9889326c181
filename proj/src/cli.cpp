#include "changekit/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "changekit/approximation.hpp"
#include "changekit/axioms.hpp"
#include "changekit/calibration.hpp"
#include "changekit/dataset.hpp"
#include "changekit/elasticity.hpp"
#include "changekit/number_format.hpp"
#include "changekit/report.hpp"
#include "changekit/verify.hpp"

namespace changekit::cli {

namespace {

double parse_number(std::string_view text, std::string_view option) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
        throw ValidationError("", std::string(option), "not a finite number: '" + std::string(text) + "'");
    }
    return value;
}

struct RankOptions {
    std::string input = "-";
    double lambda = 0.5;
    std::string indicator = "f";
    std::string format = "table";
    int precision = 2;
};

struct PairOptions {
    double lambda = 0.5;
    std::string reference;
    std::string comparison;
};

struct VerifyOptions {
    std::string target = "F";
    double lambda = 0.5;
    std::optional<std::uint64_t> seed;
    std::size_t samples = 10000;
};

struct ElasticityOptions {
    std::string function;
    double lambda = 0.5;
    double x = 1.0;
};

struct PlotOptions {
    std::vector<double> lambdas = default_curve_lambdas();
    double y_min = 0.01;
    double y_max = 5.0;
    int points = 500;
    std::vector<double> y;
};

int cmd_rank(const RankOptions& o, std::istream& in, std::ostream& out) {
    OutputFormat fmt;
    fmt.precision = o.precision;
    fmt.kind = o.format == "csv" ? FormatKind::csv : o.format == "json" ? FormatKind::json : FormatKind::table;
    fmt.validate();

    Dataset ds;
    if (o.input == "-") {
        ds = parse_csv(in, "<stdin>");
    } else {
        std::ifstream file(o.input, std::ios::binary);
        if (!file) throw ValidationError("", "", "cannot open '" + o.input + "'");
        ds = parse_csv(file, o.input);
    }
    const IndicatorKind kind = o.indicator == "F" ? IndicatorKind::F : IndicatorKind::f;
    render(out, rank_dataset(ds, Lambda(o.lambda), kind), fmt);
    return kSuccess;
}

int cmd_compare(const PairOptions& o, std::ostream& out) {
    const Lambda lambda(o.lambda);
    const PositivePair ref = parse_pair(o.reference, "--ref");
    const PositivePair cmp = parse_pair(o.comparison, "--cmp");
    const double quotient = relative_comparison(lambda, ref, cmp);
    if (!std::isfinite(quotient)) throw NumericalError("quotient is not finite");
    const std::string name = indicator_column_name(IndicatorKind::f, lambda);
    out << name << "(ref) = " << format_shortest(eval_f(lambda, ref)) << '\n'
        << name << "(cmp) = " << format_shortest(eval_f(lambda, cmp)) << '\n'
        << "quotient = " << format_shortest(quotient) << '\n';
    return kSuccess;
}

int cmd_calibrate(const PairOptions& o, std::ostream& out) {
    const CalibrationInput input{parse_pair(o.reference, "--ref"), parse_pair(o.comparison, "--cmp")};
    const Lambda lambda = calibrate_lambda(input);
    const double residual = std::abs(eval_f(lambda, input.reference) - eval_f(lambda, input.comparison));
    out << "lambda = " << format_shortest(lambda.value()) << '\n'
        << "residual = " << format_shortest(residual) << '\n';
    return kSuccess;
}

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
    const auto target = parse_verify_target(o.target);
    if (!target) throw ValidationError("", "--target", "expected one of f, F, rel, abs, log");
    axioms::SampleConfig cfg;
    cfg.seed = resolve_seed(o.seed, std::getenv(kSeedEnvVar));
    cfg.count = o.samples;

    const auto entries = run_verify_suite(*target, Lambda(o.lambda), cfg);
    nlohmann::ordered_json reports = nlohmann::ordered_json::array();
    bool all_as_expected = true;
    for (const auto& e : entries) {
        reports.push_back(axioms::to_json(e.report));
        all_as_expected = all_as_expected && e.as_expected();
        err << (e.as_expected() ? "[ok]   " : "[FAIL] ") << e.report.property << ": "
            << (e.report.pass ? "pass" : "fail") << " (expected " << (e.expected_pass ? "pass" : "fail")
            << "), max residual " << format_significant(e.report.max_residual, 3) << '\n';
    }
    out << reports.dump(2) << '\n';
    return all_as_expected ? kSuccess : kNumericalError;
}

int cmd_elasticity(const ElasticityOptions& o, std::ostream& out) {
    const EconFunction g = parse_econ_function(o.function);
    const Lambda lambda(o.lambda);
    out << "function = " << g.name << '\n'
        << "x = " << format_shortest(o.x) << '\n'
        << "marginal = " << format_shortest(marginal(g, o.x)) << '\n'
        << "classical_elasticity = " << format_shortest(classical_elasticity(g, o.x)) << '\n'
        << "generalized_elasticity(lambda=" << format_shortest(lambda.value())
        << ") = " << format_shortest(generalized_elasticity(lambda, g, o.x)) << '\n';
    return kSuccess;
}

int cmd_plot_data(const PlotOptions& o, std::ostream& out) {
    const std::vector<double> grid = o.y.empty() ? uniform_grid(o.y_min, o.y_max, o.points) : o.y;
    write_curve_csv(out, curve_table(o.lambdas, grid));
    return kSuccess;
}

}  // namespace

PositivePair parse_pair(std::string_view text, std::string_view option) {
    const auto comma = text.find(',');
    if (comma == std::string_view::npos) {
        throw ValidationError("", std::string(option), "expected x,y but got '" + std::string(text) + "'");
    }
    const double x = parse_number(text.substr(0, comma), option);
    const double y = parse_number(text.substr(comma + 1), option);
    if (x <= 0.0 || y <= 0.0) throw ValidationError("", std::string(option), "values must be > 0");
    return PositivePair(x, y);
}

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag, const char* env_value) {
    if (flag) return *flag;
    if (env_value != nullptr && *env_value != '\0') {
        const std::string_view text(env_value);
        std::uint64_t seed = 0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
        if (ec != std::errc{} || ptr != text.data() + text.size()) {
            throw ValidationError("", kSeedEnvVar, "not an unsigned 64-bit integer: '" + std::string(text) + "'");
        }
        return seed;
    }
    return axioms::kDefaultSeed;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Indicators of change: rank, calibrate and verify the f_lambda / F_lambda families",
                 "changekit"};
    app.require_subcommand(1);

    RankOptions rank_opts;
    auto* rank = app.add_subcommand("rank", "Rank observations of a label,past,present CSV");
    rank->add_option("input", rank_opts.input, "CSV file, or - for standard input");
    rank->add_option("--lambda", rank_opts.lambda, "Interpolation parameter")->capture_default_str();
    rank->add_option("--indicator", rank_opts.indicator, "f or F")
        ->check(CLI::IsMember({"f", "F"}))
        ->capture_default_str();
    rank->add_option("--format", rank_opts.format, "table, csv or json")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
    rank->add_option("--precision", rank_opts.precision, "Decimals; 15 means full precision")
        ->check(CLI::Range(0, OutputFormat::kMaxPrecision))
        ->capture_default_str();

    PairOptions compare_opts;
    auto* compare = app.add_subcommand("compare", "Unit-free quotient f_lambda(cmp) / f_lambda(ref)");
    compare->add_option("--lambda", compare_opts.lambda, "Interpolation parameter")->capture_default_str();
    compare->add_option("--ref", compare_opts.reference, "Reference pair x,y")->required();
    compare->add_option("--cmp", compare_opts.comparison, "Compared pair x,y")->required();

    PairOptions calibrate_opts;
    auto* calibrate = app.add_subcommand("calibrate", "Solve for lambda giving two pairs equal f_lambda");
    calibrate->add_option("--ref", calibrate_opts.reference, "Reference pair x,y")->required();
    calibrate->add_option("--cmp", calibrate_opts.comparison, "Comparison pair x,y")->required();

    VerifyOptions verify_opts;
    auto* verify = app.add_subcommand("verify", "Check indicator properties on random samples (JSON output)");
    verify->add_option("--target", verify_opts.target, "f, F, rel, abs or log")
        ->check(CLI::IsMember({"f", "F", "rel", "abs", "log"}))
        ->capture_default_str();
    verify->add_option("--lambda", verify_opts.lambda, "Interpolation parameter")->capture_default_str();
    verify->add_option("--seed", verify_opts.seed, std::string("Sample seed (overrides ") + kSeedEnvVar + ")");
    verify->add_option("--samples", verify_opts.samples, "Samples per check")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    ElasticityOptions elasticity_opts;
    auto* elasticity = app.add_subcommand("elasticity", "Marginal, classical and generalized elasticity");
    elasticity->add_option("--fn", elasticity_opts.function, "power:A=..,k=.. | exp:A=..,b=.. | affine:a=..,b=..")
        ->required();
    elasticity->add_option("--lambda", elasticity_opts.lambda, "Interpolation parameter")->capture_default_str();
    elasticity->add_option("--x", elasticity_opts.x, "Evaluation point")->required();

    PlotOptions plot_opts;
    auto* plot = app.add_subcommand("plot-data", "CSV of y -> F_lambda(1, y) curves");
    plot->add_option("--lambdas", plot_opts.lambdas, "Comma-separated lambdas")->delimiter(',')->capture_default_str();
    plot->add_option("--y-min", plot_opts.y_min, "Grid start")->capture_default_str();
    plot->add_option("--y-max", plot_opts.y_max, "Grid end")->capture_default_str();
    plot->add_option("--points", plot_opts.points, "Grid size")->capture_default_str();
    plot->add_option("--y", plot_opts.y, "Explicit comma-separated grid (overrides the range)")->delimiter(',');

    std::vector<std::string> argv_storage{"changekit"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(argv_storage.size());
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kSuccess : kInputError;
    }

    try {
        if (rank->parsed()) return cmd_rank(rank_opts, in, out);
        if (compare->parsed()) return cmd_compare(compare_opts, out);
        if (calibrate->parsed()) return cmd_calibrate(calibrate_opts, out);
        if (verify->parsed()) return cmd_verify(verify_opts, out, err);
        if (elasticity->parsed()) return cmd_elasticity(elasticity_opts, out);
        if (plot->parsed()) return cmd_plot_data(plot_opts, out);
    } catch (const NumericalError& e) {
        err << "error: " << e.what() << '\n';
        return kNumericalError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kNumericalError;
    }
    return kInputError;
}

}  // namespace changekit::cli
