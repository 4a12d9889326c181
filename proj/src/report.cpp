#include "changekit/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>

#include <json.hpp>

#include "changekit/number_format.hpp"

namespace changekit {

namespace {

bool ties(double a, double b) {
    return std::abs(a - b) <= kRankTieTolerance * std::max(std::abs(a), std::abs(b));
}

std::string number_text(double v, const OutputFormat& fmt) {
    return fmt.full_precision() ? format_shortest(v) : format_fixed(v, fmt.precision);
}

// The value a reader of number_text() would recover.
double displayed_value(double v, const OutputFormat& fmt) {
    if (fmt.full_precision()) return v;
    const std::string text = format_fixed(v, fmt.precision);
    double out = v;
    std::from_chars(text.data(), text.data() + text.size(), out);
    return out;
}

void render_csv(std::ostream& out, const Ranking& r, const OutputFormat& fmt) {
    out << "label,past,present,abs,rel,indicator,rank\n";
    for (const auto& row : r.rows) {
        out << quote_csv_field(row.label) << ',' << format_shortest(row.past) << ','
            << format_shortest(row.present) << ',' << number_text(row.abs, fmt) << ','
            << number_text(row.rel, fmt) << ',' << number_text(row.indicator(r.kind), fmt) << ',' << row.rank
            << '\n';
    }
}

void render_json(std::ostream& out, const Ranking& r, const OutputFormat& fmt) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : r.rows) {
        nlohmann::ordered_json j;
        j["label"] = row.label;
        j["past"] = row.past;
        j["present"] = row.present;
        j["abs"] = displayed_value(row.abs, fmt);
        j["rel"] = displayed_value(row.rel, fmt);
        j["indicator"] = displayed_value(row.indicator(r.kind), fmt);
        j["rank"] = row.rank;
        rows.push_back(std::move(j));
    }
    out << rows.dump(2) << '\n';
}

std::string unit_note(const Ranking& r) {
    const double exponent = 1.0 - r.lambda.value();
    const std::string name = indicator_column_name(r.kind, r.lambda);
    if (exponent == 0.0) return name + " is unit-free.";
    return name + " carries unit u^" + format_significant(exponent, 4) +
           " (u = unit of past/present); compare values only as quotients.";
}

void render_table(std::ostream& out, const Ranking& r, const OutputFormat& fmt) {
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"label", "past", "present", "abs", "rel", indicator_column_name(r.kind, r.lambda), "rank"});
    for (const auto& row : r.rows) {
        cells.push_back({row.label, format_shortest(row.past), format_shortest(row.present),
                         number_text(row.abs, fmt), number_text(100.0 * row.rel, fmt) + "%",
                         number_text(row.indicator(r.kind), fmt), std::to_string(row.rank)});
    }
    std::vector<std::size_t> widths(cells.front().size(), 0);
    for (const auto& line : cells) {
        for (std::size_t c = 0; c < line.size(); ++c) widths[c] = std::max(widths[c], line[c].size());
    }
    for (const auto& line : cells) {
        for (std::size_t c = 0; c < line.size(); ++c) {
            const std::string pad(widths[c] - line[c].size(), ' ');
            if (c > 0) out << "  ";
            out << (c == 0 ? line[c] + pad : pad + line[c]);
        }
        out << '\n';
    }
    out << '\n' << unit_note(r) << '\n';
}

}  // namespace

void OutputFormat::validate() const {
    if (precision < 0 || precision > kMaxPrecision) {
        throw DomainError(DomainErrorKind::OutOfRange, "precision must be in [0, 15]");
    }
}

std::string indicator_column_name(IndicatorKind kind, Lambda lambda) {
    return std::string(kind == IndicatorKind::f ? "f_" : "F_") + format_significant(lambda.value(), 4);
}

Ranking rank_dataset(const Dataset& ds, Lambda lambda, IndicatorKind kind) {
    Ranking ranking{lambda, kind, {}};
    ranking.rows.reserve(ds.observations.size());
    for (const auto& obs : ds.observations) {
        const PositivePair& p = obs.pair;
        const double f = eval_f(lambda, p);
        const double F = eval_F(lambda, p);
        if (!std::isfinite(f) || !std::isfinite(F)) {
            throw NumericalError("indicator for '" + obs.label + "' is not finite");
        }
        ranking.rows.push_back({obs.label, p.x(), p.y(), abs_change(p), rel_change(p), f, F, 0});
    }

    auto& rows = ranking.rows;
    std::sort(rows.begin(), rows.end(), [kind](const IndicatorReport& a, const IndicatorReport& b) {
        if (a.indicator(kind) != b.indicator(kind)) return a.indicator(kind) > b.indicator(kind);
        return a.label < b.label;
    });
    int rank = 0;
    double leader = 0.0;
    for (auto& row : rows) {
        if (rank == 0 || !ties(row.indicator(kind), leader)) {
            ++rank;
            leader = row.indicator(kind);
        }
        row.rank = rank;
    }
    std::stable_sort(rows.begin(), rows.end(), [](const IndicatorReport& a, const IndicatorReport& b) {
        return a.rank != b.rank ? a.rank < b.rank : a.label < b.label;
    });
    return ranking;
}

void render(std::ostream& out, const Ranking& ranking, const OutputFormat& format) {
    format.validate();
    switch (format.kind) {
        case FormatKind::table: render_table(out, ranking, format); break;
        case FormatKind::csv: render_csv(out, ranking, format); break;
        case FormatKind::json: render_json(out, ranking, format); break;
    }
}

}  // namespace changekit
