#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "changekit/dataset.hpp"

namespace changekit {

enum class IndicatorKind { f, F };

enum class FormatKind { table, csv, json };

/// Rendering options. Precision is the number of decimals for computed
/// columns; the maximum, 15, switches to full precision (shortest
/// round-trip text, at most 17 significant digits).
struct OutputFormat {
    static constexpr int kMaxPrecision = 15;

    FormatKind kind = FormatKind::table;
    int precision = 2;

    [[nodiscard]] bool full_precision() const noexcept { return precision == kMaxPrecision; }
    /// Throws DomainError(OutOfRange) outside [0, 15].
    void validate() const;
};

/// Computed values for one observation. `rank` orders by the selected
/// indicator: dense, descending, 1-based.
struct IndicatorReport {
    std::string label;
    double past = 0.0;
    double present = 0.0;
    double abs = 0.0;
    double rel = 0.0;
    double f = 0.0;
    double F = 0.0;
    int rank = 0;

    [[nodiscard]] double indicator(IndicatorKind kind) const noexcept { return kind == IndicatorKind::f ? f : F; }
};

struct Ranking {
    Lambda lambda;
    IndicatorKind kind;
    std::vector<IndicatorReport> rows;  // by rank, then label
};

/// Values within this relative distance of a rank group's leading value share its rank.
inline constexpr double kRankTieTolerance = 1e-9;

[[nodiscard]] Ranking rank_dataset(const Dataset& ds, Lambda lambda, IndicatorKind kind);

/// Writes the ranking in the requested format. CSV and JSON use the columns
/// label,past,present,abs,rel,indicator,rank; the table shows rel as a
/// percentage and closes with a note on the indicator's unit.
void render(std::ostream& out, const Ranking& ranking, const OutputFormat& format);

[[nodiscard]] std::string indicator_column_name(IndicatorKind kind, Lambda lambda);

}  // namespace changekit
