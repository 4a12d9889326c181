#include "changekit/approximation.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "changekit/number_format.hpp"

namespace changekit {

TaylorOrder::TaylorOrder(int n) : n_(n) {
    if (n < 1 || n > kMax) {
        throw DomainError(DomainErrorKind::OutOfRange,
                          "Taylor order must be in [1, " + std::to_string(kMax) + "]");
    }
}

double taylor_coefficient(Lambda lambda, int k, double x) {
    if (k < 2) throw DomainError(DomainErrorKind::OutOfRange, "Taylor coefficient index k must be >= 2");
    if (!std::isfinite(x) || x <= 0.0) throw DomainError(DomainErrorKind::NonPositive, "x must be > 0");

    const double l = lambda.value();
    // (lambda)_(k-1) / (k-1)!, accumulated factor by factor to stay in range.
    double rising_over_factorial = 1.0;
    for (int j = 0; j <= k - 2; ++j) rising_over_factorial *= (l + j) / (j + 1);
    if (rising_over_factorial == 0.0) return 0.0;

    const double sign = (k % 2 == 0) ? -1.0 : 1.0;
    return sign * rising_over_factorial / k / positive_power(x, k + l - 1.0);
}

double taylor_F(Lambda lambda, const PositivePair& p, TaylorOrder order) {
    const double linear = eval_f(lambda, p);
    if (order.value() == 1) return linear;

    // coefficient_k * (y - x)^k == x^(1-lambda) * c_k * u^k with u = (y - x)/x,
    // which keeps every term scale-free.
    const double l = lambda.value();
    const double u = (p.y() - p.x()) / p.x();
    double rising_over_factorial = 1.0;
    double u_power = u;
    double sum = 0.0;
    for (int k = 2; k <= order.value(); ++k) {
        rising_over_factorial *= (l + (k - 2)) / (k - 1);
        if (rising_over_factorial == 0.0) break;  // series terminates
        u_power *= u;
        const double term = rising_over_factorial / k * u_power;
        sum += (k % 2 == 0) ? -term : term;
    }
    return linear + positive_power(p.x(), 1.0 - l) * sum;
}

double remainder_bound(Lambda lambda, const PositivePair& p) {
    const double l = lambda.value();
    if (l < 0.0) {
        throw DomainError(DomainErrorKind::Negative, "remainder bound is only asserted for lambda >= 0");
    }
    const double d = p.y() - p.x();
    return l * d * d / positive_power(std::min(p.x(), p.y()), 1.0 + l);
}

double linearization_residual(Lambda lambda, double x, double h) {
    if (!std::isfinite(x) || x <= 0.0) throw DomainError(DomainErrorKind::NonPositive, "x must be > 0");
    if (!std::isfinite(h) || !(x + h > 0.0)) {
        throw DomainError(DomainErrorKind::InvalidConstructedPair, "x + h must be > 0");
    }
    const PositivePair p(x, x + h);
    return eval_F(lambda, p) - eval_f(lambda, p);
}

double box_cox(Lambda lambda, double y) { return eval_F(lambda, PositivePair(1.0, y)); }

CurveTable curve_table(std::span<const double> lambdas, std::span<const double> grid) {
    CurveTable table;
    table.grid.assign(grid.begin(), grid.end());
    for (double y : table.grid) {
        if (!std::isfinite(y) || y <= 0.0) {
            throw DomainError(DomainErrorKind::NonPositive, "grid point " + format_shortest(y) + " is not > 0");
        }
    }
    for (double l : lambdas) {
        const Lambda lambda(l);
        std::vector<double> column;
        column.reserve(table.grid.size());
        for (double y : table.grid) column.push_back(box_cox(lambda, y));
        table.lambdas.push_back(l);
        table.columns.push_back(std::move(column));
    }
    return table;
}

std::vector<double> uniform_grid(double lo, double hi, int points) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || lo <= 0.0 || !(lo < hi)) {
        throw DomainError(DomainErrorKind::OutOfRange, "grid range must satisfy 0 < lo < hi");
    }
    if (points < 2) throw DomainError(DomainErrorKind::OutOfRange, "grid needs at least 2 points");
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(points));
    const double last = points - 1;
    for (int i = 0; i < points; ++i) grid.push_back((lo * (last - i) + hi * i) / last);
    return grid;
}

std::vector<double> default_curve_lambdas() { return {0.0, 0.2, 0.5, 1.0}; }

std::vector<double> default_curve_grid() { return uniform_grid(0.01, 5.0, 500); }

void write_curve_csv(std::ostream& out, const CurveTable& table) {
    out << 'y';
    for (double l : table.lambdas) out << ",F_" << format_significant(l, 4);
    out << '\n';
    for (std::size_t j = 0; j < table.grid.size(); ++j) {
        out << format_shortest(table.grid[j]);
        for (const auto& column : table.columns) out << ',' << format_shortest(column[j]);
        out << '\n';
    }
}

}  // namespace changekit
