#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "changekit/indicator.hpp"

namespace changekit {

/// Truncation order n of the Taylor expansion of y -> F_lambda(x, y) around x.
/// n = 1 keeps only the linear term, which is f_lambda.
class TaylorOrder {
public:
    static constexpr int kMax = 64;

    explicit TaylorOrder(int n);

    [[nodiscard]] int value() const noexcept { return n_; }

private:
    int n_;
};

/// k-th Taylor coefficient (k >= 2) of y -> F_lambda(x, y) at y = x:
///
///   (-1)^(k+1) * (lambda)_(k-1) / (k! * x^(k+lambda-1))
///
/// where (lambda)_(k-1) = lambda (lambda+1) ... (lambda+k-2) is the rising
/// factorial standing in for Gamma(lambda+k-1)/Gamma(lambda). It is zero at
/// lambda = 0, so F_0 has no higher-order terms.
[[nodiscard]] double taylor_coefficient(Lambda lambda, int k, double x);

/// f_lambda(x, y) + sum_{k=2..n} coefficient_k * (y - x)^k.
///
/// Converges for |y - x| < x. Outside that radius the partial sums are
/// returned as-is; no error is raised.
[[nodiscard]] double taylor_F(Lambda lambda, const PositivePair& p, TaylorOrder order);

/// lambda * (y - x)^2 / min(x, y)^(1 + lambda), an upper bound on
/// |F_lambda - f_lambda|. Only asserted for lambda >= 0; negative lambda
/// throws DomainError(Negative).
[[nodiscard]] double remainder_bound(Lambda lambda, const PositivePair& p);

/// F_lambda(x, x+h) - f_lambda(x, x+h). O(h^2) as h -> 0.
[[nodiscard]] double linearization_residual(Lambda lambda, double x, double h);

/// F_lambda(1, y): the Box-Cox transform of y with parameter 1 - lambda.
[[nodiscard]] double box_cox(Lambda lambda, double y);

/// Values of y -> F_lambda(1, y) for several lambdas over a common grid.
struct CurveTable {
    std::vector<double> lambdas;
    std::vector<double> grid;
    std::vector<std::vector<double>> columns;  // columns[i][j] = F_{lambdas[i]}(1, grid[j])
};

[[nodiscard]] CurveTable curve_table(std::span<const double> lambdas, std::span<const double> grid);

/// `points` evenly spaced values from lo to hi inclusive; 0 < lo < hi, points >= 2.
[[nodiscard]] std::vector<double> uniform_grid(double lo, double hi, int points);

[[nodiscard]] std::vector<double> default_curve_lambdas();  // {0, 1/5, 1/2, 1}
[[nodiscard]] std::vector<double> default_curve_grid();     // 500 points on [0.01, 5]

/// CSV with header `y,F_<lambda>...`; lambdas in column names use up to 4
/// significant digits, values are written in shortest round-trip form.
void write_curve_csv(std::ostream& out, const CurveTable& table);

}  // namespace changekit
