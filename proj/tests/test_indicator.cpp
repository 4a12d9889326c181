#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "changekit/indicator.hpp"
#include "oracles.hpp"

using namespace changekit;
using doctest::Approx;

namespace {

DomainErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const DomainError& e) {
        return e.kind();
    }
    FAIL("expected DomainError");
    return DomainErrorKind::OutOfRange;
}

// Pair with |ln(y/x)| >= 0.01 so that y - x carries most of its bits.
PositivePair separated_pair(oracle::Sampler& s, double lo, double hi) {
    for (;;) {
        const double x = s.log_uniform(lo, hi);
        const double y = s.log_uniform(lo, hi);
        if (std::abs(std::log(y / x)) >= 0.01) return {x, y};
    }
}

}  // namespace

TEST_CASE("types reject values outside their domain") {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double inf = std::numeric_limits<double>::infinity();
    CHECK(kind_of([&] { (void)Lambda(nan); }) == DomainErrorKind::NonFinite);
    CHECK(kind_of([&] { (void)Lambda(-inf); }) == DomainErrorKind::NonFinite);
    CHECK(Lambda(-3.5).value() == -3.5);

    CHECK(kind_of([] { (void)PositivePair(0.0, 1.0); }) == DomainErrorKind::NonPositive);
    CHECK(kind_of([] { (void)PositivePair(1.0, 0.0); }) == DomainErrorKind::NonPositive);
    CHECK(kind_of([] { (void)PositivePair(-1.0, 2.0); }) == DomainErrorKind::NonPositive);
    CHECK(kind_of([&] { (void)PositivePair(1.0, inf); }) == DomainErrorKind::NonFinite);
}

TEST_CASE("abs, rel and log-ratio") {
    CHECK(abs_change({10, 20}) == 10.0);
    CHECK(abs_change({500, 570}) == 70.0);
    CHECK(abs_change({3.7, 3.7}) == 0.0);

    CHECK(rel_change({10, 20}) == 1.0);
    CHECK(rel_change({80, 135}) == 0.6875);
    CHECK(rel_change({3.7, 3.7}) == 0.0);

    CHECK(log_ratio({1.0, std::numbers::e}) == Approx(1.0).epsilon(1e-15));
    CHECK(log_ratio({3.7, 3.7}) == 0.0);
    CHECK(log_ratio({2, 4}) == Approx(0.6931471805599453).epsilon(1e-15));
    CHECK(log_ratio({2, 4}) == -log_ratio({4, 2}));
}

TEST_CASE("log-ratio stays finite and signed at extreme ratios") {
    CHECK(log_ratio({1e-300, 1e300}) == Approx(600 * std::log(10.0)).epsilon(1e-14));
    const double x = 1000.0;
    const double next = std::nextafter(x, 2000.0);
    CHECK(log_ratio({x, next}) > 0.0);
    CHECK(log_ratio({next, x}) < 0.0);
}

TEST_CASE("eval_f reproduces the sales-channel table") {
    const Lambda half(0.5);
    CHECK(std::abs(eval_f(half, {10, 20}) - 3.16) <= 0.005);
    CHECK(std::abs(eval_f(half, {500, 570}) - 3.13) <= 0.005);
    CHECK(std::abs(eval_f(half, {140, 210}) - 5.92) <= 0.005);
    CHECK(std::abs(eval_f(half, {35, 70}) - 5.92) <= 0.005);
    CHECK(std::abs(eval_f(half, {80, 135}) - 6.15) <= 0.005);
    // 40-digit reference values
    CHECK(eval_f(half, {10, 20}) == Approx(3.1622776601683793320).epsilon(1e-15));
    CHECK(eval_f(half, {80, 135}) == Approx(6.1491869381244216651).epsilon(1e-15));
    CHECK(eval_f(Lambda(1), {2, 4}) == 1.0);
}

TEST_CASE("eval_f and eval_F hit their endpoints bitwise") {
    oracle::Sampler s(11);
    for (int i = 0; i < 10000; ++i) {
        const PositivePair p(s.log_uniform(1e-6, 1e6), s.log_uniform(1e-6, 1e6));
        REQUIRE(eval_f(Lambda(0), p) == abs_change(p));
        REQUIRE(eval_f(Lambda(1), p) == rel_change(p));
        REQUIRE(eval_F(Lambda(0), p) == abs_change(p));
        REQUIRE(eval_F(Lambda(1), p) == log_ratio(p));
    }
}

TEST_CASE("eval_F examples") {
    CHECK(eval_F(Lambda(1), {1, std::numbers::e}) == Approx(1.0).epsilon(1e-15));
    CHECK(eval_F(Lambda(0.5), {1, 4}) == Approx(2.0).epsilon(1e-15));
    CHECK(eval_F(Lambda(0), {10, 20}) == 10.0);
    CHECK(eval_F(Lambda(0.5), {4, 5}) == Approx(0.47213595499957939282).epsilon(1e-15));
    CHECK(eval_F(Lambda(0.2), {1, 3}) == Approx(1.7602808566008650456).epsilon(1e-14));
    CHECK(eval_F(Lambda(-1), {2, 3}) == Approx(2.5).epsilon(1e-15));
    CHECK(eval_F(Lambda(2), {2, 3}) == Approx(1.0 / 6.0).epsilon(1e-15));
}

TEST_CASE("eval_F matches the integral of t^-lambda") {
    oracle::Sampler s(12);
    for (int i = 0; i < 500; ++i) {
        const double lambda = s.uniform(-2.0, 3.0);
        const PositivePair p(s.log_uniform(1e-3, 1e3), s.log_uniform(1e-3, 1e3));
        const auto expected = static_cast<double>(oracle::quadrature_F(lambda, p.x(), p.y()));
        INFO("lambda=" << lambda << " x=" << p.x() << " y=" << p.y());
        REQUIRE(oracle::relative_error(eval_F(Lambda(lambda), p), expected) <= 1e-12);
    }
}

TEST_CASE("eval_F is continuous across lambda = 1") {
    const PositivePair p(2, 5);
    const double log_value = std::log(2.5);
    for (double offset : {1e-15, 1e-14, 1e-12, 1e-10, 1e-8, 1e-6}) {
        for (double lambda : {1.0 - offset, 1.0 + offset}) {
            const double v = eval_F(Lambda(lambda), p);
            REQUIRE(std::isfinite(v));
            // First-order deviation is (1 - lambda)(ln^2 5 - ln^2 2)/2.
            const double first_order = (1.0 - lambda) * (std::pow(std::log(5.0), 2) - std::pow(std::log(2.0), 2)) / 2;
            CHECK(std::abs(v - log_value - first_order) <= 1e-15 + offset * offset * 2);
        }
    }
    // Closest representable neighbours of 1.
    CHECK(std::isfinite(eval_F(Lambda(std::nextafter(1.0, 0.0)), p)));
    CHECK(std::isfinite(eval_F(Lambda(std::nextafter(1.0, 2.0)), p)));
}

TEST_CASE("sign of f and F follows y - x") {
    oracle::Sampler s(13);
    for (int i = 0; i < 10000; ++i) {
        const double lambda = s.uniform(-2.0, 3.0);
        const double x = s.log_uniform(1e-3, 1e3);
        const double y = (i % 10 == 0) ? x : s.log_uniform(1e-3, 1e3);
        const PositivePair p(x, y);
        const int expected = (y > x) - (y < x);
        const double fv = eval_f(Lambda(lambda), p);
        const double Fv = eval_F(Lambda(lambda), p);
        REQUIRE(((fv > 0) - (fv < 0)) == expected);
        REQUIRE(((Fv > 0) - (Fv < 0)) == expected);
    }
}

TEST_CASE("f satisfies relative scaling invariance") {
    oracle::Sampler s(14);
    for (int i = 0; i < 10000; ++i) {
        const Lambda lambda(s.uniform(-2.0, 3.0));
        const double x = s.log_uniform(1e-3, 1e3), y = s.log_uniform(1e-3, 1e3);
        const double xb = s.log_uniform(1e-3, 1e3), yb = s.log_uniform(1e-3, 1e3);
        const double c = s.log_uniform(1e-3, 1e3);
        const double lhs = eval_f(lambda, {x, y}) * eval_f(lambda, {c * xb, c * yb});
        const double rhs = eval_f(lambda, {xb, yb}) * eval_f(lambda, {c * x, c * y});
        REQUIRE(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(lhs)));
    }
}

TEST_CASE("f scales by C^(1-lambda)") {
    oracle::Sampler s(15);
    for (int i = 0; i < 10000; ++i) {
        const double lambda = s.uniform(-2.0, 3.0);
        const PositivePair p = separated_pair(s, 1e-3, 1e3);
        const double c = s.log_uniform(1e-3, 1e3);
        const double scaled = eval_f(Lambda(lambda), {c * p.x(), c * p.y()});
        const double expected = std::pow(c, 1.0 - lambda) * eval_f(Lambda(lambda), p);
        REQUIRE(oracle::relative_error(scaled, expected) <= 1e-12);
    }
}

TEST_CASE("f is affine in the present value") {
    oracle::Sampler s(16);
    for (int i = 0; i < 10000; ++i) {
        const Lambda lambda(s.uniform(-2.0, 3.0));
        const double x = s.log_uniform(1e-2, 1e2);
        const double y1 = x * s.log_uniform(0.01, 100.0);
        const double y2 = x * s.log_uniform(0.01, 100.0);
        if (std::abs(std::log(y1 / x)) < 0.01 || std::abs(std::log(y2 / x)) < 0.01) continue;
        const double t = s.uniform(0.0, 1.0);
        const double mixed = (1 - t) * y1 + t * y2;
        if (std::abs(std::log(mixed / x)) < 0.01) continue;
        const double a = eval_f(lambda, {x, mixed});
        const double b = (1 - t) * eval_f(lambda, {x, y1}) + t * eval_f(lambda, {x, y2});
        const double scale = std::max({std::abs(a), std::abs(eval_f(lambda, {x, y1})), std::abs(eval_f(lambda, {x, y2}))});
        REQUIRE(std::abs(a - b) <= 1e-12 * scale);
    }
}

TEST_CASE("f is strictly increasing in the present value") {
    oracle::Sampler s(17);
    for (int trial = 0; trial < 200; ++trial) {
        const Lambda lambda(s.uniform(-2.0, 3.0));
        const double x = s.log_uniform(1e-3, 1e3);
        std::vector<double> ys(50);
        for (double& y : ys) y = s.log_uniform(1e-3, 1e3);
        std::sort(ys.begin(), ys.end());
        ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
        for (std::size_t i = 1; i < ys.size(); ++i) {
            REQUIRE(eval_f(lambda, {x, ys[i - 1]}) < eval_f(lambda, {x, ys[i]}));
        }
    }
}

TEST_CASE("Cobb-Douglas form") {
    CHECK(std::abs(cobb_douglas_f(Lambda(0.5), {10, 20}) - 3.16) <= 0.005);
    CHECK(cobb_douglas_f(Lambda(0), {35, 70}) == 35.0);
    CHECK(cobb_douglas_f(Lambda(1), {140, 210}) == 0.5);
    CHECK(cobb_douglas_f(Lambda(1.0 / 3.0), {7, 11}) == Approx(2.091031834298840867).epsilon(1e-14));

    CHECK(kind_of([] { (void)cobb_douglas_f(Lambda(0.5), {20, 10}); }) == DomainErrorKind::GrowthOnly);
    CHECK(kind_of([] { (void)cobb_douglas_f(Lambda(0.5), {20, 20}); }) == DomainErrorKind::GrowthOnly);

    SUBCASE("agrees with eval_f on growth to a few ulp") {
        oracle::Sampler s(18);
        double worst = 0.0;
        for (int i = 0; i < 10000; ++i) {
            const Lambda lambda(s.uniform(0.0, 1.0));
            const double x = s.log_uniform(1e-3, 1e3);
            const double y = x * s.log_uniform(1.01, 100.0);
            worst = std::max(worst, oracle::relative_error(cobb_douglas_f(lambda, {x, y}), eval_f(lambda, {x, y})));
        }
        CHECK(worst <= 4 * 2 * std::numeric_limits<double>::epsilon());
    }
}

TEST_CASE("quantity indicator") {
    CHECK(quantity_indicator(Lambda(0), 5, 3) == 3.0);
    CHECK(quantity_indicator(Lambda(1), 5, 3) == 0.6);
    CHECK(quantity_indicator(Lambda(0.5), 4, 6) == Approx(3.0).epsilon(1e-15));
    CHECK(quantity_indicator(Lambda(0.5), 4, 0) == 0.0);
    CHECK(kind_of([] { (void)quantity_indicator(Lambda(0.5), 0, 1); }) == DomainErrorKind::NonPositive);
    CHECK(kind_of([] { (void)quantity_indicator(Lambda(0.5), 1, -1); }) == DomainErrorKind::Negative);
}

TEST_CASE("relative comparison") {
    const Lambda half(0.5);
    CHECK(relative_comparison(half, {10, 20}, {80, 135}) == Approx(1.9445436482630056921).epsilon(1e-14));
    CHECK(relative_comparison(Lambda(1.7), {3, 9}, {3, 9}) == 1.0);
    CHECK(relative_comparison(half, {140, 210}, {35, 70}) == Approx(1.0).epsilon(1e-14));
    CHECK(kind_of([] { (void)relative_comparison(Lambda(0.5), {4, 4}, {1, 2}); }) ==
          DomainErrorKind::StagnantPair);

    SUBCASE("invariant under a common change of unit") {
        oracle::Sampler s(19);
        for (int i = 0; i < 5000; ++i) {
            const Lambda lambda(s.uniform(-2.0, 3.0));
            const PositivePair a = separated_pair(s, 1e-3, 1e3);
            const PositivePair b = separated_pair(s, 1e-3, 1e3);
            const double c = s.log_uniform(1e-3, 1e3);
            const double base = relative_comparison(lambda, a, b);
            const double scaled = relative_comparison(lambda, {c * a.x(), c * a.y()}, {c * b.x(), c * b.y()});
            REQUIRE(oracle::relative_error(scaled, base) <= 1e-12);
        }
    }
}
