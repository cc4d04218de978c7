#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "hazvis/hazest.hpp"

using namespace hazvis;

namespace {

double epanechnikov(double u) { return std::abs(u) < 1.0 ? 0.75 * (1.0 - u * u) : 0.0; }
double triweight(double u) {
    if (std::abs(u) >= 1.0) return 0.0;
    const double w = 1.0 - u * u;
    return 35.0 / 32.0 * w * w * w;
}

// Direct transcription of the estimator with 1-based ranks.
template <class K>
double naive_estimate(const CensoredSample& s, K kernel, double b, double x) {
    const double n = static_cast<double>(s.size());
    double sum = 0.0;
    for (std::size_t i = 1; i <= s.size(); ++i) {
        sum += s.delta()[i - 1] / (n - static_cast<double>(i) + 1.0) * kernel((x - s.x()[i - 1]) / b) / b;
    }
    return sum;
}

}  // namespace

TEST_CASE("two-point hand example") {
    const CensoredSample two({1.0, 2.0}, {1, 1});
    const double h = estimate(two, builtin_kernel("epanechnikov"), Bandwidth::fixed(1.0), 1.0);
    CHECK(std::abs(h - 0.375) < 1e-15);
    CHECK(std::abs(h - naive_estimate(two, epanechnikov, 1.0, 1.0)) < 1e-15);
}

TEST_CASE("estimator matches the naive sum on random samples") {
    const auto kernel = builtin_kernel("triweight");
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto sample = generate(weibull(2.0, 1.0), exponential(0.5), 300, seed);
        const auto b = Bandwidth::from_schedule(1.0, sample.size());
        for (int j = 0; j <= 100; ++j) {
            const double x = 2.0 * j / 100.0;
            const double want = naive_estimate(sample, triweight, b.value, x);
            CHECK(std::abs(estimate(sample, kernel, b, x) - want) <= 1e-12 * std::max(1.0, want));
        }
    }
}

TEST_CASE("grid evaluation is bit-identical to pointwise evaluation") {
    const auto kernel = builtin_kernel("biweight");
    const auto sample = generate(exponential(1.0), exponential(1.0), 200, 77);
    const auto b = Bandwidth::from_schedule(1.0, 200);
    const auto grid = linspace(0.0, 1.5, 512);
    const CurveGraph g = estimate_on_grid(sample, kernel, b, grid);
    bool identical = true;
    for (std::size_t i = 0; i < grid.size(); ++i) identical = identical && g.ys()[i] == estimate(sample, kernel, b, grid[i]);
    CHECK(identical);
    CHECK_THROWS_AS(estimate_on_grid(sample, kernel, b, std::vector<double>{}), std::invalid_argument);
    CHECK_THROWS_AS(estimate_on_grid(sample, kernel, b, std::vector<double>{1.0, 0.5}), std::invalid_argument);
}

TEST_CASE("derivative estimate matches central differences") {
    const auto kernel = builtin_kernel("triweight");
    const auto sample = generate(exponential(1.0), exponential(1.0), 400, 5);
    const auto b = Bandwidth::from_schedule(1.0, 400);
    for (int j = 1; j < 50; ++j) {
        const double x = 1.4 * j / 50.0;
        const double step = 1e-6;
        const double fd = (estimate(sample, kernel, b, x + step) - estimate(sample, kernel, b, x - step)) / (2 * step);
        CHECK(std::abs(estimate_d1(sample, kernel, b, x) - fd) <= 1e-5 * std::max(1.0, std::abs(fd)));
    }
}

TEST_CASE("scale equivariance") {
    const double s = 2.0;
    const auto kernel = builtin_kernel("epanechnikov");
    const auto sample = generate(weibull(2.0, 1.0), uniform(2.0), 250, 13);
    std::vector<double> scaled(sample.x().begin(), sample.x().end());
    for (double& v : scaled) v *= s;
    const CensoredSample stretched(scaled, {sample.delta().begin(), sample.delta().end()});
    const double b = 0.3;
    for (int j = 0; j <= 40; ++j) {
        const double x = 1.5 * j / 40.0;
        const double base = estimate(sample, kernel, Bandwidth::fixed(b), x);
        const double big = estimate(stretched, kernel, Bandwidth::fixed(s * b), s * x);
        CHECK(std::abs(big - base / s) <= 1e-12 * std::max(1.0, base));
    }
}

TEST_CASE("pointwise consistency for a constant hazard") {
    const auto kernel = builtin_kernel("triweight");
    const std::size_t n = 50000;
    const auto sample = generate(exponential(1.0), exponential(1.0), n, 2718);
    const auto b = Bandwidth::from_schedule(1.0, n);
    for (const double x : {0.4, 0.8, 1.2}) CHECK(std::abs(estimate(sample, kernel, b, x) - 1.0) < 0.1);
}

TEST_CASE("bandwidth schedule and validation") {
    const auto b = Bandwidth::from_schedule(2.0, 32);
    CHECK(b.value == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(b.n_ref.value() == 32);
    CHECK_THROWS_AS(Bandwidth::fixed(0.0), std::invalid_argument);
    CHECK_THROWS_AS(Bandwidth::from_schedule(-1.0, 10), std::invalid_argument);
}

TEST_CASE("default tau and comparison domain") {
    // S_F S_G = exp(-2x) = 0.05 at x = ln(20)/2.
    const double tau = default_tau(exponential(1.0), exponential(1.0));
    CHECK(std::abs(tau - 1.4978661367769954) < 1e-12);
    CHECK(default_tau(exponential(1.0), no_censoring()) == doctest::Approx(std::log(20.0)).epsilon(1e-13));

    const auto kernel = builtin_kernel("triweight");
    const auto d = comparison_domain(tau, Bandwidth::fixed(0.2), kernel);
    CHECK(d.lo == 0.2);
    CHECK(d.hi == doctest::Approx(tau - 0.2));
    const auto full = comparison_domain(tau, Bandwidth::fixed(0.2), kernel, true);
    CHECK(full.lo == 0.0);
    CHECK(full.hi == tau);
    CHECK_THROWS_AS(comparison_domain(tau, Bandwidth::fixed(1.0), kernel), std::invalid_argument);
}

TEST_CASE("truth graph samples the hazard") {
    const auto grid = linspace(0.0, 1.0, 11);
    const auto g = hazard_graph(weibull(2.0, 1.0), grid);
    for (std::size_t i = 0; i < grid.size(); ++i) CHECK(g.ys()[i] == doctest::Approx(2.0 * grid[i]));
}

TEST_CASE("pointwise mean squared error shrinks with n") {
    const auto kernel = builtin_kernel("triweight");
    const auto expo = exponential(1.0);
    double previous = 1e300;
    for (const std::size_t n : {100u, 400u, 1600u}) {
        const auto b = Bandwidth::from_schedule(1.0, n);
        double mse = 0.0;
        for (std::uint64_t r = 0; r < 500; ++r) {
            const double err = estimate(generate(expo, expo, n, split_seed(20240917, n, r)), kernel, b, 0.5) - 1.0;
            mse += err * err / 500.0;
        }
        CAPTURE(n);
        CHECK(mse < previous);
        previous = mse;
    }
}
