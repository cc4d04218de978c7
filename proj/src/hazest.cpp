#include "hazvis/hazest.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hazvis {

namespace {

// Window slack: observations just outside x -/+ b*hi are admitted and
// contribute exact zeros, so no rounding at the edge can drop a term.
constexpr double kWindowSlack = 1e-9;

struct Window {
    std::size_t begin;
    std::size_t end;
};

double kernel_term(const CensoredSample& s, const KernelSpec& kernel, double b, double x, std::size_t i) {
    const double w = static_cast<double>(s.delta()[i]) / static_cast<double>(s.size() - i);
    return w * kernel.value((x - s.x()[i]) / b) / b;
}

double kernel_d1_term(const CensoredSample& s, const KernelSpec& kernel, double b, double x, std::size_t i) {
    const double w = static_cast<double>(s.delta()[i]) / static_cast<double>(s.size() - i);
    return w * kernel.derivative((x - s.x()[i]) / b) / (b * b);
}

double reach(const KernelSpec& kernel, const Bandwidth& b) {
    return b.value * kernel.support_hi() * (1.0 + kWindowSlack);
}

Window window_at(const CensoredSample& s, double x, double radius) {
    const auto xs = s.x();
    const auto lo = std::lower_bound(xs.begin(), xs.end(), x - radius);
    const auto hi = std::upper_bound(lo, xs.end(), x + radius);
    return {static_cast<std::size_t>(lo - xs.begin()), static_cast<std::size_t>(hi - xs.begin())};
}

void check_bandwidth(const Bandwidth& b) {
    if (!(b.value > 0.0) || !std::isfinite(b.value)) throw std::invalid_argument("bandwidth must be positive");
}

}  // namespace

Bandwidth Bandwidth::fixed(double value) {
    Bandwidth b{value, value, std::nullopt};
    check_bandwidth(b);
    return b;
}

Bandwidth Bandwidth::from_schedule(double c0, std::size_t n) {
    if (!(c0 > 0.0)) throw std::invalid_argument("bandwidth constant must be positive");
    if (n == 0) throw std::invalid_argument("bandwidth schedule needs n >= 1");
    return {c0 * std::pow(static_cast<double>(n), -0.2), c0, n};
}

double estimate(const CensoredSample& sample, const KernelSpec& kernel, const Bandwidth& b, double x) {
    check_bandwidth(b);
    const Window w = window_at(sample, x, reach(kernel, b));
    double sum = 0.0;
    for (std::size_t i = w.begin; i < w.end; ++i) sum += kernel_term(sample, kernel, b.value, x, i);
    return sum;
}

double estimate_d1(const CensoredSample& sample, const KernelSpec& kernel, const Bandwidth& b, double x) {
    check_bandwidth(b);
    const Window w = window_at(sample, x, reach(kernel, b));
    double sum = 0.0;
    for (std::size_t i = w.begin; i < w.end; ++i) sum += kernel_d1_term(sample, kernel, b.value, x, i);
    return sum;
}

CurveGraph estimate_on_grid(const CensoredSample& sample, const KernelSpec& kernel, const Bandwidth& b,
                            std::span<const double> grid) {
    check_bandwidth(b);
    if (grid.empty()) throw std::invalid_argument("estimation grid is empty");
    for (std::size_t j = 1; j < grid.size(); ++j) {
        if (!(grid[j] > grid[j - 1])) throw std::invalid_argument("estimation grid must be strictly ascending");
    }
    const auto xs = sample.x();
    const std::size_t n = sample.size();
    const double radius = reach(kernel, b);
    std::vector<double> ys(grid.size());
    std::size_t lo = 0;
    std::size_t hi = 0;
    for (std::size_t j = 0; j < grid.size(); ++j) {
        const double x = grid[j];
        while (lo < n && xs[lo] < x - radius) ++lo;
        if (hi < lo) hi = lo;
        while (hi < n && xs[hi] <= x + radius) ++hi;
        double sum = 0.0;
        for (std::size_t i = lo; i < hi; ++i) sum += kernel_term(sample, kernel, b.value, x, i);
        ys[j] = sum;
    }
    return CurveGraph(std::vector<double>(grid.begin(), grid.end()), std::move(ys));
}

CurveGraph hazard_graph(const LifetimeModel& model, std::span<const double> grid) {
    return sample_curve([&](double x) { return model.hazard(x); }, grid);
}

double default_tau(const LifetimeModel& failure, const LifetimeModel& censor, double level) {
    if (!(level > 0.0 && level < 1.0)) throw std::invalid_argument("tau level must lie in (0, 1)");
    auto at_risk = [&](double x) { return failure.survival(x) * censor.survival(x); };
    double lo = 0.0;
    double hi = 1.0;
    while (at_risk(hi) > level) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e12) throw std::invalid_argument("at-risk probability never reaches the tau level");
    }
    for (int iter = 0; iter < 200 && hi - lo > 1e-14 * hi; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (at_risk(mid) > level) lo = mid; else hi = mid;
    }
    return 0.5 * (lo + hi);
}

Interval comparison_domain(double tau, const Bandwidth& b, const KernelSpec& kernel, bool include_boundary) {
    if (!(tau > 0.0)) throw std::invalid_argument("tau must be positive");
    if (include_boundary) return {0.0, tau};
    const double edge = b.value * kernel.support_hi();
    const Interval d{edge, tau - edge};
    if (!(d.hi > d.lo)) {
        throw std::invalid_argument("bandwidth too large: interior comparison domain is empty");
    }
    return d;
}

}  // namespace hazvis
