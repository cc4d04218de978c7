#pragma once

// Fixed-bandwidth kernel hazard estimator
//
//   h_hat(x) = sum_i delta(i) / (n - i + 1) * (1/b) * K((x - X(i)) / b)
//
// over a CensoredSample in order-statistic form, plus its x-derivative.

#include <cstddef>
#include <optional>
#include <span>

#include "hazvis/curve_graph.hpp"
#include "hazvis/curvedist.hpp"
#include "hazvis/distmodel.hpp"
#include "hazvis/kernelset.hpp"
#include "hazvis/sampler.hpp"

namespace hazvis {

struct Bandwidth {
    double value;
    double c0;
    std::optional<std::size_t> n_ref;

    static Bandwidth fixed(double value);
    /// value = c0 * n^(-1/5).
    static Bandwidth from_schedule(double c0, std::size_t n);
};

double estimate(const CensoredSample& sample, const KernelSpec& kernel, const Bandwidth& b, double x);

double estimate_d1(const CensoredSample& sample, const KernelSpec& kernel, const Bandwidth& b, double x);

/// Estimate at every grid point using a sliding window over the sorted
/// observations. Summation order matches the full defining sum, so values
/// are bit-identical to it. Throws std::invalid_argument on an unsorted grid.
CurveGraph estimate_on_grid(const CensoredSample& sample, const KernelSpec& kernel, const Bandwidth& b,
                            std::span<const double> grid);

/// The true hazard sampled on a grid.
CurveGraph hazard_graph(const LifetimeModel& model, std::span<const double> grid);

/// Point tau where (1 - F(tau)) (1 - G(tau)) = level, found by bisection.
double default_tau(const LifetimeModel& failure, const LifetimeModel& censor, double level = 0.05);

/// [b * hi, tau - b * hi] by default, or [0, tau] with the boundary region
/// included. Throws std::invalid_argument when the interior range is empty.
Interval comparison_domain(double tau, const Bandwidth& b, const KernelSpec& kernel,
                           bool include_boundary = false);

inline constexpr std::size_t kDefaultGridPoints = 512;

}  // namespace hazvis
