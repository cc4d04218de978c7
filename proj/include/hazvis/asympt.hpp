#pragma once

// Leading-order MISE of the kernel hazard estimator and its weighted
// counterpart, the asymptotic target of E[VE2^2]:
//
//   mu^2(x)    = (b^2 / 2 * h''(x) * beta(K))^2
//   sigma^2(x) = h(x) alpha(K) / (n b (1 - F(x)) (1 - G(x)))
//   MISE       = int (mu^2 + sigma^2) dx
//   weighted   = int (mu^2 + sigma^2) / (1 + h'(x)^2) dx

#include <cstddef>

#include "hazvis/curvedist.hpp"
#include "hazvis/distmodel.hpp"
#include "hazvis/hazest.hpp"
#include "hazvis/kernelset.hpp"

namespace hazvis {

struct AsymptoticSpec {
    LifetimeModel failure;
    LifetimeModel censor;
    KernelSpec kernel;
    std::size_t n;
    Bandwidth b;
    Interval domain;
    // Test hooks; both terms enter the integrands by default.
    bool include_bias = true;
    bool include_variance = true;
};

/// Throws std::invalid_argument unless n >= 1, b > 0, 0 <= lo < hi and the
/// at-risk probability at hi is positive.
void validate(const AsymptoticSpec& spec);

double mu2(const AsymptoticSpec& spec, double x);

/// Throws std::domain_error where (1 - F(x)) (1 - G(x)) underflows to zero.
double sigma2(const AsymptoticSpec& spec, double x);

/// Adaptive Simpson over the domain, absolute tolerance 1e-9.
double mise_asymptotic(const AsymptoticSpec& spec);

/// w(x) = 1 / (1 + h'(x)^2).
double bridge_weight(const LifetimeModel& failure, double x);

double weighted_mise_asymptotic(const AsymptoticSpec& spec);

/// |est - truth| / sqrt(1 + h'(x0)^2), the value both point-to-graph
/// distances at x0 approach at rate n^(-2/5).
double dn_normalizer(const LifetimeModel& failure, double x0, double est_value, double true_value);

inline constexpr double kQuadratureTolerance = 1e-9;
inline constexpr std::size_t kQuadratureMaxIntervals = std::size_t{1} << 14;

}  // namespace hazvis
