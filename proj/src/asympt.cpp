#include "hazvis/asympt.hpp"

#include <cmath>
#include <stdexcept>

#include "hazvis/quadrature.hpp"

namespace hazvis {

namespace {

double pointwise_mse(const AsymptoticSpec& spec, double x) {
    double value = 0.0;
    if (spec.include_bias) value += mu2(spec, x);
    if (spec.include_variance) value += sigma2(spec, x);
    return value;
}

template <class F>
double integrate_checked(F&& f, Interval d) {
    const QuadratureResult r = adaptive_simpson(f, d.lo, d.hi, kQuadratureTolerance, kQuadratureMaxIntervals);
    if (!std::isfinite(r.value)) throw std::domain_error("asymptotic integrand is not finite on the domain");
    return r.value;
}

}  // namespace

void validate(const AsymptoticSpec& spec) {
    if (spec.n == 0) throw std::invalid_argument("asymptotic spec needs n >= 1");
    if (!(spec.b.value > 0.0)) throw std::invalid_argument("asymptotic spec needs a positive bandwidth");
    if (!(spec.domain.lo >= 0.0) || !(spec.domain.hi > spec.domain.lo)) {
        throw std::invalid_argument("asymptotic domain must satisfy 0 <= lo < hi");
    }
    const double at_risk = spec.failure.survival(spec.domain.hi) * spec.censor.survival(spec.domain.hi);
    if (!(at_risk > 0.0)) throw std::invalid_argument("at-risk probability vanishes inside the domain");
}

double mu2(const AsymptoticSpec& spec, double x) {
    const double b2 = spec.b.value * spec.b.value;
    const double bias = 0.5 * b2 * spec.failure.hazard_d2(x) * spec.kernel.beta();
    return bias * bias;
}

double sigma2(const AsymptoticSpec& spec, double x) {
    const double at_risk = spec.failure.survival(x) * spec.censor.survival(x);
    if (!(at_risk > 0.0)) throw std::domain_error("sigma2: at-risk probability underflows at x");
    return spec.failure.hazard(x) * spec.kernel.alpha() /
           (static_cast<double>(spec.n) * spec.b.value * at_risk);
}

double mise_asymptotic(const AsymptoticSpec& spec) {
    validate(spec);
    return integrate_checked([&](double x) { return pointwise_mse(spec, x); }, spec.domain);
}

double bridge_weight(const LifetimeModel& failure, double x) {
    const double slope = failure.hazard_d1(x);
    return 1.0 / (1.0 + slope * slope);
}

double weighted_mise_asymptotic(const AsymptoticSpec& spec) {
    validate(spec);
    return integrate_checked(
        [&](double x) { return bridge_weight(spec.failure, x) * pointwise_mse(spec, x); }, spec.domain);
}

double dn_normalizer(const LifetimeModel& failure, double x0, double est_value, double true_value) {
    const double slope = failure.hazard_d1(x0);
    return std::abs(est_value - true_value) / std::sqrt(1.0 + slope * slope);
}

}  // namespace hazvis
