#pragma once

// Failure-time and censoring-time models with exact truth functions.
//
// A LifetimeModel is an immutable handle; copies share one implementation
// object and may be evaluated from any number of threads.

#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace hazvis {

using ParamMap = std::map<std::string, double, std::less<>>;

namespace detail {

class ModelImpl {
public:
    ModelImpl(std::string name, ParamMap params, double support_end)
        : name_(std::move(name)), params_(std::move(params)), support_end_(support_end) {}
    virtual ~ModelImpl() = default;

    virtual double cdf(double x) const = 0;
    virtual double survival(double x) const = 0;
    virtual double pdf(double x) const = 0;
    virtual double cumulative_hazard(double x) const = 0;
    // Callers guarantee survival(x) > 0.
    virtual double hazard(double x) const = 0;
    virtual double hazard_d1(double x) const = 0;
    virtual double hazard_d2(double x) const = 0;
    virtual double quantile(double u) const = 0;

    const std::string& name() const noexcept { return name_; }
    const ParamMap& params() const noexcept { return params_; }
    double support_end() const noexcept { return support_end_; }

private:
    std::string name_;
    ParamMap params_;
    double support_end_;
};

}  // namespace detail

/// A named lifetime distribution exposing F, f, S = 1 - F, the hazard
/// h = f / S and the closed-form derivatives h', h''.
///
/// `support_end()` is the right end of the range the model is meant to be
/// evaluated over: the support end for bounded distributions, +inf for the
/// closed-form unbounded ones, and the tabulation range for the bimodal
/// hazard model (whose cdf is still defined beyond it).
class LifetimeModel {
public:
    explicit LifetimeModel(std::shared_ptr<const detail::ModelImpl> impl);

    const std::string& name() const noexcept { return impl_->name(); }
    const ParamMap& params() const noexcept { return impl_->params(); }
    double param(std::string_view key) const;
    double support_end() const noexcept { return impl_->support_end(); }

    /// F(x); 0 for x <= 0.
    double cdf(double x) const;
    /// 1 - F(x), evaluated without cancellation where the model allows it.
    double survival(double x) const;
    double pdf(double x) const;
    double cumulative_hazard(double x) const;

    /// Throw std::domain_error when x < 0 or F(x) = 1.
    double hazard(double x) const;
    double hazard_d1(double x) const;
    double hazard_d2(double x) const;

    /// F^{-1}(u) for u in (0, 1); +inf for the degenerate no-censoring model.
    double quantile(double u) const;

private:
    void check_hazard_domain(double x) const;

    std::shared_ptr<const detail::ModelImpl> impl_;
};

struct BimodalParams {
    double c0 = 0.2;
    double a1 = 1.0;
    double m1 = 1.0;
    double s1 = 0.25;
    double a2 = 0.6;
    double m2 = 2.5;
    double s2 = 0.25;
    double support_end = 4.0;
};

/// h(x) = c0 + a1 * bump((x - m1) / s1) + a2 * bump((x - m2) / s2) with
/// bump(u) = exp(-u^2 / 2). Shared by the model and by constructed curves.
double bimodal_hazard_value(const BimodalParams& p, double x);

LifetimeModel exponential(double rate);
LifetimeModel weibull(double shape, double scale);
/// Uniform(0, theta); mostly used as a censoring distribution.
LifetimeModel uniform(double theta);
LifetimeModel bimodal_hazard(const BimodalParams& params = {});
/// Point mass at +inf: every observation is an uncensored failure.
LifetimeModel no_censoring();

/// Resolve a model by name. Parameters not given take the model's defaults;
/// unknown names or parameter keys throw std::invalid_argument.
///   exponential: rate (1)         weibull: shape (2), scale (1)
///   uniform: theta (1)            none: -
///   bimodal: c0, a1, m1, s1, a2, m2, s2, support_end (BimodalParams defaults)
LifetimeModel make_model(std::string_view name, const ParamMap& params = {});

/// Default-parameterized instances of every non-degenerate model family.
std::vector<LifetimeModel> catalog();

}  // namespace hazvis
