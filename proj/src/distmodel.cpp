#include "hazvis/distmodel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace hazvis {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw std::invalid_argument(std::string(what) + " must be a positive finite number");
    }
}

class Exponential final : public detail::ModelImpl {
public:
    explicit Exponential(double rate)
        : ModelImpl("exponential", {{"rate", rate}}, kInf), rate_(rate) {}

    double cdf(double x) const override { return x <= 0.0 ? 0.0 : -std::expm1(-rate_ * x); }
    double survival(double x) const override { return x <= 0.0 ? 1.0 : std::exp(-rate_ * x); }
    double pdf(double x) const override { return x < 0.0 ? 0.0 : rate_ * std::exp(-rate_ * x); }
    double cumulative_hazard(double x) const override { return x <= 0.0 ? 0.0 : rate_ * x; }
    double hazard(double) const override { return rate_; }
    double hazard_d1(double) const override { return 0.0; }
    double hazard_d2(double) const override { return 0.0; }
    double quantile(double u) const override { return -std::log1p(-u) / rate_; }

private:
    double rate_;
};

class Weibull final : public detail::ModelImpl {
public:
    Weibull(double shape, double scale)
        : ModelImpl("weibull", {{"scale", scale}, {"shape", shape}}, kInf),
          k_(shape), lambda_(scale) {}

    double cdf(double x) const override { return x <= 0.0 ? 0.0 : -std::expm1(-cumulative_hazard(x)); }
    double survival(double x) const override { return std::exp(-cumulative_hazard(x)); }
    double pdf(double x) const override {
        if (x < 0.0) return 0.0;
        return hazard(x) * survival(x);
    }
    double cumulative_hazard(double x) const override {
        return x <= 0.0 ? 0.0 : std::pow(x / lambda_, k_);
    }
    double hazard(double x) const override { return term(k_, k_ - 1.0, x); }
    double hazard_d1(double x) const override { return term(k_ * (k_ - 1.0), k_ - 2.0, x) / lambda_; }
    double hazard_d2(double x) const override {
        return term(k_ * (k_ - 1.0) * (k_ - 2.0), k_ - 3.0, x) / (lambda_ * lambda_);
    }
    double quantile(double u) const override {
        return lambda_ * std::pow(-std::log1p(-u), 1.0 / k_);
    }

private:
    // coef / lambda * (x / lambda)^power, with an exactly zero coefficient
    // staying zero even where the power diverges at the origin.
    double term(double coef, double power, double x) const {
        if (coef == 0.0) return 0.0;
        return coef / lambda_ * std::pow(x / lambda_, power);
    }

    double k_;
    double lambda_;
};

class Uniform final : public detail::ModelImpl {
public:
    explicit Uniform(double theta) : ModelImpl("uniform", {{"theta", theta}}, theta), theta_(theta) {}

    double cdf(double x) const override { return std::clamp(x / theta_, 0.0, 1.0); }
    double survival(double x) const override { return std::clamp((theta_ - x) / theta_, 0.0, 1.0); }
    double pdf(double x) const override { return (x >= 0.0 && x < theta_) ? 1.0 / theta_ : 0.0; }
    double cumulative_hazard(double x) const override {
        if (x <= 0.0) return 0.0;
        if (x >= theta_) return kInf;
        return -std::log1p(-x / theta_);
    }
    double hazard(double x) const override { return 1.0 / (theta_ - x); }
    double hazard_d1(double x) const override {
        const double r = theta_ - x;
        return 1.0 / (r * r);
    }
    double hazard_d2(double x) const override {
        const double r = theta_ - x;
        return 2.0 / (r * r * r);
    }
    double quantile(double u) const override { return u * theta_; }

private:
    double theta_;
};

class NoCensoring final : public detail::ModelImpl {
public:
    NoCensoring() : ModelImpl("none", {}, kInf) {}

    double cdf(double) const override { return 0.0; }
    double survival(double) const override { return 1.0; }
    double pdf(double) const override { return 0.0; }
    double cumulative_hazard(double) const override { return 0.0; }
    double hazard(double) const override { return 0.0; }
    double hazard_d1(double) const override { return 0.0; }
    double hazard_d2(double) const override { return 0.0; }
    double quantile(double) const override { return kInf; }
};

// 5-point Gauss-Legendre on [-1, 1].
constexpr std::array<double, 5> kGlNodes{0.0, -0.5384693101056831, 0.5384693101056831,
                                         -0.9061798459386640, 0.9061798459386640};
constexpr std::array<double, 5> kGlWeights{0.5688888888888889, 0.4786286704993665,
                                           0.4786286704993665, 0.2369268850561891,
                                           0.2369268850561891};

class Bimodal final : public detail::ModelImpl {
public:
    static constexpr double kStep = 1e-3;
    static constexpr double kTailChunk = 0.05;

    explicit Bimodal(const BimodalParams& p)
        : ModelImpl("bimodal",
                    {{"a1", p.a1}, {"a2", p.a2}, {"c0", p.c0}, {"m1", p.m1}, {"m2", p.m2},
                     {"s1", p.s1}, {"s2", p.s2}, {"support_end", p.support_end}},
                    p.support_end),
          p_(p) {
        require_positive(p.c0, "bimodal c0");
        require_positive(p.s1, "bimodal s1");
        require_positive(p.s2, "bimodal s2");
        require_positive(p.support_end, "bimodal support_end");
        if (p.a1 < 0.0 || p.a2 < 0.0) throw std::invalid_argument("bimodal amplitudes must be >= 0");
        const auto cells = static_cast<std::size_t>(std::ceil(p.support_end / kStep));
        table_end_ = static_cast<double>(cells) * kStep;
        table_.resize(cells + 1);
        table_[0] = 0.0;
        for (std::size_t i = 0; i < cells; ++i) {
            const double a = static_cast<double>(i) * kStep;
            table_[i + 1] = table_[i] + integrate(a, a + kStep);
        }
    }

    double cdf(double x) const override { return x <= 0.0 ? 0.0 : -std::expm1(-cumulative_hazard(x)); }
    double survival(double x) const override { return std::exp(-cumulative_hazard(x)); }
    double pdf(double x) const override { return x < 0.0 ? 0.0 : hazard(x) * survival(x); }

    double cumulative_hazard(double x) const override {
        if (x <= 0.0) return 0.0;
        if (x <= table_end_) {
            const auto i = std::min(static_cast<std::size_t>(x / kStep), table_.size() - 2);
            const double a = static_cast<double>(i) * kStep;
            return table_[i] + integrate(a, x);
        }
        double total = table_.back();
        double a = table_end_;
        while (x - a > kTailChunk) {
            total += integrate(a, a + kTailChunk);
            a += kTailChunk;
        }
        return total + integrate(a, x);
    }

    double hazard(double x) const override { return bimodal_hazard_value(p_, x); }

    double hazard_d1(double x) const override {
        return bump_d1(p_.a1, p_.m1, p_.s1, x) + bump_d1(p_.a2, p_.m2, p_.s2, x);
    }
    double hazard_d2(double x) const override {
        return bump_d2(p_.a1, p_.m1, p_.s1, x) + bump_d2(p_.a2, p_.m2, p_.s2, x);
    }

    double quantile(double u) const override {
        const double target = -std::log1p(-u);
        double lo = 0.0;
        double hi = 0.0;
        double guess = 0.0;
        if (target <= table_.back()) {
            const auto it = std::upper_bound(table_.begin(), table_.end(), target);
            const auto i = static_cast<std::size_t>(std::distance(table_.begin(), it)) - 1;
            lo = static_cast<double>(i) * kStep;
            hi = std::min(lo + kStep, table_end_);
            const double span = table_[i + 1] - table_[i];
            guess = lo + (span > 0.0 ? (target - table_[i]) / span : 0.5) * (hi - lo);
        } else {
            // h >= c0 bounds the remaining distance.
            lo = table_end_;
            hi = table_end_ + (target - table_.back()) / p_.c0 + kStep;
            guess = lo + (target - table_.back()) / hazard(lo);
            if (guess >= hi) guess = 0.5 * (lo + hi);
        }
        // Safeguarded Newton on H(x) - target, H' = h > 0.
        double x = guess;
        for (int iter = 0; iter < 100; ++iter) {
            const double f = cumulative_hazard(x) - target;
            if (f == 0.0) return x;
            if (f > 0.0) hi = x; else lo = x;
            double next = x - f / hazard(x);
            if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
            if (std::abs(next - x) <= 1e-15 * std::max(1.0, x)) return next;
            x = next;
        }
        return x;
    }

private:
    static double bump_d1(double a, double m, double s, double x) {
        const double u = (x - m) / s;
        return -a * u / s * std::exp(-0.5 * u * u);
    }
    static double bump_d2(double a, double m, double s, double x) {
        const double u = (x - m) / s;
        return a * (u * u - 1.0) / (s * s) * std::exp(-0.5 * u * u);
    }

    double integrate(double a, double b) const {
        const double half = 0.5 * (b - a);
        const double mid = 0.5 * (a + b);
        double sum = 0.0;
        for (std::size_t k = 0; k < kGlNodes.size(); ++k) {
            sum += kGlWeights[k] * hazard(mid + half * kGlNodes[k]);
        }
        return sum * half;
    }

    BimodalParams p_;
    double table_end_ = 0.0;
    std::vector<double> table_;
};

double take(ParamMap& params, std::string_view key, double fallback) {
    const auto it = params.find(key);
    if (it == params.end()) return fallback;
    const double v = it->second;
    params.erase(it);
    return v;
}

}  // namespace

double bimodal_hazard_value(const BimodalParams& p, double x) {
    const double u1 = (x - p.m1) / p.s1;
    const double u2 = (x - p.m2) / p.s2;
    return p.c0 + p.a1 * std::exp(-0.5 * u1 * u1) + p.a2 * std::exp(-0.5 * u2 * u2);
}

LifetimeModel::LifetimeModel(std::shared_ptr<const detail::ModelImpl> impl) : impl_(std::move(impl)) {
    if (!impl_) throw std::invalid_argument("LifetimeModel requires an implementation");
}

double LifetimeModel::param(std::string_view key) const {
    const auto it = impl_->params().find(key);
    if (it == impl_->params().end()) {
        throw std::out_of_range(name() + " has no parameter '" + std::string(key) + "'");
    }
    return it->second;
}

double LifetimeModel::cdf(double x) const { return impl_->cdf(x); }
double LifetimeModel::survival(double x) const { return impl_->survival(x); }
double LifetimeModel::pdf(double x) const { return impl_->pdf(x); }
double LifetimeModel::cumulative_hazard(double x) const { return impl_->cumulative_hazard(x); }

void LifetimeModel::check_hazard_domain(double x) const {
    if (!(x >= 0.0)) throw std::domain_error("hazard requires x >= 0");
    if (!(impl_->survival(x) > 0.0)) {
        throw std::domain_error(name() + " hazard undefined where cdf(x) = 1");
    }
}

double LifetimeModel::hazard(double x) const {
    check_hazard_domain(x);
    return impl_->hazard(x);
}

double LifetimeModel::hazard_d1(double x) const {
    check_hazard_domain(x);
    return impl_->hazard_d1(x);
}

double LifetimeModel::hazard_d2(double x) const {
    check_hazard_domain(x);
    return impl_->hazard_d2(x);
}

double LifetimeModel::quantile(double u) const {
    if (!(u > 0.0 && u < 1.0)) throw std::domain_error("quantile requires 0 < u < 1");
    return impl_->quantile(u);
}

LifetimeModel exponential(double rate) {
    require_positive(rate, "exponential rate");
    return LifetimeModel(std::make_shared<Exponential>(rate));
}

LifetimeModel weibull(double shape, double scale) {
    require_positive(shape, "weibull shape");
    require_positive(scale, "weibull scale");
    return LifetimeModel(std::make_shared<Weibull>(shape, scale));
}

LifetimeModel uniform(double theta) {
    require_positive(theta, "uniform theta");
    return LifetimeModel(std::make_shared<Uniform>(theta));
}

LifetimeModel bimodal_hazard(const BimodalParams& params) {
    return LifetimeModel(std::make_shared<Bimodal>(params));
}

LifetimeModel no_censoring() { return LifetimeModel(std::make_shared<NoCensoring>()); }

LifetimeModel make_model(std::string_view name, const ParamMap& params) {
    ParamMap rest = params;
    LifetimeModel model = [&] {
        if (name == "exponential") return exponential(take(rest, "rate", 1.0));
        if (name == "weibull") {
            const double shape = take(rest, "shape", 2.0);
            return weibull(shape, take(rest, "scale", 1.0));
        }
        if (name == "uniform") return uniform(take(rest, "theta", 1.0));
        if (name == "none") return no_censoring();
        if (name == "bimodal") {
            BimodalParams p;
            p.c0 = take(rest, "c0", p.c0);
            p.a1 = take(rest, "a1", p.a1);
            p.m1 = take(rest, "m1", p.m1);
            p.s1 = take(rest, "s1", p.s1);
            p.a2 = take(rest, "a2", p.a2);
            p.m2 = take(rest, "m2", p.m2);
            p.s2 = take(rest, "s2", p.s2);
            p.support_end = take(rest, "support_end", p.support_end);
            return bimodal_hazard(p);
        }
        throw std::invalid_argument("unknown lifetime model '" + std::string(name) + "'");
    }();
    if (!rest.empty()) {
        throw std::invalid_argument("unknown parameter '" + rest.begin()->first + "' for model '" +
                                    std::string(name) + "'");
    }
    return model;
}

std::vector<LifetimeModel> catalog() {
    return {exponential(1.0), weibull(2.0, 1.0), weibull(3.0, 1.0), uniform(2.0), bimodal_hazard()};
}

}  // namespace hazvis
