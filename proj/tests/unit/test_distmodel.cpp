#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "hazvis/distmodel.hpp"

using namespace hazvis;

namespace {

// Evaluation grid over the bulk of a model's mass (cdf <= 0.999).
std::vector<double> bulk_grid(const LifetimeModel& m, std::size_t points) {
    const double hi = std::min(m.quantile(0.999), std::isfinite(m.support_end()) ? m.support_end() : 1e300);
    std::vector<double> xs;
    for (std::size_t i = 1; i <= points; ++i) xs.push_back(hi * static_cast<double>(i) / static_cast<double>(points + 1));
    return xs;
}

// Bimodal cumulative hazard in closed form via erf.
double bimodal_cumhaz_erf(const BimodalParams& p, double x) {
    auto bump = [x](double a, double m, double s) {
        const double r = s * std::numbers::sqrt2;
        return a * s * std::sqrt(std::numbers::pi / 2.0) * (std::erf((x - m) / r) + std::erf(m / r));
    };
    return p.c0 * x + bump(p.a1, p.m1, p.s1) + bump(p.a2, p.m2, p.s2);
}

}  // namespace

TEST_CASE("cdf examples") {
    const auto expo = exponential(1.0);
    CHECK(expo.cdf(0.0) == 0.0);
    CHECK(expo.cdf(std::numbers::ln2) == doctest::Approx(0.5).epsilon(1e-15));
    // 1 - e^-1 evaluated at 30 digits: 0.632120558828557678404476229839
    CHECK(std::abs(weibull(2.0, 1.0).cdf(1.0) - 0.6321205588285576784) < 1e-15);
}

TEST_CASE("hazard examples") {
    const auto expo = exponential(2.0);
    for (const double x : {0.0, 0.3, 5.0}) {
        CHECK(expo.hazard(x) == 2.0);
        CHECK(expo.hazard_d1(x) == 0.0);
        CHECK(expo.hazard_d2(x) == 0.0);
    }
    CHECK(weibull(2.0, 1.0).hazard(0.5) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("hazard derivatives match central differences") {
    for (const auto& model : catalog()) {
        CAPTURE(model.name());
        for (const double x : bulk_grid(model, 400)) {
            // Step scaled by the local length scale h/h' (tiny near a finite endpoint).
            const double slope = std::abs(model.hazard_d1(x));
            const double scale = slope > 0.0 ? std::min(std::max(1.0, x), model.hazard(x) / slope) : std::max(1.0, x);
            const double step = 1e-4 * scale;
            const double fd1 = (model.hazard(x + step) - model.hazard(x - step)) / (2.0 * step);
            const double fd2 = (model.hazard_d1(x + step) - model.hazard_d1(x - step)) / (2.0 * step);
            CAPTURE(x);
            CHECK(std::abs(model.hazard_d1(x) - fd1) <= 1e-5 * std::max(1.0, std::abs(fd1)));
            CHECK(std::abs(model.hazard_d2(x) - fd2) <= 1e-5 * std::max(1.0, std::abs(fd2)));
        }
    }
}

TEST_CASE("catalog contents and consistency sweep") {
    const auto models = catalog();
    bool has_exponential = false;
    for (const auto& m : models) has_exponential = has_exponential || m.name() == "exponential";
    CHECK(has_exponential);

    for (const auto& model : models) {
        CAPTURE(model.name());
        double prev = 0.0;
        CHECK(model.cdf(0.0) == 0.0);
        for (const double x : bulk_grid(model, 200)) {
            const double f = model.pdf(x);
            const double cdf = model.cdf(x);
            CHECK(f >= 0.0);
            CHECK(cdf >= prev);
            CHECK(cdf <= 1.0);
            CHECK(std::abs(model.hazard(x) * (1.0 - cdf) - f) <= 1e-10 * std::max(1.0, f));
            prev = cdf;
        }
    }
}

TEST_CASE("bimodal hazard has two strict interior maxima") {
    const auto model = bimodal_hazard();
    const std::size_t points = 4000;
    std::vector<double> h;
    for (std::size_t i = 1; i < points; ++i) {
        h.push_back(model.hazard(model.support_end() * static_cast<double>(i) / static_cast<double>(points)));
    }
    int maxima = 0;
    for (std::size_t i = 1; i + 1 < h.size(); ++i) {
        if (h[i] > h[i - 1] && h[i] > h[i + 1]) ++maxima;
    }
    CHECK(maxima == 2);
}

TEST_CASE("bimodal tabulated cdf agrees with the erf closed form") {
    const BimodalParams p;
    const auto model = bimodal_hazard(p);
    for (const double x : {0.0005, 0.3, 1.0, 1.2345, 2.5, 3.999, 4.0, 4.7, 9.0}) {
        CAPTURE(x);
        CHECK(std::abs(model.cumulative_hazard(x) - bimodal_cumhaz_erf(p, x)) < 1e-12);
        CHECK(std::abs(model.cdf(x) - (1.0 - std::exp(-bimodal_cumhaz_erf(p, x)))) < 1e-12);
    }
}

TEST_CASE("hazard domain errors") {
    const auto u = uniform(2.0);
    CHECK(u.hazard(1.0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(u.hazard(2.0), std::domain_error);
    CHECK_THROWS_AS(u.hazard_d1(3.0), std::domain_error);
    CHECK_THROWS_AS(exponential(1.0).hazard(-0.1), std::domain_error);
    CHECK_THROWS_AS(exponential(1.0).quantile(1.0), std::domain_error);
}

TEST_CASE("make_model resolves names and rejects unknown input") {
    const auto w = make_model("weibull", {{"shape", 3.0}});
    CHECK(w.param("shape") == 3.0);
    CHECK(w.param("scale") == 1.0);
    CHECK(make_model("none").cdf(1e6) == 0.0);
    CHECK(make_model("bimodal", {{"m2", 2.0}}).param("m2") == 2.0);
    CHECK_THROWS_AS(make_model("gamma"), std::invalid_argument);
    CHECK_THROWS_AS(make_model("exponential", {{"lambda", 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_model("exponential", {{"rate", -1.0}}), std::invalid_argument);
}
