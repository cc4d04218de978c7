#include "hazvis/vebench/selftest.hpp"

#include <cmath>
#include <sstream>

#include "hazvis/asympt.hpp"
#include "hazvis/curvedist.hpp"
#include "hazvis/hazest.hpp"
#include "hazvis/kernelset.hpp"
#include "hazvis/quadrature.hpp"
#include "hazvis/sampler.hpp"
#include "hazvis/vebench/scenario.hpp"

namespace hazvis::vebench {

namespace {

std::string describe(double got, double want) {
    std::ostringstream out;
    out.precision(17);
    out << "got " << got << ", want " << want;
    return out.str();
}

CheckResult near(std::string name, double got, double want, double tol) {
    return {std::move(name), std::abs(got - want) <= tol, describe(got, want)};
}

}  // namespace

std::vector<CheckResult> run_selftest() {
    std::vector<CheckResult> out;

    for (const char* name : {"epanechnikov", "biweight", "triweight"}) {
        const KernelSpec k = builtin_kernel(name);
        const double alpha = adaptive_simpson([&](double u) { return k.value(u) * k.value(u); }, -1.0, 1.0, 1e-13).value;
        const double beta = adaptive_simpson([&](double u) { return u * u * k.value(u); }, -1.0, 1.0, 1e-13).value;
        const double mass = adaptive_simpson([&](double u) { return k.value(u); }, -1.0, 1.0, 1e-13).value;
        out.push_back(near(std::string(name) + " alpha", alpha, k.alpha(), 1e-10));
        out.push_back(near(std::string(name) + " beta", beta, k.beta(), 1e-10));
        out.push_back(near(std::string(name) + " mass", mass, 1.0, 1e-10));
    }

    const CensoredSample two({1.0, 2.0}, {1, 1});
    out.push_back(near("estimator hand example", estimate(two, builtin_kernel("epanechnikov"), Bandwidth::fixed(1.0), 1.0),
                       0.375, 1e-15));

    const CurveGraph flat({0.0, 10.0}, {1.0, 1.0});
    out.push_back(near("vertical drop", point_to_graph({5.0, 1.25}, flat), 0.25, 0.0));
    const CurveGraph diagonal({0.0, 2.0}, {0.0, 2.0});
    out.push_back(near("diagonal distance", point_to_graph({0.0, 1.0}, diagonal), std::sqrt(0.5), 1e-15));

    const LifetimeModel expo = exponential(1.0);
    const AsymptoticSpec spec{expo, expo, builtin_kernel("epanechnikov"), 100, Bandwidth::fixed(0.3), {0.0, 1.0}};
    out.push_back(near("exponential mise", mise_asymptotic(spec), 0.01 * std::expm1(2.0), 1e-9));
    out.push_back({"exponential weight is one", weighted_mise_asymptotic(spec) == mise_asymptotic(spec), ""});

    const LifetimeModel bimodal = bimodal_hazard();
    const double u = 0.5;
    out.push_back(near("bimodal inverse round trip", bimodal.cdf(inverse_transform(bimodal, u)), u, 1e-8));

    const RankingReport ranking = scenario_bimodal();
    std::ostringstream detail;
    detail << "L2 " << ranking.l2_shifted << " vs " << ranking.l2_oversmoothed << ", SE2 " << ranking.se2_shifted
           << " vs " << ranking.se2_oversmoothed;
    out.push_back({"bimodal ranking reversal", ranking.reversal(), detail.str()});
    return out;
}

}  // namespace hazvis::vebench
