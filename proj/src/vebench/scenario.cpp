#include "hazvis/vebench/scenario.hpp"

#include <stdexcept>

#include "hazvis/curvedist.hpp"
#include "hazvis/sampler.hpp"

namespace hazvis::vebench {

RankingReport scenario_bimodal(const BimodalScenarioParams& params) {
    if (params.grid_points < 2) throw std::invalid_argument("scenario grid needs at least two points");
    const BimodalParams& truth = params.truth;
    BimodalParams shifted = truth;
    shifted.m2 += params.shift;
    BimodalParams smooth = truth;
    smooth.a2 = 0.0;
    smooth.s1 *= params.widen;

    const std::vector<double> grid = linspace(0.0, truth.support_end, params.grid_points);
    const CurveGraph g_truth = sample_curve([&](double x) { return bimodal_hazard_value(truth, x); }, grid);
    const CurveGraph g_shifted = sample_curve([&](double x) { return bimodal_hazard_value(shifted, x); }, grid);
    const CurveGraph g_smooth = sample_curve([&](double x) { return bimodal_hazard_value(smooth, x); }, grid);

    return {params.shift, lp(Norm::l2, g_shifted, g_truth), lp(Norm::l2, g_smooth, g_truth),
            se(Norm::l2, g_shifted, g_truth), se(Norm::l2, g_smooth, g_truth)};
}

std::optional<RankingReport> search_reversal_shift(std::uint64_t seed, std::size_t trials,
                                                   BimodalScenarioParams base) {
    StreamRng rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        base.shift = 0.2 + 0.3 * rng.uniform_open();
        const RankingReport report = scenario_bimodal(base);
        if (report.reversal()) return report;
    }
    return std::nullopt;
}

}  // namespace hazvis::vebench
