#pragma once

#include <cstdint>
#include <optional>

#include "hazvis/distmodel.hpp"

namespace hazvis::vebench {

/// Constructed two-estimate comparison against the default bimodal hazard:
///   shifted-peak: the truth with its second bump moved right by `shift`;
///   oversmoothed: the truth without its second bump, first bump widened
///                 by `widen` (s1 -> widen * s1).
struct BimodalScenarioParams {
    // Frozen from search_reversal_shift(seed = 1).
    double shift = 0.4734074143733531;
    double widen = 1.2;
    std::size_t grid_points = 1024;
    BimodalParams truth{};
};

struct RankingReport {
    double shift;
    double l2_shifted;
    double l2_oversmoothed;
    double se2_shifted;
    double se2_oversmoothed;

    /// L2 prefers the oversmoothed curve while SE2 prefers the shifted one.
    bool reversal() const noexcept {
        return l2_shifted > l2_oversmoothed && se2_shifted < se2_oversmoothed;
    }
};

RankingReport scenario_bimodal(const BimodalScenarioParams& params = {});

/// Draws shifts uniformly from [0.2, 0.5] and returns the first whose
/// construction shows the reversal, if any within `trials` draws.
std::optional<RankingReport> search_reversal_shift(std::uint64_t seed, std::size_t trials = 64,
                                                   BimodalScenarioParams base = {});

}  // namespace hazvis::vebench
