#pragma once

// Vertical (Lp) and planar (visual error) discrepancies between two graphs.
//
// Planar criteria integrate d(p, G) = min over polyline segments of the
// Euclidean point-to-segment distance, sampled at the source graph's own
// vertices inside the x-overlap of the two graphs (composite trapezoid).
// Vertical criteria resample both graphs onto the union of their grids.

#include <cstddef>
#include <vector>

#include "hazvis/curve_graph.hpp"

namespace hazvis {

enum class Norm { l1, l2, linf };

enum class Direction {
    est_to_truth,  // points of the estimate's graph measured against the truth's graph
    truth_to_est,
};

struct Interval {
    double lo;
    double hi;
};

double point_to_segment(Point p, Point a, Point b) noexcept;

/// Exact distance from p to the polyline of g.
double point_to_graph(Point p, const CurveGraph& g);

/// Nearest-segment search over one graph for query points of ascending x.
/// The candidate window grows outward from the segment under the query
/// until the horizontal gap to the next x-slab exceeds the best distance,
/// so the result always equals the exhaustive minimum.
class GraphLocator {
public:
    explicit GraphLocator(const CurveGraph& graph) : graph_(&graph) {}

    double distance(Point p);

private:
    const CurveGraph* graph_;
    std::size_t hint_ = 0;
};

/// Intersection of the graphs' x-ranges; throws std::invalid_argument
/// when it has zero length.
Interval overlap(const CurveGraph& a, const CurveGraph& b);

/// Source vertices inside `range`, plus interpolated end points where the
/// range boundary falls inside a segment.
std::vector<Point> clip_vertices(const CurveGraph& g, Interval range);

/// VE_p in one direction. p = 2 returns the square root of the integral.
double ve(Direction direction, Norm p, const CurveGraph& est, const CurveGraph& truth);

/// Symmetrized criterion: sqrt(VE2^2 + VE2'^2), VE1 + VE1', max(VEinf, VEinf').
double se(Norm p, const CurveGraph& est, const CurveGraph& truth);

/// Integral of |est - truth| (l1), of (est - truth)^2 without a root (l2),
/// or the maximum absolute difference (linf), on the union grid.
double lp(Norm p, const CurveGraph& est, const CurveGraph& truth);

/// All criteria for one (estimate, truth) pair. `eh` is estimate -> truth.
struct ErrorReport {
    double l1 = 0.0, l2 = 0.0, linf = 0.0;
    double ve1_eh = 0.0, ve1_he = 0.0;
    double ve2_eh = 0.0, ve2_he = 0.0;
    double veinf_eh = 0.0, veinf_he = 0.0;
    double se1 = 0.0, se2 = 0.0, seinf = 0.0;
};

ErrorReport error_report(const CurveGraph& est, const CurveGraph& truth);

}  // namespace hazvis
