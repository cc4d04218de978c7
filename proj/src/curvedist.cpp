#include "hazvis/curvedist.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hazvis {

CurveGraph::CurveGraph(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
    if (xs_.empty()) throw std::invalid_argument("curve graph needs at least one vertex");
    if (xs_.size() != ys_.size()) throw std::invalid_argument("curve graph abscissae and ordinates differ in length");
    for (std::size_t i = 0; i < xs_.size(); ++i) {
        if (!std::isfinite(xs_[i]) || !std::isfinite(ys_[i])) {
            throw std::invalid_argument("curve graph values must be finite");
        }
        if (i > 0 && !(xs_[i] > xs_[i - 1])) {
            throw std::invalid_argument("curve graph abscissae must be strictly ascending");
        }
    }
}

double CurveGraph::interpolate(double x) const {
    if (x < xs_.front() || x > xs_.back()) throw std::out_of_range("interpolation outside the graph's range");
    const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
    const auto j = static_cast<std::size_t>(std::distance(xs_.begin(), it)) - 1;
    if (xs_[j] == x) return ys_[j];
    const double t = (x - xs_[j]) / (xs_[j + 1] - xs_[j]);
    return ys_[j] + t * (ys_[j + 1] - ys_[j]);
}

std::vector<double> linspace(double lo, double hi, std::size_t m) {
    if (m == 0) throw std::invalid_argument("linspace needs at least one point");
    std::vector<double> out(m);
    if (m == 1) {
        out[0] = lo;
        return out;
    }
    const double step = (hi - lo) / static_cast<double>(m - 1);
    for (std::size_t i = 0; i < m; ++i) out[i] = lo + step * static_cast<double>(i);
    out.back() = hi;
    return out;
}

double point_to_segment(Point p, Point a, Point b) noexcept {
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const double px = p.x - a.x;
    const double py = p.y - a.y;
    const double len2 = dx * dx + dy * dy;
    const double t = len2 > 0.0 ? (px * dx + py * dy) / len2 : 0.0;
    if (t <= 0.0) return std::sqrt(px * px + py * py);
    if (t >= 1.0) {
        const double qx = p.x - b.x;
        const double qy = p.y - b.y;
        return std::sqrt(qx * qx + qy * qy);
    }
    const double ex = px - t * dx;
    const double ey = py - t * dy;
    return std::sqrt(ex * ex + ey * ey);
}

double GraphLocator::distance(Point p) {
    const CurveGraph& g = *graph_;
    const auto xs = g.xs();
    const std::size_t m = xs.size();
    if (m == 1) return point_to_segment(p, g.vertex(0), g.vertex(0));
    const std::size_t segments = m - 1;

    // Segment whose slab holds p.x (clamped to the ends).
    std::size_t k = 0;
    if (p.x >= xs[0]) {
        const std::size_t from = p.x >= xs[hint_] ? hint_ : 0;
        const auto it = std::upper_bound(xs.begin() + static_cast<std::ptrdiff_t>(from),
                                         xs.begin() + static_cast<std::ptrdiff_t>(segments), p.x);
        k = static_cast<std::size_t>(std::distance(xs.begin(), it)) - 1;
    }
    hint_ = k;

    double best = point_to_segment(p, g.vertex(k), g.vertex(k + 1));
    for (std::size_t j = k; j-- > 0;) {
        if (p.x - xs[j + 1] >= best) break;
        best = std::min(best, point_to_segment(p, g.vertex(j), g.vertex(j + 1)));
    }
    for (std::size_t j = k + 1; j < segments; ++j) {
        if (xs[j] - p.x >= best) break;
        best = std::min(best, point_to_segment(p, g.vertex(j), g.vertex(j + 1)));
    }
    return best;
}

double point_to_graph(Point p, const CurveGraph& g) {
    GraphLocator locator(g);
    return locator.distance(p);
}

Interval overlap(const CurveGraph& a, const CurveGraph& b) {
    const Interval range{std::max(a.x_min(), b.x_min()), std::min(a.x_max(), b.x_max())};
    if (!(range.hi > range.lo)) throw std::invalid_argument("graphs have no overlapping x-range");
    return range;
}

std::vector<Point> clip_vertices(const CurveGraph& g, Interval range) {
    std::vector<Point> out;
    const auto xs = g.xs();
    const auto first = std::lower_bound(xs.begin(), xs.end(), range.lo);
    const auto last = std::upper_bound(xs.begin(), xs.end(), range.hi);
    if (first == xs.end() || *first != range.lo) out.push_back({range.lo, g.interpolate(range.lo)});
    for (auto it = first; it != last; ++it) {
        const auto i = static_cast<std::size_t>(std::distance(xs.begin(), it));
        out.push_back(g.vertex(i));
    }
    if (out.back().x != range.hi) out.push_back({range.hi, g.interpolate(range.hi)});
    return out;
}

namespace {

struct DirectionalErrors {
    double l1 = 0.0;
    double l2_squared = 0.0;
    double linf = 0.0;
};

DirectionalErrors directional(const CurveGraph& source, const CurveGraph& target, Interval range) {
    const std::vector<Point> points = clip_vertices(source, range);
    GraphLocator locator(target);
    DirectionalErrors out;
    double prev_d = locator.distance(points[0]);
    out.linf = prev_d;
    for (std::size_t i = 1; i < points.size(); ++i) {
        const double d = locator.distance(points[i]);
        const double h = points[i].x - points[i - 1].x;
        out.l1 += 0.5 * h * (prev_d + d);
        out.l2_squared += 0.5 * h * (prev_d * prev_d + d * d);
        out.linf = std::max(out.linf, d);
        prev_d = d;
    }
    return out;
}

double pick(const DirectionalErrors& e, Norm p) {
    switch (p) {
        case Norm::l1: return e.l1;
        case Norm::l2: return std::sqrt(e.l2_squared);
        case Norm::linf: return e.linf;
    }
    return 0.0;
}

DirectionalErrors vertical(const CurveGraph& est, const CurveGraph& truth, Interval range) {
    std::vector<double> grid;
    grid.reserve(est.size() + truth.size() + 2);
    grid.push_back(range.lo);
    grid.push_back(range.hi);
    for (const auto* g : {&est, &truth}) {
        for (const double x : g->xs()) {
            if (x > range.lo && x < range.hi) grid.push_back(x);
        }
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    DirectionalErrors out;
    double prev = std::abs(est.interpolate(grid[0]) - truth.interpolate(grid[0]));
    out.linf = prev;
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double diff = std::abs(est.interpolate(grid[i]) - truth.interpolate(grid[i]));
        const double h = grid[i] - grid[i - 1];
        out.l1 += 0.5 * h * (prev + diff);
        out.l2_squared += 0.5 * h * (prev * prev + diff * diff);
        out.linf = std::max(out.linf, diff);
        prev = diff;
    }
    return out;
}

}  // namespace

double ve(Direction direction, Norm p, const CurveGraph& est, const CurveGraph& truth) {
    const Interval range = overlap(est, truth);
    return direction == Direction::est_to_truth ? pick(directional(est, truth, range), p)
                                                : pick(directional(truth, est, range), p);
}

double se(Norm p, const CurveGraph& est, const CurveGraph& truth) {
    const double eh = ve(Direction::est_to_truth, p, est, truth);
    const double he = ve(Direction::truth_to_est, p, est, truth);
    switch (p) {
        case Norm::l1: return eh + he;
        case Norm::l2: return std::sqrt(eh * eh + he * he);
        case Norm::linf: return std::max(eh, he);
    }
    return 0.0;
}

double lp(Norm p, const CurveGraph& est, const CurveGraph& truth) {
    const DirectionalErrors e = vertical(est, truth, overlap(est, truth));
    switch (p) {
        case Norm::l1: return e.l1;
        case Norm::l2: return e.l2_squared;
        case Norm::linf: return e.linf;
    }
    return 0.0;
}

ErrorReport error_report(const CurveGraph& est, const CurveGraph& truth) {
    const Interval range = overlap(est, truth);
    const DirectionalErrors v = vertical(est, truth, range);
    const DirectionalErrors eh = directional(est, truth, range);
    const DirectionalErrors he = directional(truth, est, range);
    ErrorReport r;
    r.l1 = v.l1;
    r.l2 = v.l2_squared;
    r.linf = v.linf;
    r.ve1_eh = eh.l1;
    r.ve1_he = he.l1;
    r.ve2_eh = std::sqrt(eh.l2_squared);
    r.ve2_he = std::sqrt(he.l2_squared);
    r.veinf_eh = eh.linf;
    r.veinf_he = he.linf;
    r.se1 = r.ve1_eh + r.ve1_he;
    r.se2 = std::sqrt(r.ve2_eh * r.ve2_eh + r.ve2_he * r.ve2_he);
    r.seinf = std::max(r.veinf_eh, r.veinf_he);
    return r;
}

}  // namespace hazvis
