#pragma once

#include <span>
#include <vector>

namespace hazvis {

struct Point {
    double x;
    double y;
};

/// A function sampled on a strictly ascending grid; its graph is the
/// polyline through the vertices (a single vertex is a degenerate graph).
class CurveGraph {
public:
    CurveGraph(std::vector<double> xs, std::vector<double> ys);

    std::span<const double> xs() const noexcept { return xs_; }
    std::span<const double> ys() const noexcept { return ys_; }
    std::size_t size() const noexcept { return xs_.size(); }
    Point vertex(std::size_t i) const noexcept { return {xs_[i], ys_[i]}; }
    double x_min() const noexcept { return xs_.front(); }
    double x_max() const noexcept { return xs_.back(); }

    /// Linear interpolation; exact vertex value when x hits a grid node.
    /// Requires x_min() <= x <= x_max().
    double interpolate(double x) const;

    friend bool operator==(const CurveGraph&, const CurveGraph&) = default;

private:
    std::vector<double> xs_;
    std::vector<double> ys_;
};

/// m equispaced points from lo to hi inclusive (m >= 1; m == 1 yields {lo}).
std::vector<double> linspace(double lo, double hi, std::size_t m);

/// Sample f on the grid.
template <class F>
CurveGraph sample_curve(F&& f, std::span<const double> grid) {
    std::vector<double> ys;
    ys.reserve(grid.size());
    for (const double x : grid) ys.push_back(f(x));
    return CurveGraph(std::vector<double>(grid.begin(), grid.end()), std::move(ys));
}

}  // namespace hazvis
