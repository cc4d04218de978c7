#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "hazvis/curvedist.hpp"
#include "hazvis/sampler.hpp"

using namespace hazvis;

namespace {

// Exhaustive distance: project onto every segment, also check every vertex.
double brute_distance(Point p, const CurveGraph& g) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < g.size(); ++i) {
        best = std::min(best, std::hypot(p.x - g.xs()[i], p.y - g.ys()[i]));
    }
    for (std::size_t i = 0; i + 1 < g.size(); ++i) {
        const double ax = g.xs()[i], ay = g.ys()[i];
        const double dx = g.xs()[i + 1] - ax, dy = g.ys()[i + 1] - ay;
        const double t = ((p.x - ax) * dx + (p.y - ay) * dy) / (dx * dx + dy * dy);
        if (t > 0.0 && t < 1.0) best = std::min(best, std::hypot(p.x - (ax + t * dx), p.y - (ay + t * dy)));
    }
    return best;
}

CurveGraph random_polyline(StreamRng& rng, std::size_t knots, double lo, double hi, double scale) {
    std::vector<double> xs{lo};
    for (std::size_t i = 1; i + 1 < knots; ++i) xs.push_back(lo + (hi - lo) * rng.uniform_open());
    xs.push_back(hi);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<double> ys;
    for (std::size_t i = 0; i < xs.size(); ++i) ys.push_back(scale * rng.uniform_open());
    return CurveGraph(xs, ys);
}

CurveGraph equispaced_polyline(StreamRng& rng, std::size_t knots, double lo, double hi) {
    std::vector<double> ys;
    for (std::size_t i = 0; i < knots; ++i) ys.push_back(rng.uniform_open());
    return CurveGraph(linspace(lo, hi, knots), ys);
}

CurveGraph resample(const CurveGraph& g, std::span<const double> grid) {
    return sample_curve([&](double x) { return g.interpolate(x); }, grid);
}

// Trapezoid over a fine uniform grid of the exact point-to-graph distance.
double dense_ve(const CurveGraph& source, const CurveGraph& target, Norm p, std::size_t points) {
    const double lo = std::max(source.x_min(), target.x_min());
    const double hi = std::min(source.x_max(), target.x_max());
    const double h = (hi - lo) / static_cast<double>(points - 1);
    double l1 = 0.0, l2 = 0.0, linf = 0.0;
    for (std::size_t i = 0; i < points; ++i) {
        const double x = lo + h * static_cast<double>(i);
        const double d = brute_distance({x, source.interpolate(x)}, target);
        const double w = (i == 0 || i + 1 == points) ? 0.5 * h : h;
        l1 += w * d;
        l2 += w * d * d;
        linf = std::max(linf, d);
    }
    return p == Norm::l1 ? l1 : p == Norm::l2 ? std::sqrt(l2) : linf;
}

double dense_lp(const CurveGraph& a, const CurveGraph& b, Norm p, std::size_t points) {
    const double lo = std::max(a.x_min(), b.x_min());
    const double hi = std::min(a.x_max(), b.x_max());
    const double h = (hi - lo) / static_cast<double>(points - 1);
    double l1 = 0.0, l2 = 0.0, linf = 0.0;
    for (std::size_t i = 0; i < points; ++i) {
        const double x = lo + h * static_cast<double>(i);
        const double d = std::abs(a.interpolate(x) - b.interpolate(x));
        const double w = (i == 0 || i + 1 == points) ? 0.5 * h : h;
        l1 += w * d;
        l2 += w * d * d;
        linf = std::max(linf, d);
    }
    return p == Norm::l1 ? l1 : p == Norm::l2 ? l2 : linf;
}

}  // namespace

TEST_CASE("point-to-graph closed forms") {
    const CurveGraph flat({0.0, 10.0}, {1.0, 1.0});
    CHECK(point_to_graph({5.0, 1.25}, flat) == 0.25);
    CHECK(point_to_graph({5.0, 1.0}, flat) == 0.0);
    const CurveGraph diagonal({0.0, 2.0}, {0.0, 2.0});
    CHECK(std::abs(point_to_graph({0.0, 1.0}, diagonal) - std::sqrt(0.5)) < 1e-15);
    // Beyond the end: distance to the endpoint.
    CHECK(point_to_graph({-3.0, -4.0}, diagonal) == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(point_to_graph({-3.0, 4.0}, diagonal) == doctest::Approx(3.5 * std::sqrt(2.0)).epsilon(1e-15));
    CHECK(point_to_segment({1.0, 1.0}, {0.0, 0.0}, {0.0, 0.0}) == doctest::Approx(std::sqrt(2.0)));
    // A spike lies closer than the vertical drop.
    const CurveGraph spike({0.0, 1.0, 1.01, 2.0}, {0.0, 0.0, 5.0, 5.0});
    CHECK(point_to_graph({0.5, 4.0}, spike) < 0.52);
}

TEST_CASE("point-to-graph matches brute force on random cases") {
    StreamRng rng(31);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto g = random_polyline(rng, 2 + static_cast<std::size_t>(rng.uniform_open() * 40), 0.0, 1.0, 3.0);
        const Point p{1.4 * rng.uniform_open() - 0.2, 4.0 * rng.uniform_open() - 0.5};
        worst = std::max(worst, std::abs(point_to_graph(p, g) - brute_distance(p, g)));
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("hinted locator agrees with the one-shot query") {
    StreamRng rng(8);
    const auto g = random_polyline(rng, 300, 0.0, 5.0, 2.0);
    GraphLocator locator(g);
    bool identical = true;
    for (int i = 0; i < 2000; ++i) {
        const Point p{5.0 * rng.uniform_open(), 2.0 * rng.uniform_open()};
        identical = identical && locator.distance(p) == point_to_graph(p, g);
    }
    CHECK(identical);
}

TEST_CASE("constant graphs") {
    const CurveGraph est({0.0, 10.0}, {1.3, 1.3});
    const CurveGraph truth({0.0, 5.0, 10.0}, {1.0, 1.0, 1.0});
    CHECK(lp(Norm::l2, est, truth) == doctest::Approx(0.9).epsilon(1e-14));
    CHECK(lp(Norm::l1, est, truth) == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(lp(Norm::linf, est, truth) == doctest::Approx(0.3).epsilon(1e-14));
    for (const auto dir : {Direction::est_to_truth, Direction::truth_to_est}) {
        CHECK(ve(dir, Norm::linf, est, truth) == doctest::Approx(0.3).epsilon(1e-14));
        CHECK(ve(dir, Norm::l1, est, truth) == doctest::Approx(3.0).epsilon(1e-14));
        CHECK(ve(dir, Norm::l2, est, truth) == doctest::Approx(std::sqrt(0.9)).epsilon(1e-14));
    }
    CHECK(se(Norm::l2, est, truth) == doctest::Approx(std::sqrt(1.8)).epsilon(1e-14));
    CHECK(se(Norm::l1, est, truth) == doctest::Approx(6.0).epsilon(1e-14));
    CHECK(se(Norm::linf, est, truth) == doctest::Approx(0.3).epsilon(1e-14));
}

TEST_CASE("criteria integrate over the x-overlap only") {
    const CurveGraph est({0.0, 4.0}, {2.0, 2.0});
    const CurveGraph truth({1.0, 3.0}, {1.0, 1.0});
    CHECK(lp(Norm::l1, est, truth) == doctest::Approx(2.0));
    CHECK(ve(Direction::est_to_truth, Norm::l1, est, truth) == doctest::Approx(2.0));
    CHECK_THROWS_AS(overlap(CurveGraph({0.0, 1.0}, {0.0, 0.0}), CurveGraph({1.0, 2.0}, {0.0, 0.0})),
                    std::invalid_argument);
    const auto clipped = clip_vertices(CurveGraph({0.0, 1.0, 2.0}, {0.0, 1.0, 0.0}), {0.5, 1.5});
    REQUIRE(clipped.size() == 3);
    CHECK(clipped[0].y == 0.5);
    CHECK(clipped[1].x == 1.0);
    CHECK(clipped[2].y == 0.5);
}

TEST_CASE("graph validation") {
    CHECK_THROWS_AS(CurveGraph({}, {}), std::invalid_argument);
    CHECK_THROWS_AS(CurveGraph({0.0, 0.0}, {1.0, 2.0}), std::invalid_argument);
    CHECK_THROWS_AS(CurveGraph({0.0, 1.0}, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(CurveGraph({0.0, 1.0}, {1.0, std::nan("")}), std::invalid_argument);
    CHECK_NOTHROW(CurveGraph({0.5}, {1.0}));
}

TEST_CASE("visual errors on refined polylines match dense oracles") {
    StreamRng rng(2025);
    const auto fine = linspace(0.0, 1.0, 4001);
    for (int trial = 0; trial < 5; ++trial) {
        const auto f_fine = resample(equispaced_polyline(rng, 10, 0.0, 1.0), fine);
        const auto g = equispaced_polyline(rng, 10, 0.0, 1.0);
        const auto g_fine = resample(g, fine);
        for (const Norm p : {Norm::l1, Norm::l2}) {
            CAPTURE(trial);
            const double oracle = dense_ve(f_fine, g, p, 100001);
            CHECK(std::abs(ve(Direction::est_to_truth, p, f_fine, g) - oracle) <= 1e-6);
            CHECK(std::abs(ve(Direction::truth_to_est, p, g, f_fine) - oracle) <= 1e-6);
            CHECK(std::abs(lp(p, f_fine, g_fine) - dense_lp(f_fine, g_fine, p, 100001)) <= 1e-6);
        }
        // The sup runs over source vertices: exact there, and within half a
        // step times the curve's speed (slope <= 9) of the continuous sup.
        double vertex_sup = 0.0;
        for (std::size_t i = 0; i < f_fine.size(); ++i) vertex_sup = std::max(vertex_sup, brute_distance(f_fine.vertex(i), g));
        const double vinf = ve(Direction::est_to_truth, Norm::linf, f_fine, g);
        CHECK(std::abs(vinf - vertex_sup) <= 1e-12);
        const double dense_sup = dense_ve(f_fine, g, Norm::linf, 100001);
        CHECK(dense_sup >= vinf - 1e-12);
        CHECK(dense_sup - vinf <= 0.5 * (fine[1] - fine[0]) * std::sqrt(82.0));
        CHECK(std::abs(lp(Norm::linf, f_fine, g_fine) - dense_lp(f_fine, g_fine, Norm::linf, 100001)) <= 1e-12);
    }
}

TEST_CASE("visual errors are dominated by vertical errors on a shared grid") {
    StreamRng rng(404);
    const auto grid = linspace(0.0, 2.0, 129);
    for (int trial = 0; trial < 200; ++trial) {
        const auto f = resample(random_polyline(rng, 12, 0.0, 2.0, 3.0), grid);
        const auto g = resample(random_polyline(rng, 12, 0.0, 2.0, 3.0), grid);
        const auto r = error_report(f, g);
        CHECK(r.ve1_eh <= r.l1 + 1e-14);
        CHECK(r.ve1_he <= r.l1 + 1e-14);
        CHECK(r.ve2_eh * r.ve2_eh <= r.l2 + 1e-14);
        CHECK(r.ve2_he * r.ve2_he <= r.l2 + 1e-14);
        CHECK(r.veinf_eh <= r.linf + 1e-14);
        CHECK(r.veinf_he <= r.linf + 1e-14);
    }
}

TEST_CASE("error report agrees with the individual criteria") {
    StreamRng rng(55);
    const auto f = random_polyline(rng, 30, 0.0, 1.0, 2.0);
    const auto g = random_polyline(rng, 25, 0.1, 1.2, 2.0);
    const auto r = error_report(f, g);
    CHECK(r.l1 == lp(Norm::l1, f, g));
    CHECK(r.l2 == lp(Norm::l2, f, g));
    CHECK(r.ve2_eh == ve(Direction::est_to_truth, Norm::l2, f, g));
    CHECK(r.ve2_he == ve(Direction::truth_to_est, Norm::l2, f, g));
    CHECK(r.veinf_he == ve(Direction::truth_to_est, Norm::linf, f, g));
    CHECK(r.se1 == se(Norm::l1, f, g));
    CHECK(r.se2 == doctest::Approx(se(Norm::l2, f, g)).epsilon(1e-15));
    CHECK(r.seinf == se(Norm::linf, f, g));
}

TEST_CASE("swap symmetry, translation invariance and target refinement") {
    StreamRng rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        const auto f = random_polyline(rng, 20, 0.0, 1.0, 1.0);
        const auto g = random_polyline(rng, 20, 0.0, 1.0, 1.0);
        CHECK(ve(Direction::est_to_truth, Norm::l2, f, g) == ve(Direction::truth_to_est, Norm::l2, g, f));
        CHECK(se(Norm::l2, f, g) == doctest::Approx(se(Norm::l2, g, f)).epsilon(1e-15));

        const double dx = 3.25, dy = -0.75;
        auto shift = [&](const CurveGraph& c) {
            std::vector<double> xs(c.xs().begin(), c.xs().end()), ys(c.ys().begin(), c.ys().end());
            for (double& x : xs) x += dx;
            for (double& y : ys) y += dy;
            return CurveGraph(xs, ys);
        };
        CHECK(ve(Direction::est_to_truth, Norm::l2, shift(f), shift(g)) ==
              doctest::Approx(ve(Direction::est_to_truth, Norm::l2, f, g)).epsilon(1e-9));

        // Midpoints on the target leave the graph, and thus every distance, unchanged.
        std::vector<double> xs, ys;
        for (std::size_t i = 0; i < g.size(); ++i) {
            xs.push_back(g.xs()[i]);
            ys.push_back(g.ys()[i]);
            if (i + 1 < g.size()) {
                xs.push_back(0.5 * (g.xs()[i] + g.xs()[i + 1]));
                ys.push_back(0.5 * (g.ys()[i] + g.ys()[i + 1]));
            }
        }
        const CurveGraph g_refined(xs, ys);
        CHECK(ve(Direction::est_to_truth, Norm::l2, f, g_refined) ==
              doctest::Approx(ve(Direction::est_to_truth, Norm::l2, f, g)).epsilon(1e-12));
    }
}

TEST_CASE("SE2 violates the triangle inequality: frozen triple") {
    // Knots drawn from StreamRng(7), trial 0 of a random search.
    const std::vector<double> knots{0.94930120289264419, 0.11741428103451806, 0.89191317671247639,
                                    0.14127156320378681, 0.055093158503943085, 0.8325229805314458,
                                    0.90071047645970825, 0.25715806876399699, 0.71790568464900351,
                                    0.75574503474009669};
    const auto grid = linspace(0.0, 1.0, 257);
    const CurveGraph g = resample(CurveGraph(linspace(0.0, 1.0, knots.size()), knots), grid);
    const CurveGraph f = sample_curve([](double) { return 0.0; }, grid);
    const CurveGraph k = sample_curve([](double) { return 1.0; }, grid);
    const double fk = se(Norm::l2, f, k);
    const double fg = se(Norm::l2, f, g);
    const double gk = se(Norm::l2, g, k);
    CHECK(fk == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(fk > fg + gk + 1e-6);
}

TEST_CASE("refinement stability on smooth curves") {
    auto criteria = [](std::size_t m) {
        const auto grid = linspace(0.0, 3.0, m);
        const auto est = sample_curve([](double x) { return 1.0 + 0.5 * std::sin(2.0 * x) + 0.1 * x; }, grid);
        const auto truth = sample_curve([](double x) { return 1.2 + 0.4 * std::cos(1.5 * x); }, grid);
        return error_report(est, truth);
    };
    const auto a = criteria(512);
    const auto b = criteria(1023);
    auto close = [](double u, double v) { return std::abs(u - v) <= 1e-3 * std::max(std::abs(u), std::abs(v)); };
    CHECK(close(a.l1, b.l1));
    CHECK(close(a.l2, b.l2));
    CHECK(close(a.linf, b.linf));
    CHECK(close(a.ve1_eh, b.ve1_eh));
    CHECK(close(a.ve2_eh, b.ve2_eh));
    CHECK(close(a.ve2_he, b.ve2_he));
    CHECK(close(a.veinf_eh, b.veinf_eh));
    CHECK(close(a.veinf_he, b.veinf_he));
    CHECK(close(a.se1, b.se1));
    CHECK(close(a.se2, b.se2));
    CHECK(close(a.seinf, b.seinf));
}

TEST_CASE("Hausdorff distance vanishes exactly for identical point sets") {
    const CurveGraph g({0.0, 1.0, 2.0}, {0.0, 3.0, 1.0});
    const CurveGraph same_set({0.0, 0.5, 1.0, 1.5, 2.0}, {0.0, 1.5, 3.0, 2.0, 1.0});
    const CurveGraph other({0.0, 1.0, 2.0}, {0.0, 3.0, 1.0 + 1e-9});
    const auto r = error_report(g, g);
    CHECK(r.seinf == 0.0);
    CHECK(r.se2 == 0.0);
    CHECK(r.l2 == 0.0);
    CHECK(se(Norm::linf, g, same_set) <= 1e-12);
    CHECK(se(Norm::linf, g, other) > 1e-12);
}
