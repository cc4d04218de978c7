#pragma once

#include <cmath>
#include <cstddef>

namespace hazvis {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t intervals = 0;
    bool converged = true;
};

namespace detail {

template <class F>
struct SimpsonState {
    F& f;
    std::size_t max_intervals;
    std::size_t leaves;
    double error = 0.0;
    bool converged = true;

    double refine(double a, double fa, double m, double fm, double b, double fb, double whole,
                  double tol, int depth) {
        const double lm = 0.5 * (a + m);
        const double rm = 0.5 * (m + b);
        const double flm = f(lm);
        const double frm = f(rm);
        const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        const double delta = left + right - whole;
        if (std::abs(delta) <= 15.0 * tol || depth <= 0 || leaves >= max_intervals) {
            if (std::abs(delta) > 15.0 * tol) converged = false;
            error += std::abs(delta) / 15.0;
            return left + right + delta / 15.0;
        }
        ++leaves;
        return refine(a, fa, lm, flm, m, fm, left, 0.5 * tol, depth - 1) +
               refine(m, fm, rm, frm, b, fb, right, 0.5 * tol, depth - 1);
    }
};

}  // namespace detail

/// Adaptive Simpson with Richardson extrapolation. The interval is first
/// split into `initial_panels` equal panels, each given an equal share of
/// `abs_tol`; refinement stops at `max_intervals` leaf intervals.
template <class F>
QuadratureResult adaptive_simpson(F&& f, double a, double b, double abs_tol = 1e-9,
                                  std::size_t max_intervals = std::size_t{1} << 14,
                                  int initial_panels = 8) {
    QuadratureResult result;
    if (a == b) return result;
    detail::SimpsonState<F> state{f, max_intervals, static_cast<std::size_t>(initial_panels)};
    const double width = (b - a) / initial_panels;
    const double panel_tol = abs_tol / initial_panels;
    double fa = f(a);
    for (int k = 0; k < initial_panels; ++k) {
        const double lo = a + width * k;
        const double hi = k + 1 == initial_panels ? b : a + width * (k + 1);
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        const double fb = f(hi);
        const double whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
        result.value += state.refine(lo, fa, mid, fm, hi, fb, whole, panel_tol, 50);
        fa = fb;
    }
    result.error_estimate = state.error;
    result.intervals = state.leaves;
    result.converged = state.converged;
    return result;
}

}  // namespace hazvis
