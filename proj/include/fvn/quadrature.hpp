#pragma once

#include <cmath>
#include <cstdlib>
#include <utility>

namespace fvn {

// Adaptive Simpson integration with Richardson correction. The refinement
// order is fixed (left before right), so results are bit-reproducible.
namespace detail {

template <class F>
double simpson_recurse(F& f, double a, double b, double fa, double fm, double fb,
                       double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return simpson_recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

// Integrates f over [a, b] to roughly rel_tol relative accuracy. A coarse
// pass sets the absolute tolerance scale so rel_tol applies to the result.
template <class F>
double adaptive_simpson(F&& f, double a, double b, double rel_tol) {
    if (a == b) return 0.0;
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    // coarse magnitude estimate over a few panels to anchor the tolerance
    double scale = std::abs(whole);
    const int k = 16;
    double coarse = 0.0;
    for (int i = 0; i < k; ++i) {
        const double x0 = a + (b - a) * i / k;
        const double x1 = a + (b - a) * (i + 1) / k;
        coarse += std::abs((x1 - x0) / 6.0 *
                           (f(x0) + 4.0 * f(0.5 * (x0 + x1)) + f(x1)));
    }
    scale = std::max(scale, coarse);
    const double tol = std::max(rel_tol * scale, 1e-300);
    return detail::simpson_recurse(f, a, b, fa, fm, fb, whole, tol, 48);
}

}  // namespace fvn
