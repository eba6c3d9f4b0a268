#pragma once

#include <numbers>
#include <vector>

#include "fvn/grid.hpp"

namespace fvn {

// Kink-antikink (S-S') pair: two walls of steepness b separated by L,
//   phi(x) = pi * [tanh(b (x + L/2)) - tanh(b (x - L/2))],
// a plateau of height ~2 pi that approaches a box as b grows.
struct KinkProfile {
    double length_L = 1.0;
    double steepness_b = 10.0;
    static constexpr double height = std::numbers::pi;  // plateau amplitude factor, fixed

    void validate() const;  // throws std::invalid_argument
};

double phi_of_x(double x, const KinkProfile& k);
double dphi_dx(double x, const KinkProfile& k);

// Spatial-gradient kinetic invariant X = (1/2)(dphi/dx)^2 of the static wall.
double kinetic_x(double x, const KinkProfile& k);

// s(x) = X^2(x), the delta-like wall diagnostic.
double s_of_x(double x, const KinkProfile& k);

// Integral of X over [-L, L] (midpoint rule, step <= 1e-4 L) and the peak of
// X, for each steepness in b_sequence: peaks grow like b^2 while the profile
// localizes. b_sequence must be increasing; values above 1e6 are refused as
// an unphysical box limit.
struct WallDeltaCheck {
    GridSeries integrals;  // xs = b, ys = integral of X over [-L, L]
    GridSeries peaks;      // xs = b, ys = max of X on the quadrature grid
};
WallDeltaCheck wall_delta_check(const KinkProfile& k, const std::vector<double>& b_sequence);

// Momentum-space box basis function sqrt(2/pi) sin(k_n L / 2) / k_n; the
// removable singularity at k_n = 0 evaluates to sqrt(2/pi) L / 2.
double momentum_basis(double k_n, double length_L);

}  // namespace fvn
