#pragma once

#include <numbers>

#include "fvn/potential.hpp"

namespace fvn {

// Reduced Planck mass squared, Mtilde_p^2 = 1/(8 pi) with M_p = 1.
inline constexpr double mtilde_p_sq = 1.0 / (8.0 * std::numbers::pi);

struct SlowRollReport {
    double phi = 0.0;
    double v = 0.0;          // v1 at phi (slow-roll diagnostics exclude rho_init)
    double h_squared = 0.0;  // (8 pi / 3) v
    double v_dd_abs = 0.0;   // |v1''|
    double ratio = 0.0;      // v_dd_abs / h_squared
    double epsilon_sr = 0.0;
    double eta_sr = 0.0;
    bool passes_flat = false;
    bool passes_negative_pressure = false;
};

// H^2 = (8 pi / 3) V. Throws std::domain_error for v < 0.
double hubble_squared(double v);

// First and second slow-roll parameters from raw potential data.
double slowroll_epsilon(double v_d1, double v);
double slowroll_eta(double v_d2, double v);

// Full diagnostic at a point. Throws std::domain_error when the potential is
// not positive there.
SlowRollReport slow_roll_report(double phi, const PotentialParams& p,
                                double flatness_threshold);

}  // namespace fvn
