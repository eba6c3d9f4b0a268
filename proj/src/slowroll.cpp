#include "fvn/slowroll.hpp"

#include <cmath>
#include <stdexcept>

namespace fvn {

double hubble_squared(double v) {
    if (v < 0.0) {
        throw std::domain_error("hubble_squared: potential must be non-negative where H^2 "
                                "is evaluated");
    }
    return 8.0 * std::numbers::pi / 3.0 * v;
}

double slowroll_epsilon(double v_d1, double v) {
    const double r = v_d1 / v;
    return 0.5 * mtilde_p_sq * r * r;
}

double slowroll_eta(double v_d2, double v) {
    return mtilde_p_sq * v_d2 / v;
}

SlowRollReport slow_roll_report(double phi, const PotentialParams& p,
                                double flatness_threshold) {
    // Diagnostics run against v1: the constant offset is normalized away.
    const double v = v1(phi, p);
    if (!(v > 0.0) || !(v_total(phi, p) > 0.0)) {
        throw std::domain_error("slow_roll_report: potential must be positive at the "
                                "evaluation point");
    }
    SlowRollReport r;
    r.phi = phi;
    r.v = v;
    r.h_squared = hubble_squared(v);
    r.v_dd_abs = std::abs(v1_d2(phi, p));
    r.ratio = r.v_dd_abs / r.h_squared;
    r.epsilon_sr = slowroll_epsilon(v1_d1(phi, p), v);
    r.eta_sr = slowroll_eta(v1_d2(phi, p), v);
    r.passes_flat = r.ratio < flatness_threshold;
    r.passes_negative_pressure = r.epsilon_sr < 1.0 && std::abs(r.eta_sr) < 1.0;
    return r;
}

}  // namespace fvn
