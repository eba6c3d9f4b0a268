#pragma once

#include "fvn/grid.hpp"
#include "fvn/potential.hpp"

namespace fvn {

// Pure-kinetic k-essence model with the quadratic expansion
//   F(X) = f0 + f2 (X - x0)^2,   p = V(phi) F(X),   rho = V(phi) [2 X F_X - F].
//
// Two kinetic conventions coexist: the field-equation integrator treats
// X = (1/2) phidot^2 (homogeneous background), while the wall diagnostics
// treat X = (1/2)(dphi/dx)^2 (static profile).
//
// f0 carries no published value; the default 1e6 (= f2^2) is the unique
// choice under which the two printed groupings of the wall correction
// 4 x0 (f2/f0) eps0 and 4 x0 eps0 / f2 coincide at 0.04, which the
// equation-of-state arithmetic at the wall requires.
struct KEssenceModel {
    double f0 = 1e6;
    double f2 = 1e3;
    double x0 = 1e3;     // extremal kinetic value: ~1e3 at the wall, 0 outside
    double eps0 = 1e-2;  // perturbation amplitude
    double v0 = 0.775;   // constant-background potential value

    void validate() const;  // throws std::invalid_argument
};

double f_of_x(double x_val, const KEssenceModel& m);
double f_x(double x_val, const KEssenceModel& m);
double f_xx(double x_val, const KEssenceModel& m);

double pressure(double phi_val, double x_val, const KEssenceModel& m, const PotentialParams& p);
double density(double phi_val, double x_val, const KEssenceModel& m, const PotentialParams& p);

// Constant-background variants substituting v0 for the potential factor.
double pressure_const_bg(double x_val, const KEssenceModel& m);
double density_const_bg(double x_val, const KEssenceModel& m);

// Linearized wall density v0 [4 f2 x0 eps0 - f0]; agrees with the exact
// constant-background density at x0 + eps0 to first order in eps0.
double density_wall_approx(const KEssenceModel& m);

// w = F / (2 X F_X - F); the potential cancels. Throws std::domain_error
// ("eos-singular") on a vanishing denominator.
double equation_of_state(double x_val, const KEssenceModel& m);

// cs^2 = F_X / (F_X + 2 X F_XX); with the quadratic F this is
// eps / (3 eps + 2 x0) at x0 + eps. Throws std::domain_error ("cs2-singular")
// on a vanishing denominator.
double sound_speed_sq(double x_val, const KEssenceModel& m);

// The printed closed form 1 / (1 + 4 x0 (1 + x0 / (2 eps0))), kept verbatim
// for the consistency report; it disagrees with the cs^2 route above in the
// x0 -> 0 limit (1 versus 1/3). eps0 = 0 returns the limit value.
double paper_cs2_form(double x0, double eps0);

// eps0 * exp(-8 pi v0 t), the printed perturbation decay law.
double epsilon_decay(double t, double eps0, double v0);

// One evaluated point of the equation-of-state table; w and cs2 are computed
// from the same F as pressure and density.
struct EosPoint {
    double x_val = 0.0;
    double pressure = 0.0;
    double density = 0.0;
    double w = 0.0;
    double cs2 = 0.0;
};
EosPoint eos_point(double phi_val, double x_val, const KEssenceModel& m, const PotentialParams& p);

struct FieldTrajectory {
    GridSeries phi;   // xs = t
    GridSeries dphi;  // xs = t
};

// Fixed-step RK4 on
//   (F_X + 2 X F_XX) phidd + 3 H F_X phid + (2 X F_X - F) V_phi / V = 0
// with X = (1/2) phid^2. With constant_potential the V_phi force is dropped
// and H = sqrt((8 pi / 3) v0); otherwise V = v_total(phi) and
// H = sqrt((8 pi / 3) V). Throws std::domain_error ("degenerate-kinetic")
// when the phidd coefficient crosses zero, std::runtime_error on non-finite
// state, std::invalid_argument for dt <= 0.
FieldTrajectory integrate_field_equation(const KEssenceModel& m, const PotentialParams& p,
                                         double phi_init, double dphi_init,
                                         double t_end, double dt, bool constant_potential);

}  // namespace fvn
