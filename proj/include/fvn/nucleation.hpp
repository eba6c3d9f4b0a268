#pragma once

#include <string>

#include "fvn/grid.hpp"
#include "fvn/potential.hpp"

namespace fvn {

// Inputs of the rate formulas. Defaults follow the published reference run:
// alpha_gap ~ 1/L with L = 24.39, vantage point x = V(phi_F) = 0.663.
// hubble_H only enters when e_charge * e_field_E0 is nonzero.
struct NucleationInputs {
    double prefactor_A = 1.0;
    double s_bounce = 0.0;
    double m_field = 0.441;
    double mass_M = 1.0;
    double e_charge = 0.0;
    double e_field_E0 = 0.0;
    double hubble_H = 1.0;
    double s_euclid = 0.0;
    double alpha_gap = 0.041;
    double x_vantage = 0.663;
    double length_L = 24.39;

    void validate() const;  // throws std::invalid_argument (mass_M must be <= 1)
};

// Copies base with alpha_gap and length_L taken from one vacuum solution
// (alpha = delta_E = 1/L). Throws std::invalid_argument for a degenerate gap.
NucleationInputs with_gap_from(const NucleationInputs& base, const VacuumSolution& vs);

// One-mode Gaussian state c * exp(-alpha (u - center)^2) over the collective
// variable of the quasi-1-D reduction.
struct WaveFunctional {
    double norm_c = 1.0;
    double width_alpha = 1.0;
    double center = 0.0;
    std::string label;  // "initial" | "final"
};

// Coleman-de Luccia rate A exp(-S_b + S_t) with S_t = -(3/8) rho_t and
// rho_t = (60 / 4 pi) m_field^2 (the bound taken as equality).
double cdl_rate(const NucleationInputs& n);

// de Sitter pair density (1/2 pi) sqrt(M^2 + e E0^2 / H^2) exp(-S_E).
// Throws std::domain_error when H = 0 with a nonzero field term.
double garriga_density(const NucleationInputs& n);

// cosh(2 sqrt(x / 2L) - sqrt(L / 2x)); exactly 1 at x = L/2.
double transfer_cosh_factor(double x_vantage, double length_L);

// (c1 c2 / m*) cosh(...) exp(-alpha L (L / 2x)). Throws std::domain_error
// for x_vantage <= 0 or length_L <= 0.
double transfer_closed_form(const NucleationInputs& n, double c1, double c2);

// C_i = [ integral_0^{L^2/2pi} exp(-2 bracket_i u^2) du ]^(-1/2), adaptive
// quadrature to ~1e-10 relative accuracy. Throws std::range_error when a
// negative bracket_i makes the integrand overflow double range.
double normalization_constant(double bracket_i, double length_L);

// Discretized Gaussian functional c exp(-alpha sum_i (phi_i - center_i)^2 dx_i)
// with trapezoidal weights. Throws std::invalid_argument on mismatched grids.
double gaussian_functional(double alpha, double norm_c, const GridSeries& field,
                           const GridSeries& center);

struct TransferResult {
    double value = 0.0;
    bool underflow = false;  // set when the overlap integral is below 1e-300
};

// Single-collective-mode tunneling matrix element
//   (1 / 2 m_e) integral [Psi_i Psi_f'' - Psi_f Psi_i''] theta(u - phi_0) du
// over [0, upper_limit], second derivatives analytic for Gaussians. The step
// uses the half-open convention (1 for u >= phi_0). Antisymmetric under
// exchange of the two states.
TransferResult transfer_discretized(const WaveFunctional& psi_i, const WaveFunctional& psi_f,
                                    double phi_0, double upper_limit);

// Golden rule 2 pi |T|^2 rho. Throws std::domain_error for rho_states < 0.
double golden_rule_rate(double t_matrix, double rho_states);

}  // namespace fvn
