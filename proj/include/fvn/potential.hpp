#pragma once

#include <numbers>

namespace fvn {

// Parameters of the tilted sine-Gordon potential family
//   v1(phi) = cos_coeff * (1 - cos phi) + (m^2/2) * (phi - phi_star)^2
// in Planck units (the cosine coefficient M_p^2/2 appears in the literature
// both as 0.5 and as 0.5989; both are reachable through cos_coeff).
struct PotentialParams {
    double m = 0.441;
    double phi_star = 0.99 * std::numbers::pi;
    double cos_coeff = 0.5;
    double rho_init = 0.0;  // constant offset applied by v_total only

    void validate() const;  // throws std::invalid_argument
};

// Double-well classification of v1: the false vacuum is the minimum with the
// larger v1 value, the true vacuum the smaller. Degenerate wells are reported
// with delta_E = 0 and length_L = +infinity rather than as an error.
struct VacuumSolution {
    double phi_F = 0.0;
    double phi_T = 0.0;
    double phi_barrier = 0.0;
    double delta_E = 0.0;   // v1(phi_F) - v1(phi_T), >= 0
    double length_L = 0.0;  // 1 / delta_E
    bool degenerate = false;

    double phi_lower() const { return phi_F < phi_T ? phi_F : phi_T; }
    double phi_upper() const { return phi_F < phi_T ? phi_T : phi_F; }
};

// The two bracket terms of the Bogomol'nyi energy-gap bookkeeping and the
// gap they imply: bracket_A = (1 + m^2)/2, bracket_B = phi_T*phi_F/6.
struct BracketTerms {
    double bracket_A = 0.0;
    double bracket_B = 0.0;
    double bracket = 0.0;            // bracket_A - bracket_B
    double gap_from_brackets = 0.0;  // bracket / 2
};

// Extended sine-Gordon template potential.
struct ExtendedSGParams {
    double c1 = 0.0;
    double c2 = 0.0;
    double phi_0 = 0.0;
};

double v1(double phi, const PotentialParams& p);
double v_total(double phi, const PotentialParams& p);
double v1_d1(double phi, const PotentialParams& p);
double v1_d2(double phi, const PotentialParams& p);

// Quadratic chaotic-inflation potential (1/2) m^2 phi^2 and its linear
// classical rolling solution phi(t) = phi0_tilde - m t / sqrt(12 pi).
double chaotic_potential(double phi, double m);
double chaotic_phi_of_t(double t, double phi0_tilde, double m);

// Lower bound sqrt(60 / 2 pi) on the initial inflaton value, in Planck masses.
double guth_bound();

// (3/16 pi)^(1/4) m^(-1/2): the field value where classical and quantum
// fluctuations match. Throws std::domain_error for m <= 0.
double phi_star_formula(double m);

// Locates the two minima and the barrier of v1 inside [search_lo, search_hi]:
// dense grid scan (step <= 1e-3) for sign changes of v1_d1, bisection to an
// interval below 1e-12, one Newton polish step, classification by v1_d2.
// Throws std::domain_error ("no-double-well") when fewer than two minima are
// found, std::runtime_error on non-finite evaluations.
VacuumSolution find_vacua(const PotentialParams& p, double search_lo, double search_hi);

// Throws std::domain_error when p.m == 0.
BracketTerms bracket_terms(const PotentialParams& p, const VacuumSolution& vs);

double extended_sg(double phi, const ExtendedSGParams& q);

// Static quasi-1-D Lagrangian density (1/2)(dphi/dx)^2 - v_total(phi).
double lagrangian_density(double phi, double dphi_dx, const PotentialParams& p);

// Bogomol'nyi lower bound |Q| + (1/2)(phi_0 - phi_C)^2 * bracket.
double bogomilnyi_bound(double phi_0, double phi_C, double bracket, double topological_q);

}  // namespace fvn
