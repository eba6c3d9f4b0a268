#pragma once

namespace fvn {

// Planck normalization used throughout: hbar = c = G = 1, hence the Planck
// mass, time and length are all exactly 1. Every module takes its constants
// from here instead of hard-coding them.
struct PlanckUnits {
    double m_p = 1.0;
    double hbar = 1.0;
    double c = 1.0;
    double G = 1.0;
    double t_p = 1.0;
    double l_p = 1.0;
};

constexpr PlanckUnits planck_units() { return {}; }

// Electron mass in Planck units and the effective pair mass m* = 2 m_e.
struct MassConstants {
    double m_e = 4.338e-20;
    double m_star = 2.0 * m_e;
};

}  // namespace fvn
