#include "fvn/potential.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace fvn {

namespace {

std::string param_string(const PotentialParams& p) {
    return "m=" + std::to_string(p.m) + ", phi_star=" + std::to_string(p.phi_star) +
           ", cos_coeff=" + std::to_string(p.cos_coeff);
}

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw std::runtime_error(std::string("non-finite evaluation of ") + what);
    }
}

}  // namespace

void PotentialParams::validate() const {
    if (!(m > 0.0)) throw std::invalid_argument("potential.m must be > 0");
    if (!(cos_coeff > 0.0)) throw std::invalid_argument("potential.cos_coeff must be > 0");
    if (rho_init < 0.0) throw std::invalid_argument("potential.rho_init must be >= 0");
}

double v1(double phi, const PotentialParams& p) {
    const double d = phi - p.phi_star;
    return p.cos_coeff * (1.0 - std::cos(phi)) + 0.5 * p.m * p.m * d * d;
}

double v_total(double phi, const PotentialParams& p) {
    return p.rho_init + v1(phi, p);
}

double v1_d1(double phi, const PotentialParams& p) {
    return p.cos_coeff * std::sin(phi) + p.m * p.m * (phi - p.phi_star);
}

double v1_d2(double phi, const PotentialParams& p) {
    return p.cos_coeff * std::cos(phi) + p.m * p.m;
}

double chaotic_potential(double phi, double m) {
    return 0.5 * m * m * phi * phi;
}

double chaotic_phi_of_t(double t, double phi0_tilde, double m) {
    return phi0_tilde - m / std::sqrt(12.0 * std::numbers::pi) * t;
}

double guth_bound() {
    return std::sqrt(60.0 / (2.0 * std::numbers::pi));
}

double phi_star_formula(double m) {
    if (!(m > 0.0)) {
        throw std::domain_error("phi_star_formula: m must be > 0");
    }
    return std::pow(3.0 / (16.0 * std::numbers::pi), 0.25) / std::sqrt(m);
}

namespace {

// Bisects a sign change of v1_d1 to an interval below 1e-12, then polishes
// with one Newton step (kept only if it stays inside the bracket).
double refine_root(const PotentialParams& p, double a, double b, double fa) {
    while (b - a > 1e-12) {
        const double mid = 0.5 * (a + b);
        const double fm = v1_d1(mid, p);
        require_finite(fm, "v1_d1");
        if (fm == 0.0) return mid;
        if ((fa < 0.0) == (fm < 0.0)) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    double x = 0.5 * (a + b);
    const double d2 = v1_d2(x, p);
    if (d2 != 0.0) {
        const double step = v1_d1(x, p) / d2;
        const double polished = x - step;
        if (polished >= a - 1e-12 && polished <= b + 1e-12) x = polished;
    }
    return x;
}

}  // namespace

VacuumSolution find_vacua(const PotentialParams& p, double search_lo, double search_hi) {
    if (!(search_lo < search_hi)) {
        throw std::invalid_argument("find_vacua: search_lo must be below search_hi");
    }

    const double max_step = 1e-3;
    const long n = std::max(2L, static_cast<long>(std::ceil((search_hi - search_lo) / max_step)));

    std::vector<double> roots;
    double x_prev = search_lo;
    double f_prev = v1_d1(x_prev, p);
    require_finite(f_prev, "v1_d1");
    if (f_prev == 0.0) roots.push_back(x_prev);
    for (long i = 1; i <= n; ++i) {
        const double x = search_lo + (search_hi - search_lo) * i / n;
        const double f = v1_d1(x, p);
        require_finite(f, "v1_d1");
        if (f == 0.0) {
            roots.push_back(x);
        } else if (f_prev != 0.0 && (f_prev < 0.0) != (f < 0.0)) {
            roots.push_back(refine_root(p, x_prev, x, f_prev));
        }
        x_prev = x;
        f_prev = f;
    }

    std::vector<double> minima, maxima;
    for (const double r : roots) {
        const double curv = v1_d2(r, p);
        if (curv > 0.0) {
            minima.push_back(r);
        } else if (curv < 0.0) {
            maxima.push_back(r);
        }
    }

    if (minima.size() < 2) {
        throw std::domain_error("no-double-well: v1 has fewer than two minima in the search "
                                "interval (" + param_string(p) + ")");
    }

    // Two deepest minima; the barrier is the highest maximum between them.
    std::sort(minima.begin(), minima.end(),
              [&](double a, double b) { return v1(a, p) < v1(b, p); });
    double lo_min = minima[0];
    double hi_min = minima[1];
    if (lo_min > hi_min) std::swap(lo_min, hi_min);

    double barrier = std::numeric_limits<double>::quiet_NaN();
    double barrier_v = -std::numeric_limits<double>::infinity();
    for (const double mx : maxima) {
        if (mx > lo_min && mx < hi_min && v1(mx, p) > barrier_v) {
            barrier = mx;
            barrier_v = v1(mx, p);
        }
    }
    if (!std::isfinite(barrier)) {
        throw std::domain_error("no-double-well: no barrier maximum between the two minima (" +
                                param_string(p) + ")");
    }

    VacuumSolution vs;
    const double v_lo = v1(lo_min, p);
    const double v_hi = v1(hi_min, p);
    require_finite(v_lo, "v1");
    require_finite(v_hi, "v1");
    vs.phi_barrier = barrier;
    const double gap = std::abs(v_lo - v_hi);
    if (gap <= 1e-12) {
        // Degenerate wells: report a zero gap instead of erroring; keep the
        // published left/right convention for the labels.
        vs.phi_F = lo_min;
        vs.phi_T = hi_min;
        vs.delta_E = 0.0;
        vs.length_L = std::numeric_limits<double>::infinity();
        vs.degenerate = true;
    } else {
        // The false vacuum is the higher minimum.
        if (v_lo > v_hi) {
            vs.phi_F = lo_min;
            vs.phi_T = hi_min;
        } else {
            vs.phi_F = hi_min;
            vs.phi_T = lo_min;
        }
        vs.delta_E = gap;
        vs.length_L = 1.0 / vs.delta_E;
        vs.degenerate = false;
    }
    return vs;
}

BracketTerms bracket_terms(const PotentialParams& p, const VacuumSolution& vs) {
    if (p.m == 0.0) {
        throw std::domain_error("bracket_terms: m must be nonzero");
    }
    BracketTerms bt;
    bt.bracket_A = (1.0 + p.m * p.m) / 2.0;
    bt.bracket_B = vs.phi_T * vs.phi_F / 6.0;
    bt.bracket = bt.bracket_A - bt.bracket_B;
    bt.gap_from_brackets = bt.bracket / 2.0;
    return bt;
}

double extended_sg(double phi, const ExtendedSGParams& q) {
    const double d = phi - q.phi_0;
    const double s = phi * phi - q.phi_0 * q.phi_0;
    return q.c1 * d * d - 4.0 * q.c2 * phi * q.phi_0 * d * d + q.c2 * s * s;
}

double lagrangian_density(double phi, double dphi_dx, const PotentialParams& p) {
    return 0.5 * dphi_dx * dphi_dx - v_total(phi, p);
}

double bogomilnyi_bound(double phi_0, double phi_C, double bracket, double topological_q) {
    const double d = phi_0 - phi_C;
    return std::abs(topological_q) + 0.5 * d * d * bracket;
}

}  // namespace fvn
