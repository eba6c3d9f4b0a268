#include "fvn/nucleation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fvn/quadrature.hpp"
#include "fvn/units.hpp"

namespace fvn {

void NucleationInputs::validate() const {
    if (mass_M > 1.0) {
        throw std::invalid_argument("nucleation.mass_M must be <= 1 (at most the Planck mass)");
    }
}

NucleationInputs with_gap_from(const NucleationInputs& base, const VacuumSolution& vs) {
    if (vs.degenerate || !(vs.delta_E > 0.0)) {
        throw std::invalid_argument("with_gap_from: degenerate gap has no finite length scale");
    }
    NucleationInputs n = base;
    n.alpha_gap = vs.delta_E;
    n.length_L = vs.length_L;
    return n;
}

double cdl_rate(const NucleationInputs& n) {
    // rho_t bound taken as equality.
    const double rho_t = 60.0 / (4.0 * std::numbers::pi) * n.m_field * n.m_field;
    const double s_t = -3.0 / 8.0 * rho_t;
    return n.prefactor_A * std::exp(-n.s_bounce + s_t);
}

double garriga_density(const NucleationInputs& n) {
    const double field_term = n.e_charge * n.e_field_E0 * n.e_field_E0;
    double under_root = n.mass_M * n.mass_M;
    if (field_term != 0.0) {
        if (n.hubble_H == 0.0) {
            throw std::domain_error("garriga_density: hubble_H must be nonzero when the "
                                    "applied-field term is nonzero");
        }
        under_root += field_term / (n.hubble_H * n.hubble_H);
    }
    return 1.0 / (2.0 * std::numbers::pi) * std::sqrt(under_root) * std::exp(-n.s_euclid);
}

double transfer_cosh_factor(double x_vantage, double length_L) {
    const double arg =
        2.0 * std::sqrt(x_vantage / (2.0 * length_L)) - std::sqrt(length_L / (2.0 * x_vantage));
    return std::cosh(arg);
}

double transfer_closed_form(const NucleationInputs& n, double c1, double c2) {
    if (!(n.x_vantage > 0.0)) {
        throw std::domain_error("transfer_closed_form: x_vantage must be > 0");
    }
    if (!(n.length_L > 0.0)) {
        throw std::domain_error("transfer_closed_form: length_L must be > 0");
    }
    const MassConstants mc;
    const double exponent = -n.alpha_gap * n.length_L * (n.length_L / (2.0 * n.x_vantage));
    return c1 * c2 / mc.m_star * transfer_cosh_factor(n.x_vantage, n.length_L) *
           std::exp(exponent);
}

double normalization_constant(double bracket_i, double length_L) {
    if (!(length_L > 0.0)) {
        throw std::domain_error("normalization_constant: length_L must be > 0");
    }
    if (!std::isfinite(bracket_i)) {
        throw std::invalid_argument("normalization_constant: bracket_i must be finite");
    }
    const double upper = length_L * length_L / (2.0 * std::numbers::pi);
    if (bracket_i < 0.0 && 2.0 * (-bracket_i) * upper * upper > 700.0) {
        throw std::range_error("normalization_constant: integrand exp(-2 bracket u^2) "
                               "overflows double range for bracket_i = " +
                               std::to_string(bracket_i));
    }
    const double integral = adaptive_simpson(
        [bracket_i](double u) { return std::exp(-2.0 * bracket_i * u * u); }, 0.0, upper, 1e-11);
    return 1.0 / std::sqrt(integral);
}

double gaussian_functional(double alpha, double norm_c, const GridSeries& field,
                           const GridSeries& center) {
    if (field.xs.size() != center.xs.size() || field.xs != center.xs) {
        throw std::invalid_argument("gaussian_functional: field and center must share abscissae");
    }
    if (field.xs.size() != field.ys.size() || center.xs.size() != center.ys.size()) {
        throw std::invalid_argument("gaussian_functional: ragged grid series");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < field.xs.size(); ++i) {
        const double d = field.ys[i] - center.ys[i];
        sum += d * d * trapezoid_weight(field.xs, i);
    }
    return norm_c * std::exp(-alpha * sum);
}

namespace {

double gaussian(const WaveFunctional& psi, double u) {
    const double d = u - psi.center;
    return psi.norm_c * std::exp(-psi.width_alpha * d * d);
}

double gaussian_dd(const WaveFunctional& psi, double u) {
    const double d = u - psi.center;
    const double a = psi.width_alpha;
    return gaussian(psi, u) * (4.0 * a * a * d * d - 2.0 * a);
}

}  // namespace

TransferResult transfer_discretized(const WaveFunctional& psi_i, const WaveFunctional& psi_f,
                                    double phi_0, double upper_limit) {
    if (!(upper_limit > 0.0)) {
        throw std::invalid_argument("transfer_discretized: upper_limit must be > 0");
    }
    const double lo = std::max(0.0, phi_0);  // theta(u - phi_0), half-open convention
    TransferResult result;
    if (lo >= upper_limit) {
        result.underflow = true;
        return result;
    }
    const auto integrand = [&](double u) {
        return gaussian(psi_i, u) * gaussian_dd(psi_f, u) -
               gaussian(psi_f, u) * gaussian_dd(psi_i, u);
    };
    const MassConstants mc;
    const double integral = adaptive_simpson(integrand, lo, upper_limit, 1e-11);
    if (std::abs(integral) < 1e-300) {
        result.underflow = true;
        result.value = 0.0;
        return result;
    }
    result.value = integral / (2.0 * mc.m_e);
    return result;
}

double golden_rule_rate(double t_matrix, double rho_states) {
    if (rho_states < 0.0) {
        throw std::domain_error("golden_rule_rate: rho_states must be >= 0");
    }
    return 2.0 * std::numbers::pi * t_matrix * t_matrix * rho_states;
}

}  // namespace fvn
