#include "fvn/kink.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fvn {

namespace {

double sech_sq(double t) {
    const double c = std::cosh(t);
    const double s = 1.0 / c;  // 1/inf -> 0 for saturated arguments
    return s * s;
}

}  // namespace

void KinkProfile::validate() const {
    if (!(length_L > 0.0)) throw std::invalid_argument("kink.length_L must be > 0");
    if (!(steepness_b > 0.0)) throw std::invalid_argument("kink.steepness_b must be > 0");
}

double phi_of_x(double x, const KinkProfile& k) {
    const double h = 0.5 * k.length_L;
    return KinkProfile::height *
           (std::tanh(k.steepness_b * (x + h)) - std::tanh(k.steepness_b * (x - h)));
}

double dphi_dx(double x, const KinkProfile& k) {
    const double h = 0.5 * k.length_L;
    return KinkProfile::height * k.steepness_b *
           (sech_sq(k.steepness_b * (x + h)) - sech_sq(k.steepness_b * (x - h)));
}

double kinetic_x(double x, const KinkProfile& k) {
    const double d = dphi_dx(x, k);
    return 0.5 * d * d;
}

double s_of_x(double x, const KinkProfile& k) {
    const double kx = kinetic_x(x, k);
    return kx * kx;
}

WallDeltaCheck wall_delta_check(const KinkProfile& k, const std::vector<double>& b_sequence) {
    k.validate();
    for (std::size_t i = 1; i < b_sequence.size(); ++i) {
        if (!(b_sequence[i - 1] < b_sequence[i])) {
            throw std::invalid_argument("wall_delta_check: b_sequence must be increasing");
        }
    }
    for (const double b : b_sequence) {
        if (!(b > 0.0)) {
            throw std::invalid_argument("wall_delta_check: steepness values must be > 0");
        }
        if (b > 1e6) {
            throw std::domain_error("wall_delta_check: unphysical box limit (b > 1e6 approaches "
                                    "a pure thin wall with divergent kinetic density)");
        }
    }

    const double L = k.length_L;
    const long n = 20000;  // midpoint rule at step 1e-4 L over [-L, L]
    const double h = 2.0 * L / n;

    std::vector<double> integrals, peaks;
    integrals.reserve(b_sequence.size());
    peaks.reserve(b_sequence.size());
    for (const double b : b_sequence) {
        KinkProfile kb = k;
        kb.steepness_b = b;
        double sum = 0.0;
        double peak = 0.0;
        for (long i = 0; i < n; ++i) {
            const double x = -L + (i + 0.5) * h;
            const double val = kinetic_x(x, kb);
            sum += val;
            peak = std::max(peak, val);
        }
        integrals.push_back(sum * h);
        peaks.push_back(peak);
    }
    WallDeltaCheck out;
    out.integrals = make_series("wall_integral", b_sequence, std::move(integrals));
    out.peaks = make_series("wall_peak", b_sequence, std::move(peaks));
    return out;
}

double momentum_basis(double k_n, double length_L) {
    const double norm = std::sqrt(2.0 / std::numbers::pi);
    if (k_n == 0.0) return norm * length_L / 2.0;
    return norm * std::sin(k_n * length_L / 2.0) / k_n;
}

}  // namespace fvn
