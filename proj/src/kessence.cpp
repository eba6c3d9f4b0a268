#include "fvn/kessence.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fvn/slowroll.hpp"

namespace fvn {

void KEssenceModel::validate() const {
    if (!(f2 > 0.0)) throw std::invalid_argument("kessence.f2 must be > 0");
    if (eps0 < 0.0) throw std::invalid_argument("kessence.eps0 must be >= 0");
    if (!(v0 > 0.0)) throw std::invalid_argument("kessence.v0 must be > 0");
}

double f_of_x(double x_val, const KEssenceModel& m) {
    const double d = x_val - m.x0;
    return m.f0 + m.f2 * d * d;
}

double f_x(double x_val, const KEssenceModel& m) {
    return 2.0 * m.f2 * (x_val - m.x0);
}

double f_xx(double, const KEssenceModel& m) {
    return 2.0 * m.f2;
}

double pressure(double phi_val, double x_val, const KEssenceModel& m, const PotentialParams& p) {
    return v1(phi_val, p) * f_of_x(x_val, m);
}

double density(double phi_val, double x_val, const KEssenceModel& m, const PotentialParams& p) {
    return v1(phi_val, p) * (2.0 * x_val * f_x(x_val, m) - f_of_x(x_val, m));
}

double pressure_const_bg(double x_val, const KEssenceModel& m) {
    return m.v0 * f_of_x(x_val, m);
}

double density_const_bg(double x_val, const KEssenceModel& m) {
    return m.v0 * (2.0 * x_val * f_x(x_val, m) - f_of_x(x_val, m));
}

double density_wall_approx(const KEssenceModel& m) {
    return m.v0 * (4.0 * m.f2 * m.x0 * m.eps0 - m.f0);
}

double equation_of_state(double x_val, const KEssenceModel& m) {
    const double f = f_of_x(x_val, m);
    const double denom = 2.0 * x_val * f_x(x_val, m) - f;
    if (denom == 0.0) {
        throw std::domain_error("eos-singular: 2 X F_X - F vanishes at X = " +
                                std::to_string(x_val));
    }
    return f / denom;
}

double sound_speed_sq(double x_val, const KEssenceModel& m) {
    const double fx = f_x(x_val, m);
    const double denom = fx + 2.0 * x_val * f_xx(x_val, m);
    if (denom == 0.0) {
        throw std::domain_error("cs2-singular: F_X + 2 X F_XX vanishes at X = " +
                                std::to_string(x_val));
    }
    return fx / denom;
}

double paper_cs2_form(double x0, double eps0) {
    if (eps0 == 0.0) return x0 > 0.0 ? 0.0 : 1.0;
    return 1.0 / (1.0 + 4.0 * x0 * (1.0 + x0 / (2.0 * eps0)));
}

double epsilon_decay(double t, double eps0, double v0) {
    return eps0 * std::exp(-8.0 * std::numbers::pi * v0 * t);
}

EosPoint eos_point(double phi_val, double x_val, const KEssenceModel& m, const PotentialParams& p) {
    EosPoint pt;
    pt.x_val = x_val;
    pt.pressure = pressure(phi_val, x_val, m, p);
    pt.density = density(phi_val, x_val, m, p);
    pt.w = pt.pressure / pt.density;
    pt.cs2 = sound_speed_sq(x_val, m);
    return pt;
}

namespace {

struct OdeContext {
    const KEssenceModel& m;
    const PotentialParams& p;
    bool constant_potential;
    double hubble_const;  // used in the constant-potential reduction
    double coef_sign;     // sign of the phidd coefficient at t = 0
};

double phidd(const OdeContext& ctx, double t, double phi, double dphi) {
    const double x = 0.5 * dphi * dphi;
    const double fx = f_x(x, ctx.m);
    const double coef = fx + 2.0 * x * f_xx(x, ctx.m);
    if (coef == 0.0 || (coef < 0.0) != (ctx.coef_sign < 0.0)) {
        throw std::domain_error("degenerate-kinetic: F_X + 2 X F_XX crossed zero at t = " +
                                std::to_string(t));
    }
    double damping, force;
    if (ctx.constant_potential) {
        damping = 3.0 * ctx.hubble_const * fx * dphi;
        force = 0.0;  // V_phi dropped in the constant-V reduction
    } else {
        const double v = v_total(phi, ctx.p);
        if (!(v > 0.0)) {
            throw std::domain_error("integrate_field_equation: potential must stay positive "
                                    "along the trajectory");
        }
        damping = 3.0 * std::sqrt(hubble_squared(v)) * fx * dphi;
        force = (2.0 * x * fx - f_of_x(x, ctx.m)) * v1_d1(phi, ctx.p) / v;
    }
    return -(damping + force) / coef;
}

}  // namespace

FieldTrajectory integrate_field_equation(const KEssenceModel& m, const PotentialParams& p,
                                         double phi_init, double dphi_init,
                                         double t_end, double dt, bool constant_potential) {
    if (!(dt > 0.0)) throw std::invalid_argument("integrate_field_equation: dt must be > 0");
    if (!(t_end >= 0.0)) throw std::invalid_argument("integrate_field_equation: t_end must be >= 0");

    OdeContext ctx{m, p, constant_potential,
                   constant_potential ? std::sqrt(8.0 * std::numbers::pi / 3.0 * m.v0) : 0.0,
                   0.0};
    {
        const double x0val = 0.5 * dphi_init * dphi_init;
        const double coef0 = f_x(x0val, m) + 2.0 * x0val * f_xx(x0val, m);
        if (coef0 == 0.0) {
            throw std::domain_error("degenerate-kinetic: F_X + 2 X F_XX crossed zero at t = 0");
        }
        ctx.coef_sign = coef0 < 0.0 ? -1.0 : 1.0;
    }

    const long n_steps =
        t_end == 0.0 ? 0L : std::max(1L, static_cast<long>(std::ceil(t_end / dt - 1e-12)));

    std::vector<double> ts, phis, dphis;
    ts.reserve(static_cast<std::size_t>(n_steps) + 1);
    phis.reserve(static_cast<std::size_t>(n_steps) + 1);
    dphis.reserve(static_cast<std::size_t>(n_steps) + 1);

    double t = 0.0, phi = phi_init, dphi = dphi_init;
    ts.push_back(t);
    phis.push_back(phi);
    dphis.push_back(dphi);

    for (long i = 0; i < n_steps; ++i) {
        const double t_next = i + 1 == n_steps ? t_end : (i + 1) * dt;
        const double h = t_next - t;

        const double k1p = dphi;
        const double k1d = phidd(ctx, t, phi, dphi);
        const double k2p = dphi + 0.5 * h * k1d;
        const double k2d = phidd(ctx, t + 0.5 * h, phi + 0.5 * h * k1p, dphi + 0.5 * h * k1d);
        const double k3p = dphi + 0.5 * h * k2d;
        const double k3d = phidd(ctx, t + 0.5 * h, phi + 0.5 * h * k2p, dphi + 0.5 * h * k2d);
        const double k4p = dphi + h * k3d;
        const double k4d = phidd(ctx, t + h, phi + h * k3p, dphi + h * k3d);

        phi += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
        dphi += h / 6.0 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d);
        t = t_next;

        if (!std::isfinite(phi) || !std::isfinite(dphi)) {
            throw std::runtime_error("integrate_field_equation: non-finite state at t = " +
                                     std::to_string(t));
        }
        ts.push_back(t);
        phis.push_back(phi);
        dphis.push_back(dphi);
    }

    FieldTrajectory traj;
    traj.phi = make_series("phi", ts, std::move(phis));
    traj.dphi = make_series("dphi_dt", std::move(ts), std::move(dphis));
    return traj;
}

}  // namespace fvn
