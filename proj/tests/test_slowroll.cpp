#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fvn/potential.hpp"
#include "fvn/slowroll.hpp"
#include "oracles.hpp"

using namespace fvn;
using doctest::Approx;

namespace {
constexpr double pi = std::numbers::pi;
const PotentialParams defaults{};
}  // namespace

TEST_CASE("hubble_squared") {
    CHECK(hubble_squared(v1(defaults.phi_star, defaults)) ==
          Approx(8.3755134944661049).epsilon(1e-13));
    CHECK(hubble_squared(0.0) == 0.0);
    CHECK(hubble_squared(3.0 / (8.0 * pi)) == Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(hubble_squared(-1e-9), std::domain_error);
}

TEST_CASE("hubble_squared is linear") {
    oracle::Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        const double a = rng.uniform(0.0, 5.0);
        const double v = rng.uniform(0.0, 3.0);
        CHECK(hubble_squared(a * v) == Approx(a * hubble_squared(v)).epsilon(1e-14));
    }
}

TEST_CASE("report at phi_star") {
    const SlowRollReport r = slow_roll_report(defaults.phi_star, defaults, 0.15);
    CHECK(r.h_squared == Approx(8.3755134944661049).epsilon(1e-13));
    CHECK(r.v_dd_abs == Approx(0.30527228018286578).epsilon(1e-13));
    CHECK(r.ratio == Approx(0.036448186775003851).epsilon(1e-12));
    CHECK(r.epsilon_sr == Approx(4.9095460892683371e-6).epsilon(1e-12));
    CHECK(r.eta_sr == Approx(-0.01214939559166795).epsilon(1e-12));
    CHECK(r.passes_flat);
    CHECK(r.passes_negative_pressure);
}

TEST_CASE("eta on the published true-vacuum numbers") {
    // |V''| = 0.504 with (8 pi / 3) V = 4.962, so eta = 0.504 / (3 * 4.962)
    const double v = 4.962 * 3.0 / (8.0 * pi);
    CHECK(slowroll_eta(0.504, v) == Approx(0.033857315598548972).epsilon(1e-13));
    CHECK(slowroll_eta(0.504, v) < 1.0);
}

TEST_CASE("epsilon vanishes at stationary points") {
    const VacuumSolution vs = find_vacua(defaults, 0.0, 2.0 * pi);
    for (const double phi : {vs.phi_F, vs.phi_T, vs.phi_barrier}) {
        const SlowRollReport r = slow_roll_report(phi, defaults, 0.15);
        CHECK(r.epsilon_sr < 1e-18);
        CHECK(r.passes_negative_pressure);
    }
}

TEST_CASE("flatness holds at all four reference points under defaults") {
    const VacuumSolution vs = find_vacua(defaults, 0.0, 2.0 * pi);
    for (const double phi : {vs.phi_F, vs.phi_T, vs.phi_barrier, defaults.phi_star}) {
        const SlowRollReport r = slow_roll_report(phi, defaults, 0.15);
        CHECK(r.ratio < 0.15);
        CHECK(r.passes_flat);
    }
}

TEST_CASE("non-positive potential is a domain error") {
    PotentialParams origin = defaults;
    origin.phi_star = 0.0;  // v1(0) = 0 there
    CHECK_THROWS_AS(slow_roll_report(0.0, origin, 0.15), std::domain_error);
}

TEST_CASE("flatness threshold is configurable") {
    const SlowRollReport tight = slow_roll_report(defaults.phi_star, defaults, 0.01);
    CHECK_FALSE(tight.passes_flat);
    const SlowRollReport loose = slow_roll_report(defaults.phi_star, defaults, 0.15);
    CHECK(loose.passes_flat);
}
