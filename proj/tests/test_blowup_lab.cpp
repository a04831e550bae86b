#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "singlab/blowup_lab.hpp"

using namespace singlab;

TEST_CASE("critical exponents") {
    auto a = critical_exponents({3, 2.0, 1, 0.0, 1});
    CHECK(*a.p_sobolev == doctest::Approx(5.0));
    auto b = critical_exponents({7, 2.0, 2, 0.0, 1});
    CHECK(*b.p_sobolev == doctest::Approx(11.0 / 3.0));
    auto c = critical_exponents({17, 2.0, 1, 0.0, 1});
    CHECK(*c.p_uniqueness == doctest::Approx(9.0 / 5.0).epsilon(1e-12));
    auto d = critical_exponents({2, 2.0, 2, 0.0, 1});
    CHECK_FALSE(d.p_sobolev.has_value());
    CHECK(d.absent.size() >= 2);
    // fourth-order family exponent 1 + 2(4l-1)/N
    CHECK(critical_exponents({7, 2.0, 1, 0.0, 2}).p_kuramoto ==
          doctest::Approx(3.0));
    // quasilinear fourth-order variant
    auto e = critical_exponents({9, 2.0, 2, 1.0, 1});
    CHECK(*e.p_sobolev_quasi == doctest::Approx((2.0 * 9 + 6.0) / (9 - 6.0)));
}

TEST_CASE("singular stationary amplitudes") {
    auto s = emden_fowler_sss(3, 4.0);
    CHECK(s.exists);
    CHECK(s.mu == doctest::Approx(2.0 / 3.0));
    CHECK(s.C_star == doctest::Approx(std::cbrt(2.0 / 9.0)).epsilon(1e-14));
    CHECK(s.residual < 1e-10);

    auto s5 = emden_fowler_sss(3, 5.0);
    CHECK(s5.C_star == doctest::Approx(std::pow(0.25, 0.25)).epsilon(1e-14));
    auto s10 = emden_fowler_sss(10, 2.0);
    CHECK(s10.C_star == doctest::Approx(12.0).epsilon(1e-14));
    // equilibrium identity C^(p-1) = mu (N-2-mu)
    CHECK(std::pow(s.C_star, 3.0) == doctest::Approx(2.0 / 9.0).epsilon(1e-13));
    // outside the existence range
    CHECK_FALSE(emden_fowler_sss(3, 2.5).exists);
}

TEST_CASE("shooting: figure presets with the independent oracle") {
    for (const char* name : {"fig2a", "fig2b", "fig3", "fig4a", "fig4b"}) {
        auto pr = shoot_preset(name);
        auto adaptive =
            emden_fowler_shoot(pr.N, pr.p, pr.phi0, pr.phi0p, pr.s_max, false);
        CHECK(adaptive.label == pr.expected);
        auto oracle =
            emden_fowler_shoot(pr.N, pr.p, pr.phi0, pr.phi0p, pr.s_max, true);
        CHECK(oracle.label == pr.expected);
    }
    CHECK_THROWS(shoot_preset("fig9"));
}

TEST_CASE("shooting details: bands, mirroring, hamiltonian") {
    auto a = emden_fowler_shoot(3, 4.0, 0.1, 0.0, 60.0);
    CHECK(a.label == ShootLabel::StabilizePlus);
    CHECK(a.final_value ==
          doctest::Approx(emden_fowler_sss(3, 4.0).C_star).epsilon(1e-4));

    auto b = emden_fowler_shoot(3, 4.0, -0.1, 0.0, 60.0);
    CHECK(b.label == ShootLabel::StabilizeMinus);
    CHECK(b.final_value == doctest::Approx(-a.final_value).epsilon(1e-10));

    // the second-equilibrium preset crosses zero once
    auto c = emden_fowler_shoot(3, 4.0, 0.1, -0.5, 60.0);
    CHECK(c.label == ShootLabel::StabilizeMinus);
    CHECK(c.zero_count == 1);

    auto p = emden_fowler_shoot(3, 5.0, 0.3, 0.0, 200.0);
    CHECK(p.label == ShootLabel::Periodic);
    CHECK(p.hamiltonian_drift < 1e-6);
    CHECK(p.maxima.size() >= 20);

    auto s = emden_fowler_shoot(3, 6.0, 0.9, 0.0, 30.0);
    CHECK(s.label == ShootLabel::Spiral);
    for (size_t i = 1; i < s.maxima.size(); ++i)
        CHECK(s.maxima[i] >= 1.01 * s.maxima[i - 1]);
}

TEST_CASE("autonomous-form coefficients at the critical exponent") {
    auto a3 = autonomous_form_coefficient(3);
    CHECK(a3.damping == 0.0);
    CHECK(a3.linear_derived == doctest::Approx(-0.25));
    CHECK(a3.linear_printed == doctest::Approx(-0.125));
    CHECK(a3.discrepancy);
    auto a6 = autonomous_form_coefficient(6);
    CHECK(a6.linear_derived == doctest::Approx(-4.0));
}

TEST_CASE("regular profile shoot: zero counts and amplitude bisection") {
    auto r = regular_profile_shoot(3, 4.0, 0.1, 40.0);
    CHECK(r.zero_count >= 0);
    // odd symmetry
    auto rm = regular_profile_shoot(3, 4.0, -0.1, 40.0);
    CHECK(rm.zero_count == r.zero_count);
    // a zero-count transition exists between small and large amplitudes,
    // located by bisection on the count
    auto count = [](double a) {
        return regular_profile_shoot(3, 4.0, a, 40.0).zero_count;
    };
    double lo = 0.1, hi = 2.0;
    int clo = count(lo), chi = count(hi);
    REQUIRE(clo != chi);
    for (int it = 0; it < 30; ++it) {
        double mid = 0.5 * (lo + hi);
        if (count(mid) == clo)
            lo = mid;
        else
            hi = mid;
    }
    CHECK(hi - lo < 1e-8);
    CHECK(count(lo) != count(hi));
}

TEST_CASE("biharmonic reduction") {
    auto b = biharmonic_reduction(5, 3.0);
    CHECK(b.mu == doctest::Approx(2.0));
    CHECK(b.A == doctest::Approx(6.0));
    CHECK(b.D == doctest::Approx(-8.0));
    CHECK_FALSE(b.exists);

    // exact rational coefficients agree with the double evaluation
    auto exact = biharmonic_coefficients_exact(5, rat(2));
    CHECK(to_double(exact[0]) == doctest::Approx(b.A));
    CHECK(to_double(exact[1]) == doctest::Approx(b.B));
    CHECK(to_double(exact[2]) == doctest::Approx(b.C));
    CHECK(to_double(exact[3]) == doctest::Approx(b.D));

    // existing case: amplitude verified by the radial residual oracle
    auto g = biharmonic_reduction(8, 3.0);
    CHECK(g.exists);
    CHECK(g.C_star == doctest::Approx(8.0).epsilon(1e-12));
    CHECK(g.residual < 1e-10);

    // the printed existence edge p = N/(N-4) for N > 4
    auto edge_below = biharmonic_reduction(8, 1.9);
    auto edge_above = biharmonic_reduction(8, 2.1);
    CHECK_FALSE(edge_below.exists);
    CHECK(edge_above.exists);
}

TEST_CASE("reaction-operator singular equilibrium and exponents") {
    CHECK(std::abs(fk_singular_equilibrium_residual(3, 1.0)) < 1e-12);
    CHECK(std::abs(fk_singular_equilibrium_residual(11, 0.1)) < 1e-10);
    CHECK(std::abs(fk_singular_equilibrium_residual(7, 3.0)) < 1e-12);
    CHECK_THROWS_AS(fk_singular_equilibrium_residual(2, 1.0), std::invalid_argument);

    auto e11 = fk_exponents(11);
    CHECK(*e11.delta == doctest::Approx(3.0).epsilon(1e-15));
    CHECK_FALSE(e11.oscillatory);
    auto e3 = fk_exponents(3);
    CHECK(*e3.b == doctest::Approx(std::sqrt(7.0) / 2.0).epsilon(1e-15));
    CHECK(e3.oscillatory);
    auto e10 = fk_exponents(10);
    CHECK(e10.hardy_lhs == 16.0);
    CHECK(e10.hardy_rhs == 16.0);
    CHECK(e10.hardy_admissible);
    CHECK_FALSE(fk_exponents(9).hardy_admissible);
}

TEST_CASE("linearized spectrum by two-sided shooting") {
    auto evs = fk_spectrum_shoot(11, 10);
    REQUIRE(evs.size() == 5);
    for (size_t i = 0; i < evs.size(); ++i) {
        CHECK(evs[i].lambda < 0.0);
        if (i > 0) CHECK(evs[i].lambda < evs[i - 1].lambda);
        CHECK(evs[i].small_y_exponent == doctest::Approx(-3.0).epsilon(1e-3));
    }
    auto at = [&](int k) {
        for (const auto& e : evs)
            if (e.k == k) return e.lambda;
        throw std::runtime_error("missing k");
    };
    CHECK(at(2) < 0.0);
    CHECK(std::abs(at(8) / (-4.0) - 1.0) < 0.15);
    CHECK(std::abs(at(10) / (-5.0) - 1.0) < 0.15);
    CHECK_THROWS_AS(fk_spectrum_shoot(10, 4), std::invalid_argument);
}

TEST_CASE("inner profile of the quasi-stationary region") {
    auto prof = fk_inner_profile(3);
    CHECK(prof.band_width < 1.0);
    // decreasing profile
    CHECK(prof.traj->at(10.0)[0] < prof.traj->at(1.0)[0]);
    // region scaling exponents assembled from alpha_k
    CHECK(prof.xi_scale_exponent(2.0) == doctest::Approx(1.0));
    CHECK(prof.time_scale_exponent(2.0) == doctest::Approx(-1.0));
}

TEST_CASE("rate catalog") {
    auto r = blowup_rates({-3.0, 3.0, 2.0, 2});
    CHECK(r.alpha_k == doctest::Approx(2.0));
    CHECK(r.linf_coefficient == doctest::Approx(3.0));
    CHECK(r.matched_exponential == doctest::Approx(3.0));
    CHECK(r.log_corrected == doctest::Approx(1.0));
    CHECK(r.standing_wave == doctest::Approx(0.0));
    CHECK(blowup_rates({-1.0, 1.0, 2.0, 2}).critical_sobolev ==
          doctest::Approx(5.0 / 4.0));
    // zero mode order: critical rate 1/4 via the printed rule
    RateInputs ri;
    ri.beta_order = 0;
    CHECK(blowup_rates(ri).critical_sobolev == doctest::Approx(1.0 / 4.0));
    CHECK(std::isnan(blowup_rates(ri).standing_wave));
    // homogeneity: alpha linear in |lambda|
    CHECK(blowup_rates({-6.0, 3.0, 2.0, 2}).alpha_k ==
          doctest::Approx(2.0 * blowup_rates({-3.0, 3.0, 2.0, 2}).alpha_k));
    CHECK_THROWS_AS(blowup_rates({-1.0, 0.0, 2.0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(blowup_rates({-1.0, 1.0, 1.0, 2}), std::invalid_argument);
}

TEST_CASE("critical stationary profile") {
    CHECK(loewner_nirenberg_value(3, 0.0) == doctest::Approx(1.0));
    for (double r : {1e-3, 0.5, 1.0, 10.0})
        CHECK(std::abs(loewner_nirenberg_residual(3, r)) < 1e-10);
    for (double r : {0.3, 1.0, 4.0})
        CHECK(std::abs(loewner_nirenberg_residual(4, r)) < 1e-10);
    // verified at 20 radii across two decades
    for (int i = 0; i < 20; ++i)
        CHECK(std::abs(loewner_nirenberg_residual(3, 0.1 * std::pow(10, i / 10.0))) <
              1e-10);
}

TEST_CASE("quotient constants and trial inequalities") {
    auto hr = hardy_constants(
        3, {[](double r) { return std::exp(-r * r); },
            [](double r) { return r * std::exp(-r); }});
    CHECK(hr.c_hardy == doctest::Approx(0.25));
    CHECK(hr.axisym_solenoid == doctest::Approx(25.0 / 68.0).epsilon(1e-15));
    CHECK_FALSE(hr.formula_matches_value);  // printed formula disagrees at N = 3
    CHECK(hr.all_quotients_pass);
    for (double q : hr.quotients) CHECK(q >= 0.25);

    auto h10 = hardy_constants(10, {});
    CHECK(h10.c_hardy == doctest::Approx(16.0));
}

TEST_CASE("profile reaches zero for orders three and four; order two decays") {
    auto h3 = hamilton_jacobi_profile(3, 1.0);
    CHECK(h3.reached_zero);
    CHECK(h3.monotone);
    CHECK(h3.endpoint_oracle_gap < 1e-6);

    auto h4 = hamilton_jacobi_profile(4, 1.0);
    CHECK(h4.reached_zero);
    CHECK(h4.monotone);
    CHECK(h4.endpoint_oracle_gap < 1e-6);

    // order two: the exact profile is the Gaussian exp(-f zeta^2), positive
    // for every finite zeta; recorded as a counterexample to compact support
    auto h2 = hamilton_jacobi_profile(2, 1.0);
    CHECK_FALSE(h2.reached_zero);
    CHECK(h2.monotone);
    // the Gaussian closed form satisfies the profile equation identically
    for (double z : {0.5, 1.0, 2.0}) {
        double h = std::exp(-z * z);
        double hp = -2.0 * z * h;
        double m = 0.5 * (1.0 - std::exp(-z * z));
        double rho_half = 0.0;  // (1-k)/k + 1/2 at k = 2
        double res = -(rho_half)*z * hp - (m / z) * hp - h + h * h;
        CHECK(std::abs(res) < 1e-15);
    }

    CHECK_THROWS_AS(hamilton_jacobi_profile(1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(hamilton_jacobi_profile(2, -1.0), std::invalid_argument);
}

TEST_CASE("residual-verified profiles pass at 20 radii across two decades") {
    auto sss = emden_fowler_sss(3, 4.0);
    for (int i = 0; i < 20; ++i) {
        double r = 0.1 * std::pow(100.0, i / 19.0);
        // scaled residual of C r^-mu in the radial equation
        double u = sss.C_star * std::pow(r, -sss.mu);
        double up = -sss.mu * u / r;
        double upp = sss.mu * (sss.mu + 1.0) * u / (r * r);
        double res = upp + 2.0 / r * up + std::pow(u, 4.0);
        CHECK(std::abs(res) * std::pow(r, sss.mu + 2.0) < 1e-10);
        CHECK(std::abs(fk_singular_equilibrium_residual(3, r)) < 1e-12);
        CHECK(std::abs(loewner_nirenberg_residual(3, r)) < 1e-10);
    }
    // inner profile: the far-field combination stays within a unit band
    auto prof = fk_inner_profile(3);
    CHECK(prof.band_width <= 1.0);
}

TEST_CASE("separatrix data between the two basins reaches zero") {
    // for fixed phi0, bisect the initial slope between trajectories that
    // stabilize at +C* and at -C*; the boundary trajectory decays to zero
    auto ends_plus = [](double s) {
        auto o = emden_fowler_shoot(3, 4.0, 0.1, s, 40.0);
        return o.final_value > 0.0;
    };
    double lo = -0.5, hi = 0.0;
    REQUIRE(ends_plus(hi));
    REQUIRE_FALSE(ends_plus(lo));
    for (int it = 0; it < 60; ++it) {
        double mid = 0.5 * (lo + hi);
        (ends_plus(mid) ? hi : lo) = mid;
    }
    auto sep = emden_fowler_shoot(3, 4.0, 0.1, 0.5 * (lo + hi), 40.0);
    CHECK(sep.label == ShootLabel::ReachesZero);
}
