#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "singlab/quadrature.hpp"
#include "singlab/scaling.hpp"

using namespace singlab;

namespace {

FrameSample random_sample(std::mt19937_64& rng, bool positive_time) {
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    FrameSample s;
    s.x = {U(rng) + 1.5, U(rng), U(rng)};
    s.t = positive_time ? 0.5 + 0.4 * U(rng) : -0.2 - 0.4 * (U(rng) + 1.1);
    s.u = {U(rng), U(rng), U(rng)};
    s.p = U(rng);
    return s;
}

double sample_gap(const FrameSample& a, const FrameSample& b) {
    double g = std::max(std::abs(a.t - b.t), std::abs(a.p - b.p));
    for (int i = 0; i < 3; ++i)
        g = std::max({g, std::abs(a.x[static_cast<size_t>(i)] - b.x[static_cast<size_t>(i)]),
                      std::abs(a.u[static_cast<size_t>(i)] - b.u[static_cast<size_t>(i)])});
    return g;
}

}  // namespace

TEST_CASE("round trip identity for every frame kind on 100 samples") {
    std::mt19937_64 rng(42);
    for (FrameKind k : {FrameKind::BlowupSimilarity, FrameKind::GlobalSimilarity,
                        FrameKind::Burnett, FrameKind::Twistor, FrameKind::CkRescale}) {
        ScalingFrame fr;
        fr.kind = k;
        fr.T = 0.3;
        fr.sigma = 1.7;
        fr.Ck = 6.0;
        for (int i = 0; i < 100; ++i) {
            FrameSample s = random_sample(rng, k == FrameKind::GlobalSimilarity);
            if (k != FrameKind::GlobalSimilarity) s.t = fr.T - (0.1 + 0.9 * (i + 1) / 101.0);
            FrameSample back = rescale_inverse(fr, rescale_forward(fr, s));
            CHECK(sample_gap(back, s) <= 1e-13);
        }
    }
}

TEST_CASE("blow-up frame at tau = 0 is the identity on space and amplitude") {
    ScalingFrame fr;
    fr.kind = FrameKind::BlowupSimilarity;
    fr.T = 2.0;
    FrameSample s;
    s.x = {0.7, -0.3, 1.1};
    s.t = 1.0;  // T - t = 1
    s.u = {0.4, 0.2, -0.9};
    s.p = 0.6;
    FrameSample f = rescale_forward(fr, s);
    CHECK(f.t == doctest::Approx(0.0));
    for (int i = 0; i < 3; ++i) {
        CHECK(f.x[static_cast<size_t>(i)] == doctest::Approx(s.x[static_cast<size_t>(i)]));
        CHECK(f.u[static_cast<size_t>(i)] == doctest::Approx(s.u[static_cast<size_t>(i)]));
    }
    CHECK(f.p == doctest::Approx(s.p));
}

TEST_CASE("frame composition: blow-up frame commutes with time translation") {
    ScalingFrame fr1;
    fr1.kind = FrameKind::BlowupSimilarity;
    fr1.T = 1.0;
    ScalingFrame fr2;
    fr2.kind = FrameKind::BlowupSimilarity;
    fr2.T = 3.5;
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
        FrameSample s = random_sample(rng, false);
        s.t = 1.0 - (0.2 + 0.6 * i / 20.0);
        FrameSample a = rescale_forward(fr1, s);
        FrameSample shifted = s;
        shifted.t += 2.5;
        FrameSample b = rescale_forward(fr2, shifted);
        CHECK(sample_gap(a, b) <= 1e-13);
    }
}

TEST_CASE("twistor angle advances by sigma per unit log-time") {
    CHECK(twistor_angle(0.4, 2.0, 3.0) - twistor_angle(0.4, 2.0, 0.0) ==
          doctest::Approx(6.0));
    ScalingFrame fr;
    fr.kind = FrameKind::Twistor;
    fr.T = 0.0;
    fr.sigma = 2.0;
    // forward map of the same physical angle at two times differs by
    // sigma * (tau2 - tau1)
    FrameSample s1, s2;
    s1.x = s2.x = {1.0, 0.9, 0.0};
    s1.t = -1.0;
    s2.t = -std::exp(-3.0);
    auto f1 = rescale_forward(fr, s1), f2 = rescale_forward(fr, s2);
    CHECK(f2.x[1] - f1.x[1] == doctest::Approx(-2.0 * 3.0).epsilon(1e-12));
}

TEST_CASE("sup normalization bookkeeping") {
    ScalingFrame fr;
    fr.kind = FrameKind::CkRescale;
    fr.Ck = 8.0;
    CHECK(fr.delta_k() == doctest::Approx(2.0));
    CHECK(fr.ak() == doctest::Approx(std::pow(8.0, -2.0 / 3.0)));
    // identity at Ck = 1
    ScalingFrame id;
    id.kind = FrameKind::CkRescale;
    id.Ck = 1.0;
    FrameSample s;
    s.x = {0.3, -0.4, 0.8};
    s.t = 0.2;
    s.u = {1.0, -2.0, 0.5};
    s.p = 0.7;
    CHECK(sample_gap(rescale_forward(id, s), s) == 0.0);
}

TEST_CASE("sup-normalized field preserves the l2 norm") {
    // Gaussian bump with sup 10
    double C = 10.0;
    auto u = [C](const std::array<double, 3>& x) {
        double r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
        return std::array<double, 3>{C * std::exp(-r2), 0.0, 0.0};
    };
    ScalingFrame fr;
    fr.kind = FrameKind::CkRescale;
    fr.Ck = C;
    double a = fr.ak();
    auto w = [&](const std::array<double, 3>& y) {
        std::array<double, 3> x{a * y[0], a * y[1], a * y[2]};
        auto v = u(x);
        return std::array<double, 3>{v[0] / C, v[1] / C, v[2] / C};
    };
    auto fu = functionals_quadrature(u, 1.0, 8.0, 40);
    auto fw = functionals_quadrature(w, 1.0 / a, 8.0, 40);
    CHECK(std::abs(fu.value.l2_squared - fw.value.l2_squared) /
              fu.value.l2_squared <
          1e-8);
    // sup of the rescaled field is exactly 1 at the origin
    CHECK(w({0, 0, 0})[0] == doctest::Approx(1.0));
}

TEST_CASE("mode-state evolution is diagonal with the printed exponents") {
    StokesModeState s;
    s.coeff[{1, 0}] = 1.0;
    s.coeff[{2, 3}] = -0.4;
    auto e = stokes_mode_evolution(s, 2.0);
    CHECK(e.coeff[{1, 0}] == doctest::Approx(std::exp(-2.0)));
    CHECK(e.coeff[{2, 3}] == doctest::Approx(-0.4 * std::exp(-3.0)));
    CHECK(e.tau == doctest::Approx(2.0));
    // identity at zero log-time
    auto z = stokes_mode_evolution(s, 0.0);
    CHECK(z.coeff[{1, 0}] == 1.0);
}

TEST_CASE("mode-state functionals: masses vanish, energy identity holds") {
    StokesModeState s;
    s.coeff[{1, 0}] = 0.8;
    s.coeff[{2, 3}] = -0.5;
    s.coeff[{2, 6}] = 0.3;
    auto f = stokes_functionals(s);
    CHECK(f.l2_squared > 0.0);
    CHECK(f.dissipation > 0.0);
    for (double m : f.component_masses) CHECK(std::abs(m) < 1e-14);
    CHECK(stokes_energy_identity_residual(s, 1e-4) <= 1e-8);

    // zero state
    StokesModeState zero;
    auto fz = stokes_functionals(zero);
    CHECK(fz.l2_squared == 0.0);
    CHECK(fz.kinetic_energy == 0.0);
}

TEST_CASE("evolution commutes with the basis projection") {
    StokesModeState s;
    s.coeff[{2, 1}] = 0.7;
    s.coeff[{2, 5}] = -0.2;
    // reconstruct the order-2 part as a polynomial triple, evolve the state,
    // and compare with projecting the reconstruction then evolving
    auto basis = solenoidal_basis(2);
    std::array<ExactPolynomial3, 3> field;
    for (const auto& [id, cv] : s.coeff) {
        Rational q(cv * 10);
        q /= 10;  // exact tenths
        for (int comp = 0; comp < 3; ++comp)
            field[static_cast<size_t>(comp)] +=
                q * basis[static_cast<size_t>(id.second)]
                        .components[static_cast<size_t>(comp)];
    }
    auto coeffs = project_onto_solenoidal(field, 2);
    CHECK(to_double(coeffs[1]) == doctest::Approx(0.7).epsilon(1e-12));
    CHECK(to_double(coeffs[5]) == doctest::Approx(-0.2).epsilon(1e-12));
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (i == 1 || i == 5) continue;
        CHECK(to_double(coeffs[i]) == doctest::Approx(0.0));
    }
    // diagonality: evolve-then-project equals project-then-evolve
    double dtau = 1.3;
    auto evolved = stokes_mode_evolution(s, dtau);
    double factor = std::exp(-(1.0 + 2.0) * 0.5 * dtau);
    CHECK(evolved.coeff[{2, 1}] ==
          doctest::Approx(to_double(coeffs[1]) * factor).epsilon(1e-12));
}

TEST_CASE("similarity growth factor and slow swirl coefficients") {
    CHECK(rescaled_l2_growth_factor(2.0) == doctest::Approx(std::exp(1.0)));
    CHECK(slow_swirl_coefficient(SwirlProfile::Constant, 1.0, -0.5) == 0.0);
    CHECK(slow_swirl_coefficient(SwirlProfile::PureLogTw, 1.0, -0.5) == 1.0);
    CHECK(swirl_term(3.0, SwirlProfile::PureLogTw, 1.0, -0.5) == 3.0);
    double c1 = slow_swirl_coefficient(SwirlProfile::DoubleLogDamped, 1.0,
                                       -std::exp(-10.0));
    double c2 = slow_swirl_coefficient(SwirlProfile::DoubleLogDamped, 1.0,
                                       -std::exp(-30.0));
    CHECK(c1 < 0.5);
    CHECK(c2 < c1);
    CHECK(c2 > 0.0);
    CHECK_THROWS_AS(slow_swirl_coefficient(SwirlProfile::PureLogTw, 1.0, 0.5),
                    std::domain_error);
}
