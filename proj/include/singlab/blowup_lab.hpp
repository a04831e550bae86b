#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "singlab/ode.hpp"
#include "singlab/rational.hpp"

namespace singlab {

// ------------------------------------------------------------ exponent tables

struct ExponentQuery {
    int N = 3;
    double p = 2.0;
    int m = 1;            // operator order 2m
    double sigma_q = 0.0; // quasilinear exponent
    int l = 1;            // Kuramoto order
};

struct CriticalExponents {
    std::optional<double> p_sobolev;        // (N+2m)/(N-2m) for N > 2m
    std::optional<double> p_sobolev_quasi;  // fourth-order quasilinear variant
    double p_kuramoto;                      // 1 + 2(4l-1)/N
    std::optional<double> p_uniqueness;     // 1 + 4/(N-4-2 sqrt(N-1)), N >= 11
    std::optional<double> nse_absorption_upper;  // (N+2)/(N-2)
    double nse_absorption_lower;                 // 7/2
    std::vector<std::string> absent;  // violated admissibility conditions
};

CriticalExponents critical_exponents(const ExponentQuery& q);

// ----------------------------------------------------- singular steady states

struct SssProfile {
    int N;
    double p;
    double mu;      // 2/(p-1)
    bool exists;
    double C_star;  // [mu (N-2-mu)]^{1/(p-1)}
    double residual;  // of C r^-mu in the radial equation over sample radii
    std::string reason;
};

SssProfile emden_fowler_sss(int N, double p);

struct BiharmonicSss {
    double mu;  // 4/(p-1)
    double A, B, C, D;
    bool exists;    // D > 0
    double C_star;  // D^{1/(p-1)}
    double residual;  // radial fourth-order equation residual when existent
};

BiharmonicSss biharmonic_reduction(int N, double p);
std::array<Rational, 4> biharmonic_coefficients_exact(long N, const Rational& mu);

// ------------------------------------------------------------------- shooting

enum class ShootLabel {
    StabilizePlus,
    StabilizeMinus,
    Periodic,
    Spiral,
    FiniteTimeBlowUp,
    ReachesZero,
    Inconclusive,
};

std::string shoot_label_name(ShootLabel l);

struct ShootOutcome {
    ShootLabel label = ShootLabel::Inconclusive;
    std::vector<double> maxima;  // successive local maxima of |phi|
    int zero_count = 0;
    double final_value = 0.0;
    double hamiltonian_drift = 0.0;  // at p = p_S; 0 otherwise
    std::shared_ptr<Trajectory> traj;
    std::string diagnostics;
};

/// Shoot the oscillatory-component equation from (phi0, phi0') over
/// [0, s_max]. Classification thresholds are fixed constants: 1% bands, a
/// 10-cycle window for periodicity, 1%-per-cycle growth for spirals.
ShootOutcome emden_fowler_shoot(int N, double p, double phi0, double phi0p,
                                double s_max, bool fixed_step_oracle = false);

/// Pinned figure-reproduction parameters for the shooting presets.
struct ShootPreset {
    std::string name;
    int N;
    double p;
    double phi0, phi0p;
    double s_max;
    ShootLabel expected;
};

ShootPreset shoot_preset(const std::string& name);

struct AutonomousCoefficients {
    double damping;         // 2 mu + 2 - N at p = p_S (exactly zero)
    double linear_derived;  // mu (mu + 2 - N)
    double linear_printed;  // -(N-2)^2 / 8
    bool discrepancy;
};

AutonomousCoefficients autonomous_form_coefficient(int N);

struct RegularShootOutcome {
    int zero_count;
    double r_end;
    std::shared_ptr<Trajectory> traj;
};

/// Radial regular solution from u(0) = a, u'(0) = 0; counts sign changes.
RegularShootOutcome regular_profile_shoot(int N, double p, double a, double r_max);

// ---------------------------------------------------- Frank-Kamenetskii suite

/// Residual of V(y) = ln(2(N-2)/y^2) in the rescaled reaction operator.
double fk_singular_equilibrium_residual(int N, double y);

struct FkExponents {
    bool oscillatory;             // 3 <= N <= 9
    std::optional<double> delta;  // N >= 10
    std::optional<double> b;      // oscillation exponent, 3 <= N <= 9
    double hardy_lhs;             // 2(N-2)
    double hardy_rhs;             // ((N-2)/2)^2
    bool hardy_admissible;        // lhs <= rhs
};

FkExponents fk_exponents(int N);

struct FkEigenvalue {
    int k;            // even label from the far-field polynomial growth
    double lambda;
    double small_y_exponent;  // log-slope near the origin; compare to -delta
};

/// Eigenvalues of the linearized operator by two-sided shooting with
/// series-started asymptotic bundles (y_in = 1e-2, y_out = 10, two
/// correction terms each). N >= 11; returns eigenvalues with label <= k_max.
std::vector<FkEigenvalue> fk_spectrum_shoot(int N, int k_max);

struct FkInnerProfile {
    std::shared_ptr<Trajectory> traj;  // (W, W')
    double band_width;  // variation of W + 2 ln xi over [1e2, 1e3]
    double xi_scale_exponent(double alpha_k) const { return alpha_k / 2.0; }
    double time_scale_exponent(double alpha_k) const { return 1.0 - alpha_k; }
};

FkInnerProfile fk_inner_profile(int N);

// --------------------------------------------------------------- rate catalog

struct RateInputs {
    double lambda_k = -1.0;
    double delta = 1.0;    // > 0
    double gamma_k = 2.0;  // > 1
    int beta_order = 2;
};

struct RateCatalog {
    double alpha_k;              // 2 |lambda| / delta
    double linf_coefficient;     // 1 + 2 |lambda| / delta
    double matched_exponential;  // -lambda / (gamma - 1)
    double log_corrected;        // 1 / (gamma - 1)
    double critical_sobolev;     // (2 |beta| + 1) / 4
    double standing_wave;        // (|beta| - 2) / (2 |beta|)
};

RateCatalog blowup_rates(const RateInputs& in);

// --------------------------------------------------------- stationary profiles

double loewner_nirenberg_value(int N, double r);
double loewner_nirenberg_residual(int N, double r);

struct HardyReport {
    double c_hardy;          // ((N-2)/2)^2
    double axisym_solenoid;  // the printed N = 3 constant
    double axisym_formula;   // the printed general-N closed form
    bool formula_matches_value;
    std::vector<double> quotients;  // Rayleigh quotients of the trials
    bool all_quotients_pass;
};

/// Hardy constants plus quadrature checks of the quotient inequality on
/// radial trial functions.
HardyReport hardy_constants(int N,
                            const std::vector<std::function<double(double)>>& trials);

// ------------------------------------------------- Hamilton-Jacobi profiles

struct HjProfile {
    bool reached_zero;
    double support_end;
    bool monotone;
    double endpoint_oracle_gap;  // relative gap between the integrator pair
};

/// Profile of the integro-ODE with h ~ 1 - f_j zeta^{|beta|} near zero,
/// integrated as the augmented (h, running moment) system.
HjProfile hamilton_jacobi_profile(int beta_order, double f_j, double zeta_cap = 200.0);

}  // namespace singlab
