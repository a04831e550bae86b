#pragma once

#include <memory>
#include <vector>

#include "singlab/field.hpp"
#include "singlab/ode.hpp"
#include "singlab/taylor.hpp"

namespace singlab {

/// One row of the machine-readable adjudication ledger: every printed
/// solution formula is a candidate with a confirmed/refuted/repaired status.
struct AdjudicationRow {
    std::string family;
    std::string formula_id;
    std::string status;
    double max_residual = 0.0;
    std::string note;
    /// Gate rows must end confirmed or repaired; non-gate refutations are
    /// findings, not failures.
    bool gate = false;
};

// ---------------------------------------------------------------- Slezkin-Landau

/// The explicit singular stationary jet in Cartesian components; requires
/// |c| > 1 (the axis singularity closes in at |c| = 1).
FieldSpec slezkin_landau_cartesian(double c);

/// The spherical form exactly as printed.
FieldSpec slezkin_landau_spherical_printed(double c);

/// The Cartesian form rewritten in spherical components; this is the
/// normalization the steady-residual oracle confirms.
FieldSpec slezkin_landau_spherical_canonical(double c);

struct SlCrossCheck {
    double radial_ratio_mean = 0.0;    // (Cartesian radial) / (printed spherical u)
    double radial_ratio_spread = 0.0;  // max deviation from the mean
    double polar_ratio_mean = 0.0;
    double polar_ratio_spread = 0.0;
    double max_swirl = 0.0;  // azimuthal component in both forms
};

SlCrossCheck sl_cross_check(double c, const std::vector<std::array<double, 3>>& points);

struct SlFluxResult {
    double numeric;              // z-component of the momentum+pressure-stress flux
    double transverse;           // largest |x|,|y| flux component
    double printed_closed_form;  // printed b(c)
    double printed_asymptote;    // 16 pi / c - 32 pi / (3 c^3)
};

/// Surface integral of momentum flux + pressure flux - viscous stress over
/// the sphere |x| = radius.
SlFluxResult sl_flux_coefficient(double c, double radius, int quad_order);

double sl_printed_bc(double c);
double sl_mass_flux(double c, double radius, int quad_order);

struct SlLimitRow {
    double c;
    double dev_transverse;  // max over first two components of |c u_i - u0_i|
    double dev_axial;       // |c u_3 - u0_3|
};
/// c * u_SL against the printed leading profile (2 z x / r^3, 2 z y / r^3, 2/r).
std::vector<SlLimitRow> sl_large_c_limit(const std::array<double, 3>& x);

// ------------------------------------------------------------------- vortices

struct OseenMoffatt {
    FieldSpec field;  // cylindrical azimuthal velocity, no pressure
    double gamma, T;
    double vorticity(double r, double t) const;         // (1/r) d(r V)/dr
    double vorticity_closed(double r, double t) const;  // heat-kernel form
    double heat_residual(double r, double t) const;     // w_t + Lap2 w
};

OseenMoffatt oseen_moffatt_vortex(double gamma, double T);

/// Separable cylindrical field (u(r,t), 0, z*gamma(r,t)); exact divergence
/// zero, adjudicated through the pressure-free residual.
FieldSpec euler_separable(double T);

// ----------------------------------------------------------------- von Karman

struct VonKarmanSolution {
    std::shared_ptr<Trajectory> traj;  // state (f, f', f'', g, g')
    double z0, z1;
    /// Cartesian field on the linear-in-(x,y) subspace. `repaired` selects
    /// v = g x + f' y in place of the printed v = f' x + g y.
    FieldSpec field(bool repaired) const;
};

VonKarmanSolution von_karman(const std::array<double, 5>& state0, double z0, double z1);

/// Residuals of the two profile ODEs for given closed-form profile values.
std::array<double, 2> von_karman_ode_residual(double f, double fp, double fpp,
                                              double fppp, double g, double gp,
                                              double gpp);

// -------------------------------------------------------------- Yaceev/Squire

struct YaceevParams {
    double alpha, beta, gamma;
    double c1 = 1.0, c2 = 0.0;
};

struct YaceevConstants {
    double a, b, c;
};

YaceevConstants yaceev_constants(double alpha, double beta, double gamma);

/// Angular profile jets of the swirl-free homogeneity -1 family driven by
/// the hypergeometric series. `phat` integrates the polar momentum relation
/// with the constant pinned by the radial equation (the closed-form constant
/// of the family); `phat_printed` is the pressure exactly as printed, kept
/// as an adjudication target.
struct YaceevProfiles {
    Taylor5 uhat, vhat, phat, phat_printed;
};

YaceevProfiles yaceev_profiles(const YaceevParams& p, double theta);

FieldSpec yaceev(const YaceevParams& p);

/// Spherical homogeneity -1 field from angular jets (axisymmetric or not is
/// decided by the caller-provided jets; here swirl-free).
FieldSpec homogeneous_spherical_field(const std::string& family,
                                      std::function<Taylor5(double)> uhat,
                                      std::function<Taylor5(double)> vhat,
                                      std::function<Taylor5(double)> phat);

struct SquireResult {
    double f, fp;
    /// (f')^2 + f f'' - 2 f' - [(1-xi^2) f'']' at xi; constant in xi
    /// (equal to -2 c1) exactly when the profile solves the reduced equation.
    double r0;
};

/// The printed stream-profile formula with its quadrature-evaluated
/// integral term.
SquireResult squire(double alpha, double beta, double b, double xi);

// ------------------------------------------------------------ Slezkin Riccati

struct RiccatiParams {
    double C0 = 0.0, C1 = 0.0, C2 = 0.0;
    double nu = 1.0;
};

struct RiccatiSolution {
    std::function<double(double)> f;
    double riccati_residual_max;   // against the first-order equation
    double identity_residual_max;  // thrice-integrated identity
};

/// Solve the linear second-order reduction on [tau0, tau1] from y(tau0)=y0,
/// y'(tau0)=yp0, reconstruct f = -2 nu (1 - tau^2) (ln y)', and verify it.
/// `printed_linear_form` selects the coefficient exactly as printed instead
/// of the one implied by the first-order equation.
RiccatiSolution slezkin_riccati(const RiccatiParams& p, double tau0, double tau1,
                                double y0, double yp0,
                                bool printed_linear_form = false);

}  // namespace singlab
