#pragma once

#include <optional>
#include <vector>

#include "singlab/field.hpp"

namespace singlab {

/// Per-equation residual record over a sample set.
struct ResidualReport {
    std::string system;
    std::vector<std::string> equations;
    std::vector<double> max_abs;
    std::vector<double> rms;
    std::vector<Coords> worst_point;
    double tolerance = 1e-8;
    std::string oracle;

    double max_overall() const;
    bool pass() const { return max_overall() <= tolerance; }
    void tabulate(size_t eq, double value, const Coords& at);
    void finish(size_t samples);
};

/// Momentum + divergence residuals of the governing system in the field's
/// native frame (Cartesian/cylindrical/spherical).
ResidualReport nse_residual(const FieldSpec& f, const std::vector<Coords>& pts,
                            double nu = 1.0, double tolerance = 1e-8);

/// Ideal-flow residual. With pressure: momentum with nu = 0. Pressure-free:
/// curl of the material acceleration (the acceleration must be a gradient).
ResidualReport euler_residual(const FieldSpec& f, const std::vector<Coords>& pts,
                              bool pressure_free, double tolerance = 1e-8);

// ------------------------------------------------------------- W2 subspace

using P2 = D2<2>;
using ProfileFn2 = std::function<P2(const std::array<P2, 2>&)>;

struct W2Profiles {
    ProfileFn2 U, V, Wt, P;  // functions of (r, phi)
};

struct PairedReport {
    ResidualReport printed;
    ResidualReport oracle;
    std::vector<double> max_difference;  // per equation
    double max_difference_overall() const;
};

/// Residuals of the printed subspace system against the full cylindrical
/// system under the linear-in-z ansatz (evaluated on the z = 1 section).
PairedReport w2_consistency(const W2Profiles& p,
                            const std::vector<std::array<double, 2>>& pts,
                            double tolerance = 1e-9);

// ------------------------------------------------------- twistor variables

struct TwistorInput {
    std::array<ProfileFn2, 4> comp;  // (u, v, w, p)(y, mu)
    /// Optional log-time derivatives at (y, mu); empty means stationary.
    std::array<std::function<double(double, double)>, 4> tau_deriv;
};

/// Residuals of the rescaled system with swirl speed sigma; `stationary`
/// forces the log-time derivatives to zero.
ResidualReport twistor_residual(const TwistorInput& in, double sigma, bool stationary,
                                const std::vector<std::array<double, 2>>& pts,
                                double tolerance = 1e-8);

// ------------------------------------------------------------ circle system

struct CircleProfiles {
    std::function<double(double)> A, B, C, D;  // 2 pi periodic
};

struct CircleReport {
    ResidualReport full;       // four circle equations
    ResidualReport reduced;    // after eliminating the pressure profile
    ResidualReport fifth;      // the two-function fifth-order form
    std::optional<double> irrotational_identity;  // when C == 0
    double elimination_defect;  // reduced residual vs combination of full ones
};

CircleReport circle_system(const CircleProfiles& p, double M0, int grid = 64,
                           double tolerance = 1e-8);

// ----------------------------------------------- spherical homogeneous states

struct SphericalHomProfiles {
    std::array<ProfileFn2, 4> comp;  // (uhat, vhat, what, phat)(theta, phi)
};

/// Printed reduced system versus the full spherical system under the
/// homogeneity ansatz (r^3-scaled, evaluated at r = 1).
PairedReport spherical_homogeneous(const SphericalHomProfiles& p,
                                   const std::vector<std::array<double, 2>>& pts,
                                   double tolerance = 1e-9);

// ---------------------------------------------------------- Yaceev reduction

struct YaceevInput {
    // jets in theta of (uhat, vhat, phat); theta away from the poles
    std::function<std::array<double, 3>(double)> uhat;  // value, d1, d2
    std::function<std::array<double, 3>(double)> vhat;
    std::function<std::array<double, 2>(double)> phat;  // value, d1
};

ResidualReport yaceev_reduced(const YaceevInput& in, const std::vector<double>& thetas,
                              double tolerance = 1e-8);

// ----------------------------------------------------- local rescaled system

struct RescaledLocalReport {
    ResidualReport report;        // momentum + divergence of the rescaled system
    double max_principle_defect;  // elliptic identity on the combination Pi
};

/// Residual of (1/2) u + (1/2)(y.grad)u + (u.grad)u + grad P - Lap u and the
/// divergence constraint for stationary rescaled profiles in Cartesian y.
RescaledLocalReport rescaled_nse_local(const FieldSpec& f,
                                       const std::vector<Coords>& pts,
                                       double tolerance = 1e-8);

/// Spectral differentiation of a periodic sample vector; returns the m-th
/// derivative at the grid nodes.
std::vector<double> circle_spectral_derivative(const std::vector<double>& samples,
                                               int m);

/// CSV body: system, equation, max, rms, worst-point coordinates, verdict.
std::string residual_report_csv(const ResidualReport& rep);

/// CSV grid of field samples: native coordinates plus components.
std::string field_csv(const FieldSpec& f, const std::vector<Coords>& pts);

}  // namespace singlab
