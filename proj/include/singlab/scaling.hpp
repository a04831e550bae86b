#pragma once

#include <functional>
#include <map>
#include <vector>

#include "singlab/solenoidal.hpp"

namespace singlab {

// ---------------------------------------------------------------- frame maps

enum class FrameKind {
    BlowupSimilarity,  // amplitude (T-t)^{-1/2}, length (T-t)^{1/2}
    GlobalSimilarity,  // amplitude t^{-1/2}, length t^{1/2}
    Burnett,           // amplitude (T-t)^{-3/4}, length (T-t)^{1/4}
    Twistor,           // cylindrical with the log-travelling angle
    CkRescale,         // sup normalization with L^2-preserving length
};

std::string frame_kind_name(FrameKind k);
FrameKind frame_kind_from_string(const std::string& s);

struct ScalingFrame {
    FrameKind kind = FrameKind::BlowupSimilarity;
    double T = 0.0;      // blow-up instant for backward frames
    double sigma = 0.0;  // twistor swirl speed
    double Ck = 1.0;     // sup normalization constant, >= 1

    double ak() const;       // Ck^{-2/3}
    double delta_k() const;  // Ck^{1/3}
};

/// A sampled field value at a point: coordinates, time, velocity-like
/// amplitudes (per component) and pressure-like amplitude.
struct FrameSample {
    std::array<double, 3> x{};  // twistor: (r, phi, z)
    double t = 0.0;
    std::array<double, 3> u{};  // twistor: (U, V, Wt)
    double p = 0.0;
};

FrameSample rescale_forward(const ScalingFrame& f, const FrameSample& physical);
FrameSample rescale_inverse(const ScalingFrame& f, const FrameSample& rescaled);

/// Rescaled twistor angle as a function of log-time.
double twistor_angle(double mu, double sigma, double tau);

// ------------------------------------------------------------ Stokes modes

/// Finite combination of solenoidal modes with log-time. Mode id (k, i)
/// refers to solenoidal_basis(k)[i]; fields reconstruct with the Gaussian.
struct StokesModeState {
    std::map<std::pair<int, int>, double> coeff;
    double tau = 0.0;
};

/// Diagonal evolution: each coefficient decays by exp(-(1+k)/2 dtau).
StokesModeState stokes_mode_evolution(const StokesModeState& s, double dtau);

struct Functionals {
    double kinetic_energy;  // (1/2) ||u||^2
    double dissipation;     // ||Du||^2
    std::array<double, 3> component_masses;
    double l2_squared;
};

/// Exact Gaussian-moment functionals of a mode state.
Functionals stokes_functionals(const StokesModeState& s);

/// Residual of the energy identity (finite differences in log-time,
/// fourth-order stencil with the given step).
double stokes_energy_identity_residual(const StokesModeState& s, double fd_step = 1e-4);

/// Reference L^2 growth factor of the backward similarity scaling.
double rescaled_l2_growth_factor(double dtau);

/// Exact projection of a polynomial-triple (Gaussian implied) onto the
/// order-k solenoidal basis. Requires the triple to lie in the span.
std::vector<Rational> project_onto_solenoidal(const std::array<ExactPolynomial3, 3>& v,
                                              int k);

// ------------------------------------------------------- generic functionals

/// Box-truncated quadrature functionals for a decaying closed-form field;
/// truncation radius is `widths` Gaussian widths (default 12), and the
/// returned tail bound estimates the neglected mass.
struct QuadFunctionals {
    Functionals value;
    double tail_bound;
};

QuadFunctionals functionals_quadrature(
    const std::function<std::array<double, 3>(const std::array<double, 3>&)>& vel,
    double width = 1.0, double widths = 12.0, int points_per_axis = 48);

// -------------------------------------------------------------- slow swirl

enum class SwirlProfile { Constant, PureLogTw, DoubleLogDamped };

/// The asymptotically-vanishing swirl coefficient (-t) kappa'(t), t < 0.
double slow_swirl_coefficient(SwirlProfile profile, double delta, double t);

/// Full advection coefficient sigma * (-t) kappa'(t).
double swirl_term(double sigma, SwirlProfile profile, double delta, double t);

}  // namespace singlab
