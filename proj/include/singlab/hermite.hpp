#pragma once

#include <optional>
#include <string>

#include "singlab/gaussian_inner.hpp"
#include "singlab/poly3.hpp"

namespace singlab {

/// Eigenfunction of the drift-diffusion operator  B* = Lap - (1/2) y.grad
/// in the Gaussian-weighted space. `polynomial` stores the rational part
/// H_beta = D^beta F / F; the normalization constant multiplies it as
/// norm_num / sqrt(norm_radicand).
struct HermiteMode {
    MultiIndex index;
    ExactPolynomial3 polynomial;
    Rational eigenvalue;      // -|beta|/2
    Integer norm_num;         // 2^{|beta|}
    Integer norm_radicand;    // beta!

    double normalization() const;
};

/// Apply B* = Lap - (1/2) y.grad exactly.
ExactPolynomial3 apply_bstar(const ExactPolynomial3& p);

/// The weighted divergence  div v - (1/2) y.v ; the polynomial prefactor of
/// div(v exp(-|y|^2/4)).
ExactPolynomial3 weighted_divergence(const std::array<ExactPolynomial3, 3>& v);

/// Build the mode for a multiindex; the eigen-identity is checked exactly
/// before returning.
HermiteMode hermite_mode(const MultiIndex& beta);

enum class LadderFamily {
    AdjointBlowup,      // shifted adjoint ladder, 3D
    DirectGlobal,       // self-adjoint global ladder, 3D
    Radial2D,           // planar radial ladder, index k <-> order 2k
    Shifted2D,          // planar shifted ladder, index k <-> order 2k
    TwistorLinearized,  // planar ladder with swirl, index |beta|
    Burnett,            // fourth-order ladder, index |beta|
};

LadderFamily ladder_family_from_string(const std::string& tag);
std::string ladder_family_name(LadderFamily f);

struct LadderEntry {
    Rational eigenvalue;
    std::optional<long> multiplicity;  // only for AdjointBlowup
};

LadderEntry spectral_ladder(LadderFamily family, int order);

/// Residual of (L*_sigma - lambda) on a planar radial mode, where
/// L*_sigma = Lap2 - (1/2) y.grad + I - sigma d/dmu. Returns the max
/// absolute coefficient of the two polynomial parts combined; radial modes
/// give exactly zero for every sigma.
struct SwirlResidual {
    ExactPolynomial3 drift_part;    // (L*_0 - lambda) mode
    ExactPolynomial3 angular_part;  // d/dmu mode (enters with -sigma)
    double magnitude(double sigma) const;
};

SwirlResidual swirl_invariance(const HermiteMode& mode, double sigma);

}  // namespace singlab
