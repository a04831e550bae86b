#pragma once

#include <array>
#include <string>
#include <vector>

#include "singlab/hermite.hpp"

namespace singlab {

/// Triple of order-k Hermite polynomials whose Gaussian-multiplied field is
/// exactly divergence-free: div v - (1/2) y.v = 0.
struct SolenoidalMode {
    std::array<ExactPolynomial3, 3> components;
    int degree = 0;
    Rational eigenvalue;  // -k/2 under the drift-diffusion operator

    bool is_member() const { return weighted_divergence(components).is_zero(); }
};

/// Exact rational nullspace basis of v -> div v - (1/2) y.v over triples of
/// order-k Hermite polynomials. Deterministic ordering.
std::vector<SolenoidalMode> solenoidal_basis(int k);

enum class AdjudicationStatus { Confirmed, Refuted, Repaired };

std::string adjudication_status_name(AdjudicationStatus s);

struct Hp1Entry {
    std::string name;
    std::array<ExactPolynomial3, 3> printed;
    AdjudicationStatus status;
    // populated for repaired entries
    int repair_component = -1;
    ExactPolynomial3 repaired_component;
    std::string note;
};

/// Test every printed first- and second-order eigenfunction of the reference
/// table for membership; non-members get a minimal single-monomial repair
/// search within the order-k triple space.
std::vector<Hp1Entry> adjudicate_hp1();

/// The Gaussian-multiplied direct partner of a solenoidal mode. The plain
/// divergence of components * exp(-|y|^2/4) is verified to vanish exactly.
struct DirectMode {
    std::array<ExactPolynomial3, 3> components;  // polynomial part, Gaussian implied
    Rational eigenvalue;
};

DirectMode direct_mode(const SolenoidalMode& v);

/// Plain-divergence test of (polynomial triple) * exp(-|y|^2/4); returns the
/// exact polynomial prefactor of the divergence.
ExactPolynomial3 gaussian_divergence(const std::array<ExactPolynomial3, 3>& v);

struct GramEntry {
    MultiIndex beta, gamma;
    Rational raw;                  // integral of H_beta H_gamma F, exact
    bool exactly_zero;
    Rational normalized_diagonal;  // c_beta^2 * raw when beta == gamma
    double value;                  // normalized numeric value
};

/// Exact pairing matrix over all multiindices of order <= k_max, with the
/// second factor carrying the Gaussian.
std::vector<GramEntry> gram_matrix(int k_max);

/// CSV row block for a basis export: k, mode-id, component, multiindex,
/// numerator, denominator.
std::string solenoidal_basis_csv(int k_max);

}  // namespace singlab
