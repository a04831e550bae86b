#pragma once

#include <cmath>

#include "singlab/poly3.hpp"

namespace singlab {

/// Exact value  coeff * 2^(two_half/2) * pi^(pi_half/2).
struct GaussianValue {
    Rational coeff{0};
    int pi_half = 0;
    int two_half = 0;

    bool is_zero() const { return singlab::is_zero(coeff); }
    double value() const {
        return to_double(coeff) * std::pow(2.0, 0.5 * two_half) *
               std::pow(M_PI, 0.5 * pi_half);
    }
};

enum class GaussianWeight {
    Adjoint,   // w(y) = exp(-|y|^2/4)
    Direct,    // w(y) = F(y) = (4 pi)^{-3/2} exp(-|y|^2/4)
    SquaredF,  // w(y) = F(y)^2 = (4 pi)^{-3}  exp(-|y|^2/2)
};

/// Exact triple integral of p*q*w over R^3 from closed-form Gaussian moments.
GaussianValue gaussian_weighted_inner(const ExactPolynomial3& p,
                                      const ExactPolynomial3& q,
                                      GaussianWeight w);

/// Exact integral of a single polynomial against the weight.
GaussianValue gaussian_integral(const ExactPolynomial3& p, GaussianWeight w);

}  // namespace singlab
