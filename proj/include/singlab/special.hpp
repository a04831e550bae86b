#pragma once

#include <stdexcept>

namespace singlab {

struct SpecialParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct SeriesNonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Gauss hypergeometric series F(a,b;c;z) summed term by term until the
/// ratio-test tail bound drops below tol. Requires |z| < 1 and c not a
/// non-positive integer. Iteration cap 10^4 terms.
double kummer_F(double a, double b, double c, double z, double tol = 1e-14);

}  // namespace singlab
