#include "singlab/special.hpp"

#include <cmath>

namespace singlab {

double kummer_F(double a, double b, double c, double z, double tol) {
    if (c == 0.0 || (c < 0.0 && c == std::floor(c)))
        throw SpecialParameterError("kummer_F: c at a pole");
    if (std::abs(z) >= 1.0)
        throw SpecialParameterError("kummer_F: |z| must be < 1");

    const int cap = 10000;
    double sum = 1.0, term = 1.0;
    for (int n = 0; n < cap; ++n) {
        term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z;
        sum += term;
        if (term == 0.0) return sum;  // terminating (polynomial) case
        // Ratio-test tail bound: for m >= n+1 the step ratio is bounded by
        // q = |z| (m+1+|a|)(m+1+|b|) / ((m+1)(m+1-|c|)), decreasing to |z|.
        double m1 = n + 2.0;
        if (m1 > std::abs(c) + 1.0) {
            double q = std::abs(z) * (m1 + std::abs(a)) * (m1 + std::abs(b)) /
                       (m1 * (m1 - std::abs(c)));
            if (q < 1.0) {
                double tail = std::abs(term) * q / (1.0 - q);
                if (tail < tol) return sum;
            }
        }
    }
    throw SeriesNonConvergence("kummer_F: series did not converge within cap");
}

}  // namespace singlab
