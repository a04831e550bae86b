#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>

namespace singlab {

struct BracketError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Bisection-secant hybrid on a sign-changing bracket.
inline double find_root(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12, int max_iter = 200) {
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0) == (fb > 0))
        throw BracketError("find_root: no sign change on bracket");
    for (int it = 0; it < max_iter; ++it) {
        // secant proposal, fall back to bisection when it leaves the bracket
        double x = b - fb * (b - a) / (fb - fa);
        double mid = 0.5 * (a + b);
        if (!(x > std::min(a, b) && x < std::max(a, b))) x = mid;
        // keep pace with bisection on stubborn brackets
        if (it % 2 == 1) x = mid;
        double fx = f(x);
        if (fx == 0.0 || std::abs(b - a) < tol * (1.0 + std::abs(x))) return x;
        if ((fx > 0) == (fa > 0)) {
            a = x;
            fa = fx;
        } else {
            b = x;
            fb = fx;
        }
    }
    return 0.5 * (a + b);
}

}  // namespace singlab
