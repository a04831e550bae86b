#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "singlab/multiindex.hpp"

namespace singlab {

struct FdResult {
    double value;
    double error;  // estimate from the extrapolation ladder
};

/// Ridders-style Richardson extrapolation of central differences for a
/// first derivative along one axis.
inline FdResult fd_first(const std::function<double(double)>& f, double x,
                         double h0 = 0.0) {
    constexpr int ntab = 12;
    const double con = 1.4, con2 = con * con, big = 1e300, safe = 2.0;
    double h = h0 > 0.0 ? h0 : 0.1 * (1.0 + std::abs(x));
    double a[ntab][ntab];
    double ans = 0.0, err = big;
    a[0][0] = (f(x + h) - f(x - h)) / (2.0 * h);
    if (!std::isfinite(a[0][0]))
        throw std::domain_error("fd_first: non-finite stencil value");
    for (int i = 1; i < ntab; ++i) {
        h /= con;
        a[0][i] = (f(x + h) - f(x - h)) / (2.0 * h);
        if (!std::isfinite(a[0][i]))
            throw std::domain_error("fd_first: non-finite stencil value");
        double fac = con2;
        for (int j = 1; j <= i; ++j) {
            a[j][i] = (a[j - 1][i] * fac - a[j - 1][i - 1]) / (fac - 1.0);
            fac *= con2;
            double errt = std::max(std::abs(a[j][i] - a[j - 1][i]),
                                   std::abs(a[j][i] - a[j - 1][i - 1]));
            if (errt <= err) {
                err = errt;
                ans = a[j][i];
            }
        }
        if (std::abs(a[i][i] - a[i - 1][i - 1]) >= safe * err) break;
    }
    return {ans, err};
}

/// Second derivative along one axis via extrapolated central differences.
inline FdResult fd_second(const std::function<double(double)>& f, double x,
                          double h0 = 0.0) {
    constexpr int ntab = 10;
    const double con = 1.4, con2 = con * con, big = 1e300, safe = 2.0;
    double h = h0 > 0.0 ? h0 : 0.15 * (1.0 + std::abs(x));
    double a[ntab][ntab];
    double ans = 0.0, err = big;
    double f0 = f(x);
    auto d2 = [&](double hh) { return (f(x + hh) - 2.0 * f0 + f(x - hh)) / (hh * hh); };
    a[0][0] = d2(h);
    for (int i = 1; i < ntab; ++i) {
        h /= con;
        a[0][i] = d2(h);
        if (!std::isfinite(a[0][i]))
            throw std::domain_error("fd_second: non-finite stencil value");
        double fac = con2;
        for (int j = 1; j <= i; ++j) {
            a[j][i] = (a[j - 1][i] * fac - a[j - 1][i - 1]) / (fac - 1.0);
            fac *= con2;
            double errt = std::max(std::abs(a[j][i] - a[j - 1][i]),
                                   std::abs(a[j][i] - a[j - 1][i - 1]));
            if (errt <= err) {
                err = errt;
                ans = a[j][i];
            }
        }
        if (std::abs(a[i][i] - a[i - 1][i - 1]) >= safe * err) break;
    }
    return {ans, err};
}

/// Directional derivative of a trivariate evaluator. `direction` is a
/// multiindex of total order 1 or 2 (pure or mixed).
FdResult fd_derivative(const std::function<double(const std::array<double, 3>&)>& f,
                       const std::array<double, 3>& point, const MultiIndex& direction);

}  // namespace singlab
