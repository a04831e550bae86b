#include "singlab/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace singlab {

namespace {

// Legendre P_n and derivative at x.
std::pair<double, double> legendre(int n, double x) {
    double p0 = 1.0, p1 = x;
    if (n == 0) return {1.0, 0.0};
    for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    double dp = n * (x * p1 - p0) / (x * x - 1.0);
    return {p1, dp};
}

// Physicists' Hermite H_n and derivative at x (weight exp(-x^2)).
std::pair<double, double> hermite_phys(int n, double x) {
    double h0 = 1.0, h1 = 2.0 * x;
    if (n == 0) return {1.0, 0.0};
    for (int k = 2; k <= n; ++k) {
        double h2 = 2.0 * x * h1 - 2.0 * (k - 1) * h0;
        h0 = h1;
        h1 = h2;
    }
    return {h1, 2.0 * n * h0};
}

}  // namespace

double QuadratureRule::domain_measure() const {
    double s = 0.0;
    for (double wi : w) s += wi;
    return s;
}

QuadratureRule gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: order must be positive");
    QuadratureRule r{QuadKind::GaussLegendre, n, {}, {}, {}};
    r.x.resize(static_cast<size_t>(n));
    r.w.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        // Chebyshev-based initial guess, then Newton.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            auto [p, dp] = legendre(n, x);
            double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        auto [p, dp] = legendre(n, x);
        (void)p;
        r.x[static_cast<size_t>(i)] = x;
        r.w[static_cast<size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

QuadratureRule gaussian_weight_rule(int n) {
    // Gauss-Hermite for weight exp(-u^2), mapped to y = 2u so the rule
    // integrates against exp(-y^2/4) dy. Positive roots found by Newton
    // from the usual descending initial guesses, then mirrored.
    if (n < 1) throw std::invalid_argument("gaussian_weight_rule: order must be positive");
    QuadratureRule r{QuadKind::GaussianWeight, n, {}, {}, {}};
    r.x.assign(static_cast<size_t>(n), 0.0);
    r.w.assign(static_cast<size_t>(n), 0.0);

    double lnnorm = 0.5 * std::log(M_PI) + (n + 1) * std::log(2.0);
    for (int k = 2; k <= n; ++k) lnnorm += std::log(static_cast<double>(k));

    int half = (n + 1) / 2;
    std::vector<double> roots(static_cast<size_t>(half));
    for (int i = 0; i < half; ++i) {
        double x;
        if (i == 0)
            x = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
        else if (i == 1)
            x = roots[0] - 1.14 * std::pow(static_cast<double>(n), 0.426) / roots[0];
        else if (i == 2)
            x = 1.86 * roots[1] - 0.86 * roots[0];
        else if (i == 3)
            x = 1.91 * roots[2] - 0.91 * roots[1];
        else
            x = 2.0 * roots[static_cast<size_t>(i - 1)] - roots[static_cast<size_t>(i - 2)];
        for (int it = 0; it < 200; ++it) {
            auto [h, dh] = hermite_phys(n, x);
            double dx = h / dh;
            x -= dx;
            if (std::abs(dx) < 1e-15 * (1.0 + std::abs(x))) break;
        }
        roots[static_cast<size_t>(i)] = x;
        auto [h, dh] = hermite_phys(n, x);
        (void)h;
        double w = std::exp(lnnorm - 2.0 * std::log(std::abs(dh)));
        r.x[static_cast<size_t>(i)] = x;
        r.w[static_cast<size_t>(i)] = w;
        r.x[static_cast<size_t>(n - 1 - i)] = -x;
        r.w[static_cast<size_t>(n - 1 - i)] = w;
    }
    // map u -> y = 2u: nodes and weights both scale by 2
    for (int i = 0; i < n; ++i) {
        r.x[static_cast<size_t>(i)] *= 2.0;
        r.w[static_cast<size_t>(i)] *= 2.0;
    }
    return r;
}

QuadratureRule product_sphere(int n_theta) {
    // Gauss-Legendre in cos(theta) x trapezoid in phi (exact for trig).
    QuadratureRule gl = gauss_legendre(n_theta);
    int n_phi = 2 * n_theta;
    QuadratureRule r{QuadKind::ProductSphere, n_theta, {}, {}, {}};
    for (int i = 0; i < n_theta; ++i)
        for (int j = 0; j < n_phi; ++j) {
            double mu = gl.x[static_cast<size_t>(i)];
            r.x.push_back(std::acos(mu));
            r.x2.push_back(2.0 * M_PI * j / n_phi);
            r.w.push_back(gl.w[static_cast<size_t>(i)] * (2.0 * M_PI / n_phi));
        }
    return r;
}

double integrate_gl(const std::function<double(double)>& f, double a, double b, int n) {
    static thread_local int cached_n = -1;
    static thread_local QuadratureRule rule{QuadKind::GaussLegendre, 0, {}, {}, {}};
    if (cached_n != n) {
        rule = gauss_legendre(n);
        cached_n = n;
    }
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double s = 0.0;
    for (size_t i = 0; i < rule.x.size(); ++i) s += rule.w[i] * f(mid + half * rule.x[i]);
    return s * half;
}

namespace {

double adapt(const std::function<double(double)>& f, double a, double b, double whole,
             double tol, int depth, int max_depth) {
    double m = 0.5 * (a + b);
    double left = integrate_gl(f, a, m, 15);
    double right = integrate_gl(f, m, b, 15);
    if (depth >= max_depth) return left + right;
    if (std::abs(left + right - whole) <= tol * (1.0 + std::abs(left + right)))
        return left + right;
    return adapt(f, a, m, left, tol * 0.7, depth + 1, max_depth) +
           adapt(f, m, b, right, tol * 0.7, depth + 1, max_depth);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol, int max_depth) {
    double whole = integrate_gl(f, a, b, 15);
    return adapt(f, a, b, whole, tol, 0, max_depth);
}

double integrate_sphere(const std::function<double(double, double)>& f, double radius,
                        int n_theta) {
    QuadratureRule r = product_sphere(n_theta);
    double s = 0.0;
    for (size_t i = 0; i < r.x.size(); ++i) s += r.w[i] * f(r.x[i], r.x2[i]);
    return s * radius * radius;
}

}  // namespace singlab
