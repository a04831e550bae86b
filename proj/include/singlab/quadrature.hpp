#pragma once

#include <array>
#include <functional>
#include <vector>

namespace singlab {

enum class QuadKind {
    GaussLegendre,   // nodes/weights on [-1,1]
    ProductSphere,   // unit-sphere rule: (theta,phi) pairs, weights sum to 4*pi
    GaussianWeight,  // weight exp(-y^2/4) on the line, weights sum to 2*sqrt(pi)
};

/// A concrete rule: 1D rules store nodes in `x`; the sphere rule stores
/// (theta,phi) in `x`,`x2`.
struct QuadratureRule {
    QuadKind kind;
    int order;
    std::vector<double> x;
    std::vector<double> x2;
    std::vector<double> w;

    double domain_measure() const;
};

QuadratureRule gauss_legendre(int n);
QuadratureRule product_sphere(int n_theta);  // n_theta x 2*n_theta points
QuadratureRule gaussian_weight_rule(int n);

/// Integral over [a,b] with a fixed-order Gauss-Legendre rule.
double integrate_gl(const std::function<double(double)>& f, double a, double b, int n);

/// Adaptive panel-splitting Gauss-Legendre integration; endpoints may carry
/// integrable algebraic singularities.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol, int max_depth = 48);

/// Surface integral over the sphere |x| = radius of f(theta, phi).
double integrate_sphere(const std::function<double(double, double)>& f, double radius,
                        int n_theta);

}  // namespace singlab
