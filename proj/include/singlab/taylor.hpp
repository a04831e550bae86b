#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace singlab {

/// Truncated Taylor series in one variable: coefficients t[k] = f^(k)/k!,
/// carried to fourth order. Used to push profile functions through
/// quotient/composition chains with exact derivative bookkeeping.
struct Taylor5 {
    std::array<double, 5> t{};

    Taylor5() = default;
    Taylor5(double v) { t[0] = v; }

    static Taylor5 variable(double v) {
        Taylor5 x(v);
        x.t[1] = 1.0;
        return x;
    }

    double value() const { return t[0]; }
    double deriv(int k) const {
        static const double fact[5] = {1, 1, 2, 6, 24};
        return t[static_cast<size_t>(k)] * fact[k];
    }

    friend Taylor5 operator+(const Taylor5& a, const Taylor5& b) {
        Taylor5 r;
        for (int i = 0; i < 5; ++i) r.t[i] = a.t[i] + b.t[i];
        return r;
    }
    friend Taylor5 operator-(const Taylor5& a, const Taylor5& b) {
        Taylor5 r;
        for (int i = 0; i < 5; ++i) r.t[i] = a.t[i] - b.t[i];
        return r;
    }
    Taylor5 operator-() const {
        Taylor5 r;
        for (int i = 0; i < 5; ++i) r.t[i] = -t[i];
        return r;
    }
    friend Taylor5 operator*(const Taylor5& a, const Taylor5& b) {
        Taylor5 r;
        for (int i = 0; i < 5; ++i)
            for (int j = 0; i + j < 5; ++j) r.t[i + j] += a.t[i] * b.t[j];
        return r;
    }
    friend Taylor5 operator*(double c, const Taylor5& a) {
        Taylor5 r;
        for (int i = 0; i < 5; ++i) r.t[i] = c * a.t[i];
        return r;
    }
    friend Taylor5 operator/(const Taylor5& a, const Taylor5& b) {
        if (b.t[0] == 0.0) throw std::domain_error("Taylor5: division by zero value");
        Taylor5 r;
        r.t[0] = a.t[0] / b.t[0];
        for (int k = 1; k < 5; ++k) {
            double acc = a.t[k];
            for (int j = 1; j <= k; ++j) acc -= b.t[j] * r.t[k - j];
            r.t[k] = acc / b.t[0];
        }
        return r;
    }

    /// Compose g(f) where gd[k] = g^(k) evaluated at f.value().
    static Taylor5 compose(const std::array<double, 5>& gd, const Taylor5& f) {
        Taylor5 dx = f;
        dx.t[0] = 0.0;
        Taylor5 r(gd[0]);
        Taylor5 p(1.0);
        static const double fact[5] = {1, 1, 2, 6, 24};
        for (int k = 1; k < 5; ++k) {
            p = p * dx;
            for (int i = 0; i < 5; ++i) r.t[i] += gd[static_cast<size_t>(k)] / fact[k] * p.t[i];
        }
        return r;
    }

    friend Taylor5 sin(const Taylor5& x) {
        double s = std::sin(x.t[0]), c = std::cos(x.t[0]);
        return compose({s, c, -s, -c, s}, x);
    }
    friend Taylor5 cos(const Taylor5& x) {
        double s = std::sin(x.t[0]), c = std::cos(x.t[0]);
        return compose({c, -s, -c, s, c}, x);
    }
    friend Taylor5 exp(const Taylor5& x) {
        double e = std::exp(x.t[0]);
        return compose({e, e, e, e, e}, x);
    }
    friend Taylor5 log(const Taylor5& x) {
        double v = x.t[0];
        return compose({std::log(v), 1 / v, -1 / (v * v), 2 / (v * v * v),
                        -6 / (v * v * v * v)},
                       x);
    }
    friend Taylor5 pow(const Taylor5& x, double p) {
        double v = x.t[0];
        std::array<double, 5> g;
        g[0] = std::pow(v, p);
        double c = p;
        g[1] = c * std::pow(v, p - 1);
        c *= (p - 1);
        g[2] = c * std::pow(v, p - 2);
        c *= (p - 2);
        g[3] = c * std::pow(v, p - 3);
        c *= (p - 3);
        g[4] = c * std::pow(v, p - 4);
        return compose(g, x);
    }
};

}  // namespace singlab
