#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace singlab {

/// Forward-mode scalar carrying value, gradient and Hessian w.r.t. N seed
/// variables. Field evaluators are written once against this type, which
/// yields closed-form first and second partials at machine precision.
template <int N>
struct D2 {
    double v = 0.0;
    std::array<double, N> g{};
    std::array<double, N * N> h{};  // row-major symmetric

    D2() = default;
    D2(double val) : v(val) {}

    static D2 var(int i, double val) {
        D2 x(val);
        x.g[static_cast<size_t>(i)] = 1.0;
        return x;
    }

    double grad(int i) const { return g[static_cast<size_t>(i)]; }
    double hess(int i, int j) const { return h[static_cast<size_t>(i * N + j)]; }
    double& hess_ref(int i, int j) { return h[static_cast<size_t>(i * N + j)]; }

    D2 operator-() const {
        D2 r;
        r.v = -v;
        for (int i = 0; i < N; ++i) r.g[i] = -g[i];
        for (int i = 0; i < N * N; ++i) r.h[i] = -h[i];
        return r;
    }

    D2& operator+=(const D2& o) {
        v += o.v;
        for (int i = 0; i < N; ++i) g[i] += o.g[i];
        for (int i = 0; i < N * N; ++i) h[i] += o.h[i];
        return *this;
    }
    D2& operator-=(const D2& o) {
        v -= o.v;
        for (int i = 0; i < N; ++i) g[i] -= o.g[i];
        for (int i = 0; i < N * N; ++i) h[i] -= o.h[i];
        return *this;
    }

    friend D2 operator+(D2 a, const D2& b) { return a += b; }
    friend D2 operator-(D2 a, const D2& b) { return a -= b; }

    friend D2 operator*(const D2& a, const D2& b) {
        D2 r;
        r.v = a.v * b.v;
        for (int i = 0; i < N; ++i) r.g[i] = a.g[i] * b.v + a.v * b.g[i];
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                r.h[i * N + j] = a.h[i * N + j] * b.v + a.g[i] * b.g[j] +
                                 a.g[j] * b.g[i] + a.v * b.h[i * N + j];
        return r;
    }

    friend D2 operator/(const D2& a, const D2& b) { return a * inv(b); }

    friend D2 inv(const D2& b) {
        D2 r;
        double iv = 1.0 / b.v;
        r.v = iv;
        for (int i = 0; i < N; ++i) r.g[i] = -b.g[i] * iv * iv;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                r.h[i * N + j] =
                    (2.0 * b.g[i] * b.g[j] * iv - b.h[i * N + j]) * iv * iv;
        return r;
    }

    /// Chain rule for a scalar function with f(v), f'(v), f''(v).
    friend D2 chain(const D2& x, double f, double fp, double fpp) {
        D2 r;
        r.v = f;
        for (int i = 0; i < N; ++i) r.g[i] = fp * x.g[i];
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                r.h[i * N + j] = fpp * x.g[i] * x.g[j] + fp * x.h[i * N + j];
        return r;
    }

    friend D2 exp(const D2& x) {
        double e = std::exp(x.v);
        return chain(x, e, e, e);
    }
    friend D2 log(const D2& x) {
        return chain(x, std::log(x.v), 1.0 / x.v, -1.0 / (x.v * x.v));
    }
    friend D2 sqrt(const D2& x) {
        double s = std::sqrt(x.v);
        return chain(x, s, 0.5 / s, -0.25 / (s * x.v));
    }
    friend D2 sin(const D2& x) {
        return chain(x, std::sin(x.v), std::cos(x.v), -std::sin(x.v));
    }
    friend D2 cos(const D2& x) {
        return chain(x, std::cos(x.v), -std::sin(x.v), -std::cos(x.v));
    }
    friend D2 pow(const D2& x, double p) {
        double f = std::pow(x.v, p);
        return chain(x, f, p * f / x.v, p * (p - 1.0) * f / (x.v * x.v));
    }
    friend D2 abs(const D2& x) { return x.v >= 0.0 ? x : -x; }
};

template <int N>
D2<N> operator*(double a, const D2<N>& b) {
    return D2<N>(a) * b;
}
template <int N>
D2<N> operator+(double a, const D2<N>& b) {
    return D2<N>(a) + b;
}
template <int N>
D2<N> operator-(double a, const D2<N>& b) {
    return D2<N>(a) - b;
}
template <int N>
D2<N> operator/(double a, const D2<N>& b) {
    return D2<N>(a) / b;
}

using D4 = D2<4>;  // field arguments (q0,q1,q2,t) in the native frame

}  // namespace singlab
