#include "singlab/scaling.hpp"

#include <cmath>
#include <stdexcept>

#include "singlab/gaussian_inner.hpp"
#include "singlab/quadrature.hpp"

namespace singlab {

std::string frame_kind_name(FrameKind k) {
    switch (k) {
        case FrameKind::BlowupSimilarity: return "blowup-similarity";
        case FrameKind::GlobalSimilarity: return "global-similarity";
        case FrameKind::Burnett: return "burnett";
        case FrameKind::Twistor: return "twistor";
        case FrameKind::CkRescale: return "ck-rescale";
    }
    return "?";
}

FrameKind frame_kind_from_string(const std::string& s) {
    if (s == "blowup-similarity") return FrameKind::BlowupSimilarity;
    if (s == "global-similarity") return FrameKind::GlobalSimilarity;
    if (s == "burnett") return FrameKind::Burnett;
    if (s == "twistor") return FrameKind::Twistor;
    if (s == "ck-rescale") return FrameKind::CkRescale;
    throw std::invalid_argument("unknown frame kind: " + s);
}

double ScalingFrame::ak() const { return std::pow(Ck, -2.0 / 3.0); }
double ScalingFrame::delta_k() const { return std::cbrt(Ck); }

double twistor_angle(double mu, double sigma, double tau) { return mu + sigma * tau; }

FrameSample rescale_forward(const ScalingFrame& f, const FrameSample& in) {
    FrameSample out;
    switch (f.kind) {
        case FrameKind::BlowupSimilarity: {
            if (!(in.t < f.T))
                throw std::domain_error("blow-up frame requires t < T");
            double s = f.T - in.t;
            double rs = std::sqrt(s);
            out.t = -std::log(s);
            for (int i = 0; i < 3; ++i) {
                out.x[static_cast<size_t>(i)] = in.x[static_cast<size_t>(i)] / rs;
                out.u[static_cast<size_t>(i)] = in.u[static_cast<size_t>(i)] * rs;
            }
            out.p = in.p * s;
            return out;
        }
        case FrameKind::GlobalSimilarity: {
            if (!(in.t > 0.0))
                throw std::domain_error("global frame requires t > 0");
            double rs = std::sqrt(in.t);
            out.t = std::log(in.t);
            for (int i = 0; i < 3; ++i) {
                out.x[static_cast<size_t>(i)] = in.x[static_cast<size_t>(i)] / rs;
                out.u[static_cast<size_t>(i)] = in.u[static_cast<size_t>(i)] * rs;
            }
            out.p = in.p * in.t;
            return out;
        }
        case FrameKind::Burnett: {
            if (!(in.t < f.T))
                throw std::domain_error("burnett frame requires t < T");
            double s = f.T - in.t;
            double q = std::pow(s, 0.25);
            out.t = -std::log(s);
            for (int i = 0; i < 3; ++i) {
                out.x[static_cast<size_t>(i)] = in.x[static_cast<size_t>(i)] / q;
                out.u[static_cast<size_t>(i)] =
                    in.u[static_cast<size_t>(i)] * std::pow(s, 0.75);
            }
            out.p = in.p * std::pow(s, 1.5);
            return out;
        }
        case FrameKind::Twistor: {
            if (!(in.t < f.T))
                throw std::domain_error("twistor frame requires t < T");
            double s = f.T - in.t;
            double rs = std::sqrt(s);
            out.t = -std::log(s);
            out.x[0] = in.x[0] / rs;                      // y = r / sqrt(T-t)
            out.x[1] = in.x[1] + f.sigma * std::log(s);   // mu = phi + sigma ln(T-t)
            out.x[2] = in.x[2] / rs;
            out.u[0] = in.u[0] * rs;
            out.u[1] = in.u[1] * rs;
            out.u[2] = in.u[2] * s;  // the linear-in-z amplitude
            out.p = in.p * s;
            return out;
        }
        case FrameKind::CkRescale: {
            if (!(f.Ck >= 1.0))
                throw std::domain_error("ck-rescale requires Ck >= 1");
            double a = f.ak();
            out.t = in.t / (a * a);
            for (int i = 0; i < 3; ++i) {
                out.x[static_cast<size_t>(i)] = in.x[static_cast<size_t>(i)] / a;
                out.u[static_cast<size_t>(i)] = in.u[static_cast<size_t>(i)] / f.Ck;
            }
            out.p = in.p / (f.Ck * f.Ck);
            return out;
        }
    }
    throw std::logic_error("rescale_forward: bad kind");
}

FrameSample rescale_inverse(const ScalingFrame& f, const FrameSample& in) {
    FrameSample out;
    switch (f.kind) {
        case FrameKind::BlowupSimilarity:
        case FrameKind::Burnett:
        case FrameKind::Twistor: {
            double s = std::exp(-in.t);
            out.t = f.T - s;
            if (f.kind == FrameKind::Burnett) {
                double q = std::pow(s, 0.25);
                for (int i = 0; i < 3; ++i) {
                    out.x[static_cast<size_t>(i)] = in.x[static_cast<size_t>(i)] * q;
                    out.u[static_cast<size_t>(i)] =
                        in.u[static_cast<size_t>(i)] * std::pow(s, -0.75);
                }
                out.p = in.p * std::pow(s, -1.5);
            } else {
                double rs = std::sqrt(s);
                for (int i = 0; i < 3; ++i) {
                    out.x[static_cast<size_t>(i)] = in.x[static_cast<size_t>(i)] * rs;
                    out.u[static_cast<size_t>(i)] = in.u[static_cast<size_t>(i)] / rs;
                }
                out.p = in.p / s;
                if (f.kind == FrameKind::Twistor) {
                    out.x[1] = in.x[1] - f.sigma * std::log(s);
                    out.u[2] = in.u[2] / s;
                    out.x[2] = in.x[2] * rs;
                }
            }
            return out;
        }
        case FrameKind::GlobalSimilarity: {
            double t = std::exp(in.t);
            out.t = t;
            double rs = std::sqrt(t);
            for (int i = 0; i < 3; ++i) {
                out.x[static_cast<size_t>(i)] = in.x[static_cast<size_t>(i)] * rs;
                out.u[static_cast<size_t>(i)] = in.u[static_cast<size_t>(i)] / rs;
            }
            out.p = in.p / t;
            return out;
        }
        case FrameKind::CkRescale: {
            double a = f.ak();
            out.t = in.t * a * a;
            for (int i = 0; i < 3; ++i) {
                out.x[static_cast<size_t>(i)] = in.x[static_cast<size_t>(i)] * a;
                out.u[static_cast<size_t>(i)] = in.u[static_cast<size_t>(i)] * f.Ck;
            }
            out.p = in.p * f.Ck * f.Ck;
            return out;
        }
    }
    throw std::logic_error("rescale_inverse: bad kind");
}

// -------------------------------------------------------------- Stokes modes

namespace {

const std::vector<SolenoidalMode>& basis_cache(int k) {
    static std::map<int, std::vector<SolenoidalMode>> cache;
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, solenoidal_basis(k)).first;
    return it->second;
}

const SolenoidalMode& mode_of(const std::pair<int, int>& id) {
    const auto& b = basis_cache(id.first);
    if (id.second < 0 || static_cast<size_t>(id.second) >= b.size())
        throw std::invalid_argument("stokes mode id out of range");
    return b[static_cast<size_t>(id.second)];
}

// integral of (v . w) F^2 over R^3, exact rational part (common factor
// 2^{3/2} pi^{-3/2} dropped -- identical for every entry)
Rational pair_l2(const std::array<ExactPolynomial3, 3>& a,
                 const std::array<ExactPolynomial3, 3>& b) {
    Rational out(0);
    for (int i = 0; i < 3; ++i) {
        GaussianValue g = gaussian_weighted_inner(a[static_cast<size_t>(i)],
                                                  b[static_cast<size_t>(i)],
                                                  GaussianWeight::SquaredF);
        out += g.coeff;
    }
    return out;
}

double l2_common_factor() { return std::pow(2.0, 1.5) * std::pow(M_PI, -1.5); }

// gradient entries: d_j (v_i F) = (d_j v_i - y_j v_i / 2) F
ExactPolynomial3 grad_poly(const ExactPolynomial3& v, int j) {
    return v.differentiate(j) - rat(1, 2) * v.mul_var(j);
}

}  // namespace

StokesModeState stokes_mode_evolution(const StokesModeState& s, double dtau) {
    StokesModeState out = s;
    out.tau += dtau;
    for (auto& [id, c] : out.coeff)
        c *= std::exp(-(1.0 + id.first) * 0.5 * dtau);
    return out;
}

Functionals stokes_functionals(const StokesModeState& s) {
    Functionals f{};
    double l2 = 0.0, diss = 0.0;
    for (const auto& [ida, ca] : s.coeff) {
        const auto& ma = mode_of(ida);
        for (const auto& [idb, cb] : s.coeff) {
            const auto& mb = mode_of(idb);
            l2 += ca * cb * to_double(pair_l2(ma.components, mb.components));
            Rational dsum(0);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    GaussianValue g = gaussian_weighted_inner(
                        grad_poly(ma.components[static_cast<size_t>(i)], j),
                        grad_poly(mb.components[static_cast<size_t>(i)], j),
                        GaussianWeight::SquaredF);
                    dsum += g.coeff;
                }
            diss += ca * cb * to_double(dsum);
        }
        for (int i = 0; i < 3; ++i) {
            GaussianValue g = gaussian_integral(
                ma.components[static_cast<size_t>(i)], GaussianWeight::Direct);
            f.component_masses[static_cast<size_t>(i)] += ca * g.value();
        }
    }
    f.l2_squared = l2 * l2_common_factor();
    f.dissipation = diss * l2_common_factor();
    f.kinetic_energy = 0.5 * f.l2_squared;
    return f;
}

double stokes_energy_identity_residual(const StokesModeState& s, double fd_step) {
    auto n2 = [&](double dtau) {
        return stokes_functionals(stokes_mode_evolution(s, dtau)).l2_squared;
    };
    double h = fd_step;
    double dN = (-n2(2 * h) + 8 * n2(h) - 8 * n2(-h) + n2(-2 * h)) / (12 * h);
    Functionals f = stokes_functionals(s);
    return std::abs(0.5 * dN - (-f.dissipation + 0.25 * f.l2_squared));
}

double rescaled_l2_growth_factor(double dtau) { return std::exp(0.5 * dtau); }

std::vector<Rational> project_onto_solenoidal(const std::array<ExactPolynomial3, 3>& v,
                                              int k) {
    const auto& basis = basis_cache(k);
    const size_t n = basis.size();
    std::vector<std::vector<Rational>> G(n, std::vector<Rational>(n + 1, Rational(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j)
            G[i][j] = pair_l2(basis[i].components, basis[j].components);
        G[i][n] = pair_l2(basis[i].components, v);
    }
    // exact Gaussian elimination on the (symmetric positive definite) Gram
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && is_zero(G[piv][c])) ++piv;
        if (piv == n) throw std::logic_error("projection: singular Gram matrix");
        std::swap(G[piv], G[c]);
        Rational inv = Rational(1) / G[c][c];
        for (size_t j = c; j <= n; ++j) G[c][j] *= inv;
        for (size_t r = 0; r < n; ++r) {
            if (r == c || is_zero(G[r][c])) continue;
            Rational fpiv = G[r][c];
            for (size_t j = c; j <= n; ++j) G[r][j] -= fpiv * G[c][j];
        }
    }
    std::vector<Rational> out(n);
    for (size_t i = 0; i < n; ++i) out[i] = G[i][n];
    return out;
}

QuadFunctionals functionals_quadrature(
    const std::function<std::array<double, 3>(const std::array<double, 3>&)>& vel,
    double width, double widths, int points_per_axis) {
    double R = width * widths;
    QuadratureRule gl = gauss_legendre(points_per_axis);
    QuadFunctionals out{};
    double l2 = 0.0;
    std::array<double, 3> mass{};
    for (size_t i = 0; i < gl.x.size(); ++i)
        for (size_t j = 0; j < gl.x.size(); ++j)
            for (size_t k = 0; k < gl.x.size(); ++k) {
                std::array<double, 3> x{R * gl.x[i], R * gl.x[j], R * gl.x[k]};
                double w = gl.w[i] * gl.w[j] * gl.w[k] * R * R * R;
                auto u = vel(x);
                l2 += w * (u[0] * u[0] + u[1] * u[1] + u[2] * u[2]);
                for (int c = 0; c < 3; ++c)
                    mass[static_cast<size_t>(c)] += w * u[static_cast<size_t>(c)];
            }
    out.value.l2_squared = l2;
    out.value.kinetic_energy = 0.5 * l2;
    out.value.dissipation = 0.0;  // not estimated by this quadrature
    out.value.component_masses = mass;
    // crude tail bound for Gaussian-width decay
    out.tail_bound = std::exp(-0.5 * widths * widths);
    return out;
}

// ---------------------------------------------------------------- slow swirl

double slow_swirl_coefficient(SwirlProfile profile, double delta, double t) {
    if (!(t < 0.0)) throw std::domain_error("slow_swirl: t < 0 required");
    switch (profile) {
        case SwirlProfile::Constant:
            return 0.0;
        case SwirlProfile::PureLogTw:
            return 1.0;
        case SwirlProfile::DoubleLogDamped: {
            double s = -t;
            double absln = std::abs(std::log(s));
            double M = std::log(absln);
            if (!(M > 0.0))
                throw std::domain_error("slow_swirl: requires |ln(-t)| > 1");
            return std::pow(M, -delta) * (1.0 - delta / M);
        }
    }
    throw std::logic_error("slow_swirl: bad profile");
}

double swirl_term(double sigma, SwirlProfile profile, double delta, double t) {
    return sigma * slow_swirl_coefficient(profile, delta, t);
}

}  // namespace singlab
