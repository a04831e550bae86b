#include "singlab/exact_solutions.hpp"

#include <cmath>
#include <stdexcept>

#include "singlab/quadrature.hpp"
#include "singlab/special.hpp"

namespace singlab {

namespace {

void require_supercritical_c(double c) {
    if (!(std::abs(c) > 1.0))
        throw std::invalid_argument(
            "slezkin-landau: |c| must exceed 1 (axis singularity at |c| = 1)");
}

}  // namespace

FieldSpec slezkin_landau_cartesian(double c) {
    require_supercritical_c(c);
    FieldSpec f;
    f.family = "slezkin-landau-cartesian";
    f.frame = CoordFrame::Cartesian;
    f.params["c"] = c;
    f.singular_set = "origin";
    auto denom = [c](const SeededCoords& q) {
        D4 r = sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2]);
        D4 d = c * r - q[2];
        return std::pair<D4, D4>(r, d * d * r);
    };
    f.velocity[0] = [c, denom](const SeededCoords& q) {
        auto [r, dd] = denom(q);
        return 2.0 * (c * q[2] - r) * q[0] / dd;
    };
    f.velocity[1] = [c, denom](const SeededCoords& q) {
        auto [r, dd] = denom(q);
        return 2.0 * (c * q[2] - r) * q[1] / dd;
    };
    f.velocity[2] = [c, denom](const SeededCoords& q) {
        auto [r, dd] = denom(q);
        return 2.0 * (c * r * r - 2.0 * q[2] * r + c * q[2] * q[2]) / dd;
    };
    f.pressure = [c, denom](const SeededCoords& q) {
        auto [r, dd] = denom(q);
        return 4.0 * (c * q[2] - r) / dd;
    };
    return f;
}

FieldSpec slezkin_landau_spherical_printed(double c) {
    require_supercritical_c(c);
    FieldSpec f;
    f.family = "slezkin-landau-spherical-printed";
    f.frame = CoordFrame::Spherical;
    f.params["c"] = c;
    f.singular_set = "origin";
    f.velocity[0] = [c](const SeededCoords& q) {
        D4 ct = cos(q[1]);
        D4 d = c - ct;
        return (1.0 + ct * ct - 2.0 * c * ct) / (q[0] * d * d);
    };
    f.velocity[1] = [c](const SeededCoords& q) {
        return 2.0 * sin(q[1]) / (q[0] * (c - cos(q[1])));
    };
    f.velocity[2] = [](const SeededCoords&) { return D4(0.0); };
    f.pressure = [c](const SeededCoords& q) {
        D4 ct = cos(q[1]);
        D4 d = c - ct;
        return 4.0 * (c * ct - 1.0) / (q[0] * q[0] * d * d);
    };
    return f;
}

FieldSpec slezkin_landau_spherical_canonical(double c) {
    FieldSpec f = slezkin_landau_spherical_printed(c);
    f.family = "slezkin-landau-spherical-canonical";
    auto u_printed = f.velocity[0];
    auto v_printed = f.velocity[1];
    f.velocity[0] = [u_printed](const SeededCoords& q) { return -2.0 * u_printed(q); };
    f.velocity[1] = [v_printed](const SeededCoords& q) { return -v_printed(q); };
    return f;
}

SlCrossCheck sl_cross_check(double c, const std::vector<std::array<double, 3>>& points) {
    FieldSpec cart = slezkin_landau_cartesian(c);
    FieldSpec sph = slezkin_landau_spherical_printed(c);
    SlCrossCheck out;
    std::vector<double> rr, pp;
    for (const auto& x : points) {
        double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
        double theta = std::atan2(std::hypot(x[0], x[1]), x[2]);
        double phi = std::atan2(x[1], x[0]);
        auto v = cartesian_velocity(cart, x, 0.0);
        double st = std::sin(theta), ct = std::cos(theta);
        double cp = std::cos(phi), sp = std::sin(phi);
        double radial = v[0] * st * cp + v[1] * st * sp + v[2] * ct;
        double polar = v[0] * ct * cp + v[1] * ct * sp - v[2] * st;
        double swirl = -v[0] * sp + v[1] * cp;
        Coords q{r, theta, phi, 0.0};
        double us = sph.velocity_value(0, q);
        double vs = sph.velocity_value(1, q);
        rr.push_back(radial / us);
        pp.push_back(polar / vs);
        out.max_swirl = std::max(out.max_swirl, std::abs(swirl));
    }
    auto mean_spread = [](const std::vector<double>& v, double& mean, double& spread) {
        mean = 0.0;
        for (double x : v) mean += x;
        mean /= static_cast<double>(v.size());
        spread = 0.0;
        for (double x : v) spread = std::max(spread, std::abs(x - mean));
    };
    mean_spread(rr, out.radial_ratio_mean, out.radial_ratio_spread);
    mean_spread(pp, out.polar_ratio_mean, out.polar_ratio_spread);
    return out;
}

double sl_printed_bc(double c) {
    return 8.0 * M_PI * c / (3.0 * (c * c - 1.0)) *
           (2.0 + 6.0 * c -
            3.0 * c * (c * c - 1.0) * std::log((c + 1.0) / (c - 1.0)));
}

double sl_mass_flux(double c, double radius, int quad_order) {
    FieldSpec f = slezkin_landau_cartesian(c);
    return integrate_sphere(
        [&](double theta, double phi) {
            double st = std::sin(theta), ct = std::cos(theta);
            std::array<double, 3> x{radius * st * std::cos(phi),
                                    radius * st * std::sin(phi), radius * ct};
            auto v = cartesian_velocity(f, x, 0.0);
            return (v[0] * x[0] + v[1] * x[1] + v[2] * x[2]) / radius;
        },
        radius, quad_order);
}

SlFluxResult sl_flux_coefficient(double c, double radius, int quad_order) {
    if (radius <= 0.0) throw std::invalid_argument("sl_flux_coefficient: radius > 0");
    FieldSpec f = slezkin_landau_cartesian(c);
    std::array<double, 3> flux{0.0, 0.0, 0.0};
    QuadratureRule rule = product_sphere(quad_order);
    for (size_t ip = 0; ip < rule.x.size(); ++ip) {
        double theta = rule.x[ip], phi = rule.x2[ip], w = rule.w[ip] * radius * radius;
        double st = std::sin(theta), ct = std::cos(theta);
        std::array<double, 3> n{st * std::cos(phi), st * std::sin(phi), ct};
        Coords q{radius * n[0], radius * n[1], radius * n[2], 0.0};
        D4 u0 = f.eval_velocity(0, q), u1 = f.eval_velocity(1, q),
           u2 = f.eval_velocity(2, q);
        D4 p = f.eval_pressure(q);
        double un = u0.v * n[0] + u1.v * n[1] + u2.v * n[2];
        const D4* uu[3] = {&u0, &u1, &u2};
        for (int i = 0; i < 3; ++i) {
            double dn = 0.0;
            for (int j = 0; j < 3; ++j) dn += uu[i]->grad(j) * n[j];
            flux[static_cast<size_t>(i)] += w * (uu[i]->v * un + p.v * n[i] - dn);
        }
    }
    SlFluxResult out;
    out.numeric = flux[2];
    out.transverse = std::max(std::abs(flux[0]), std::abs(flux[1]));
    out.printed_closed_form = sl_printed_bc(c);
    out.printed_asymptote = 16.0 * M_PI / c - 32.0 * M_PI / (3.0 * c * c * c);
    return out;
}

std::vector<SlLimitRow> sl_large_c_limit(const std::array<double, 3>& x) {
    double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
    std::array<double, 3> u0{2.0 * x[2] * x[0] / (r * r * r),
                             2.0 * x[2] * x[1] / (r * r * r), 2.0 / r};
    std::vector<SlLimitRow> rows;
    for (double c : {10.0, 100.0, 1000.0}) {
        auto v = cartesian_velocity(slezkin_landau_cartesian(c), x, 0.0);
        SlLimitRow row;
        row.c = c;
        row.dev_transverse = std::max(std::abs(c * v[0] - u0[0]),
                                      std::abs(c * v[1] - u0[1]));
        row.dev_axial = std::abs(c * v[2] - u0[2]);
        rows.push_back(row);
    }
    return rows;
}

// ------------------------------------------------------------------- vortices

OseenMoffatt oseen_moffatt_vortex(double gamma, double T) {
    if (gamma == 0.0) throw std::invalid_argument("oseen_moffatt_vortex: Gamma != 0");
    OseenMoffatt om;
    om.gamma = gamma;
    om.T = T;
    FieldSpec f;
    f.family = "oseen-moffatt";
    f.frame = CoordFrame::Cylindrical;
    f.steady = false;
    f.has_pressure = false;
    f.params["Gamma"] = gamma;
    f.params["T"] = T;
    f.velocity[0] = [](const SeededCoords&) { return D4(0.0); };
    f.velocity[1] = [gamma, T](const SeededCoords& q) {
        if (q[3].v >= T)
            throw std::domain_error("oseen_moffatt: requires t < T");
        D4 s = T - q[3];
        D4 r = q[0];
        return gamma / (2.0 * M_PI) * (1.0 - exp(-1.0 * r * r / (4.0 * s))) / r;
    };
    f.velocity[2] = [](const SeededCoords&) { return D4(0.0); };
    om.field = f;
    return om;
}

double OseenMoffatt::vorticity(double r, double t) const {
    // axial vorticity (1/r) d(r V)/dr from the exact partials of the field
    Coords q{r, 0.0, 0.0, t};
    D4 V = field.eval_velocity(1, q);
    return V.grad(0) + V.v / r;
}

double OseenMoffatt::vorticity_closed(double r, double t) const {
    double s = T - t;
    return gamma / (4.0 * M_PI * s) * std::exp(-r * r / (4.0 * s));
}

double OseenMoffatt::heat_residual(double r, double t) const {
    // w_t + Lap2 w on the closed-form vorticity
    double g = gamma;
    double Tc = T;
    SeededCoords q{D4::var(0, r), D4(0.0), D4(0.0), D4::var(3, t)};
    D4 s = Tc - q[3];
    D4 w = g / (4.0 * M_PI) / s * exp(-1.0 * q[0] * q[0] / (4.0 * s));
    double lap = w.hess(0, 0) + w.grad(0) / r;
    return w.grad(3) + lap;
}

FieldSpec euler_separable(double T) {
    FieldSpec f;
    f.family = "euler-separable";
    f.frame = CoordFrame::Cylindrical;
    f.steady = false;
    f.has_pressure = false;
    f.params["T"] = T;
    f.singular_set = "t >= T";
    f.velocity[0] = [T](const SeededCoords& q) {
        if (q[3].v >= T) throw std::domain_error("euler_separable: requires t < T");
        D4 r = q[0];
        return (1.0 - exp(-1.0 * r * r)) / (2.0 * r * (T - q[3]));
    };
    f.velocity[1] = [](const SeededCoords&) { return D4(0.0); };
    f.velocity[2] = [T](const SeededCoords& q) {
        if (q[3].v >= T) throw std::domain_error("euler_separable: requires t < T");
        return -1.0 * q[2] * exp(-1.0 * q[0] * q[0]) / (T - q[3]);
    };
    return f;
}

// ----------------------------------------------------------------- von Karman

VonKarmanSolution von_karman(const std::array<double, 5>& state0, double z0, double z1) {
    IvpProblem p;
    p.dim = 5;
    p.y0.assign(state0.begin(), state0.end());
    p.t0 = z0;
    p.t1 = z1;
    p.rhs = [](double, const double* y, double* dy) {
        // state (f, f', f'', g, g')
        dy[0] = y[1];
        dy[1] = y[2];
        dy[2] = -2.0 * y[0] * y[2] + y[1] * y[1] - y[3] * y[3];
        dy[3] = y[4];
        dy[4] = -2.0 * y[0] * y[4] + 2.0 * y[1] * y[3];
    };
    VonKarmanSolution sol;
    sol.traj = std::make_shared<Trajectory>(integrate_ivp(p));
    sol.z0 = z0;
    sol.z1 = z1;
    return sol;
}

std::array<double, 2> von_karman_ode_residual(double f, double fp, double fpp,
                                              double fppp, double g, double gp,
                                              double gpp) {
    return {fppp + 2.0 * f * fpp - fp * fp + g * g, gpp + 2.0 * f * gp - 2.0 * fp * g};
}

FieldSpec VonKarmanSolution::field(bool repaired) const {
    FieldSpec fs;
    fs.family = repaired ? "von-karman-repaired" : "von-karman-printed";
    fs.frame = CoordFrame::Cartesian;
    fs.params["z0"] = z0;
    fs.params["z1"] = z1;
    auto traj = this->traj;
    auto fjets = [traj](double z) {
        auto s = traj->at(z);
        double fppp = -2.0 * s[0] * s[2] + s[1] * s[1] - s[3] * s[3];
        double gpp = -2.0 * s[0] * s[4] + 2.0 * s[1] * s[3];
        return std::array<double, 7>{s[0], s[1], s[2], fppp, s[3], s[4], gpp};
    };
    fs.velocity[0] = [fjets](const SeededCoords& q) {
        auto j = fjets(q[2].v);
        D4 fp = chain(q[2], j[1], j[2], j[3]);
        D4 g = chain(q[2], j[4], j[5], j[6]);
        return fp * q[0] - g * q[1];
    };
    if (repaired) {
        fs.velocity[1] = [fjets](const SeededCoords& q) {
            auto j = fjets(q[2].v);
            D4 fp = chain(q[2], j[1], j[2], j[3]);
            D4 g = chain(q[2], j[4], j[5], j[6]);
            return g * q[0] + fp * q[1];
        };
    } else {
        fs.velocity[1] = [fjets](const SeededCoords& q) {
            auto j = fjets(q[2].v);
            D4 fp = chain(q[2], j[1], j[2], j[3]);
            D4 g = chain(q[2], j[4], j[5], j[6]);
            return fp * q[0] + g * q[1];
        };
    }
    fs.velocity[2] = [fjets](const SeededCoords& q) {
        auto j = fjets(q[2].v);
        D4 f = chain(q[2], j[0], j[1], j[2]);
        return -2.0 * f;
    };
    fs.pressure = [fjets](const SeededCoords& q) {
        auto j = fjets(q[2].v);
        D4 f = chain(q[2], j[0], j[1], j[2]);
        D4 fp = chain(q[2], j[1], j[2], j[3]);
        return -2.0 * (fp + f * f);
    };
    return fs;
}

// -------------------------------------------------------------- Yaceev/Squire

YaceevConstants yaceev_constants(double alpha, double beta, double gamma) {
    YaceevConstants k;
    double s = alpha + beta;
    k.a = gamma * gamma - (1.0 + s) * gamma + 0.5 * s * s - 0.5;
    k.b = (s - 1.0) * gamma - 0.5 * s + 0.5;
    k.c = 0.5 * ((alpha - beta) * (alpha - beta) - 1.0);
    return k;
}

namespace {

Taylor5 derivative_jet(const Taylor5& f) {
    Taylor5 d;
    for (int k = 0; k < 4; ++k) d.t[k] = (k + 1) * f.t[k + 1];
    d.t[4] = 0.0;  // top order lost; callers only use up to third order
    return d;
}

// Gauss hypergeometric series as a jet in z via the parameter-shift
// derivative formula.
Taylor5 kummer_jet(double a, double b, double c, const Taylor5& z) {
    std::array<double, 5> gd;
    double fac = 1.0;
    for (int k = 0; k < 5; ++k) {
        gd[static_cast<size_t>(k)] = fac * kummer_F(a + k, b + k, c + k, z.t[0]);
        fac *= (a + k) * (b + k) / (c + k);
    }
    return Taylor5::compose(gd, z);
}

Taylor5 yaceev_chi(const YaceevParams& p, const Taylor5& th) {
    Taylor5 z = cos(0.5 * th) * cos(0.5 * th);
    Taylor5 chi = pow(cos(0.5 * th), p.gamma) *
                  pow(sin(0.5 * th), 1.0 + p.alpha + p.beta - p.gamma);
    Taylor5 series(0.0);
    if (p.c1 != 0.0)
        series = series + p.c1 * kummer_jet(p.alpha, p.beta, p.gamma, z);
    if (p.c2 != 0.0)
        series = series + p.c2 * kummer_jet(p.alpha + 1.0 - p.gamma,
                                            p.beta + 1.0 - p.gamma, 2.0 - p.gamma, z);
    return chi * series;
}

}  // namespace

YaceevProfiles yaceev_profiles(const YaceevParams& p, double theta) {
    if (!(theta > 0.0 && theta < M_PI))
        throw std::domain_error("yaceev_profiles: theta must lie in (0, pi)");
    Taylor5 th = Taylor5::variable(theta);
    Taylor5 chi = yaceev_chi(p, th);
    Taylor5 vhat = -2.0 * derivative_jet(chi) / chi;
    Taylor5 cot = cos(th) / sin(th);
    Taylor5 uhat = -derivative_jet(vhat) - cot * vhat;
    YaceevConstants k = yaceev_constants(p.alpha, p.beta, p.gamma);
    Taylor5 st = sin(th);
    YaceevProfiles out;
    out.uhat = uhat;
    out.vhat = vhat;
    // once-integrated polar relation; the radial equation pins the
    // integration constant to -c of the family's constant triple
    out.phat = -derivative_jet(vhat) - cot * vhat - 0.5 * vhat * vhat - Taylor5(k.c);
    out.phat_printed = -2.0 * derivative_jet(vhat) +
                       (2.0 * k.b * cos(th) - 2.0 * k.a) / (st * st);
    return out;
}

FieldSpec homogeneous_spherical_field(const std::string& family,
                                      std::function<Taylor5(double)> uhat,
                                      std::function<Taylor5(double)> vhat,
                                      std::function<Taylor5(double)> phat) {
    FieldSpec f;
    f.family = family;
    f.frame = CoordFrame::Spherical;
    f.singular_set = "origin and polar axis";
    auto lift1 = [](const std::function<Taylor5(double)>& g) {
        return [g](const SeededCoords& q) {
            Taylor5 j = g(q[1].v);
            return chain(q[1], j.value(), j.deriv(1), j.deriv(2)) / q[0];
        };
    };
    f.velocity[0] = lift1(uhat);
    f.velocity[1] = lift1(vhat);
    f.velocity[2] = [](const SeededCoords&) { return D4(0.0); };
    f.pressure = [phat](const SeededCoords& q) {
        Taylor5 j = phat(q[1].v);
        return chain(q[1], j.value(), j.deriv(1), j.deriv(2)) / (q[0] * q[0]);
    };
    return f;
}

FieldSpec yaceev(const YaceevParams& p) {
    auto up = [p](double th) { return yaceev_profiles(p, th).uhat; };
    auto vp = [p](double th) { return yaceev_profiles(p, th).vhat; };
    auto pp = [p](double th) { return yaceev_profiles(p, th).phat; };
    FieldSpec f = homogeneous_spherical_field("yaceev", up, vp, pp);
    f.params["alpha"] = p.alpha;
    f.params["beta"] = p.beta;
    f.params["gamma"] = p.gamma;
    f.params["c1"] = p.c1;
    f.params["c2"] = p.c2;
    return f;
}

SquireResult squire(double alpha, double beta, double b, double xi) {
    if (!(xi > -1.0 && xi < 1.0))
        throw std::domain_error("squire: xi must lie in (-1, 1)");
    if (alpha >= 1.0)
        throw std::invalid_argument("squire: integral diverges for alpha >= 1");

    auto integrand = [alpha, beta](double eta) {
        return std::pow(1.0 + eta, beta) / std::pow(1.0 - eta, alpha);
    };
    // I(xi) = int_1^xi integrand = -int_xi^1; endpoint split at 1 - eps with
    // a 4-term series for the algebraic singularity.
    const double eps = 1e-3;
    double main = integrate_adaptive(integrand, xi, 1.0 - eps, 1e-12);
    double tail = 0.0;
    {
        // (1+eta)^beta = 2^beta (1 - s/2)^beta, s = 1 - eta in [0, eps]
        double c0 = std::pow(2.0, beta);
        double coeffs[4] = {1.0, -beta / 2.0, beta * (beta - 1.0) / 8.0,
                            -beta * (beta - 1.0) * (beta - 2.0) / 48.0};
        for (int k = 0; k < 4; ++k) {
            double e = static_cast<double>(k) + 1.0 - alpha;
            tail += c0 * coeffs[k] * std::pow(eps, e) / e;
        }
    }
    double I = -(main + tail);

    Taylor5 x = Taylor5::variable(xi);
    Taylor5 G = pow(1.0 + x, beta) * pow(1.0 - x, -alpha);
    Taylor5 Ij;
    Ij.t[0] = I;
    for (int k = 1; k < 5; ++k) Ij.t[k] = G.t[k - 1] / static_cast<double>(k);

    Taylor5 fj = alpha * (1.0 + x) + beta * (1.0 + x) +
                 2.0 * (1.0 - x * x) * pow(1.0 + x, beta) * pow(1.0 - x, -alpha) /
                     (Taylor5(b) - Ij);

    double f = fj.value(), fp = fj.deriv(1), fpp = fj.deriv(2), fppp = fj.deriv(3);
    SquireResult out;
    out.f = f;
    out.fp = fp;
    out.r0 = fp * fp + f * fpp - 2.0 * fp - (-2.0 * xi * fpp + (1.0 - xi * xi) * fppp);
    return out;
}

// ------------------------------------------------------------ Slezkin Riccati

RiccatiSolution slezkin_riccati(const RiccatiParams& p, double tau0, double tau1,
                                double y0, double yp0, bool printed_linear_form) {
    if (!(tau0 > -1.0 && tau1 < 1.0 && tau0 < tau1))
        throw std::invalid_argument("slezkin_riccati: span must lie inside (-1, 1)");
    if (p.nu <= 0.0) throw std::invalid_argument("slezkin_riccati: nu must be positive");

    auto quad = [p](double tau) { return p.C0 + p.C1 * tau + p.C2 * tau * tau; };
    auto qcoef = [&, printed_linear_form](double tau) {
        double om = 1.0 - tau * tau;
        return printed_linear_form ? quad(tau) / om
                                   : quad(tau) / (2.0 * p.nu * om * om);
    };

    IvpProblem ivp;
    ivp.dim = 2;
    ivp.y0 = {y0, yp0};
    ivp.t0 = tau0;
    ivp.t1 = tau1;
    ivp.rhs = [qcoef](double tau, const double* y, double* dy) {
        dy[0] = y[1];
        dy[1] = -qcoef(tau) * y[0];
    };
    auto traj = std::make_shared<Trajectory>(integrate_ivp(ivp));

    // reject spans on which y vanishes (logarithmic derivative blows up)
    for (size_t i = 1; i < traj->steps(); ++i)
        if (traj->state(i)[0] == 0.0 ||
            (traj->state(i)[0] > 0.0) != (traj->state(i - 1)[0] > 0.0))
            throw std::domain_error(
                "slezkin_riccati: y vanishes near tau = " +
                std::to_string(traj->times()[i]));

    double nu = p.nu;
    auto fval = [traj, nu](double tau) {
        auto s = traj->at(tau);
        return -2.0 * nu * (1.0 - tau * tau) * s[1] / s[0];
    };

    double rmax = 0.0, imax = 0.0;
    int nsamp = 181;
    for (int i = 0; i < nsamp; ++i) {
        double tau = tau0 + (tau1 - tau0) * i / (nsamp - 1.0);
        auto s = traj->at(tau);
        double ly = s[1] / s[0];
        double om = 1.0 - tau * tau;
        double f = -2.0 * nu * om * ly;
        // f' in closed form through y'' = -q y
        double fp = -2.0 * nu * (-2.0 * tau * ly + om * (-qcoef(tau) - ly * ly));
        double riccati = fp - (f * f / (2.0 * nu * om) - 2.0 * tau * f / om +
                               quad(tau) / om);
        double ident = 0.5 * f * f - nu * (om * fp + 2.0 * tau * f) - quad(tau);
        rmax = std::max(rmax, std::abs(riccati));
        imax = std::max(imax, std::abs(ident));
    }
    RiccatiSolution out;
    out.f = fval;
    out.riccati_residual_max = rmax;
    out.identity_residual_max = imax;
    return out;
}

}  // namespace singlab
