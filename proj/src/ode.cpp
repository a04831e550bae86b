#include "singlab/ode.hpp"

#include <algorithm>
#include <cmath>

namespace singlab {

void Trajectory::push(double t, const std::vector<double>& y,
                      const std::vector<double>& f) {
    ts_.push_back(t);
    ys_.push_back(y);
    fs_.push_back(f);
}

std::vector<double> Trajectory::at(double t) const {
    if (ts_.size() == 1) return ys_.front();
    const bool fwd = ts_.back() >= ts_.front();
    double lo = fwd ? ts_.front() : ts_.back();
    double hi = fwd ? ts_.back() : ts_.front();
    double span = hi - lo;
    if (t < lo - 1e-9 * (1.0 + span) || t > hi + 1e-9 * (1.0 + span))
        throw std::out_of_range("Trajectory::at: t outside covered span");
    t = std::clamp(t, lo, hi);

    size_t i = 1;
    if (fwd) {
        while (i + 1 < ts_.size() && ts_[i] < t) ++i;
    } else {
        while (i + 1 < ts_.size() && ts_[i] > t) ++i;
    }
    double ta = ts_[i - 1], tb = ts_[i];
    double h = tb - ta;
    double s = h == 0.0 ? 0.0 : (t - ta) / h;
    double s2 = s * s, s3 = s2 * s;
    double h00 = 2 * s3 - 3 * s2 + 1, h10 = s3 - 2 * s2 + s;
    double h01 = -2 * s3 + 3 * s2, h11 = s3 - s2;
    std::vector<double> out(static_cast<size_t>(dim_));
    for (int c = 0; c < dim_; ++c) {
        size_t cc = static_cast<size_t>(c);
        out[cc] = h00 * ys_[i - 1][cc] + h * h10 * fs_[i - 1][cc] +
                  h01 * ys_[i][cc] + h * h11 * fs_[i][cc];
    }
    return out;
}

namespace {

bool finite_all(const std::vector<double>& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

}  // namespace

Trajectory integrate_ivp(const IvpProblem& p) {
    // Dormand-Prince 5(4)
    static const double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static const double a21 = 1.0 / 5;
    static const double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static const double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static const double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                        a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static const double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                        a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                        a65 = -5103.0 / 18656;
    static const double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                        b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static const double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                        e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

    if (p.rtol <= 0.0 || p.atol <= 0.0)
        throw std::invalid_argument("integrate_ivp: tolerances must be positive");
    if (p.t1 == p.t0) throw std::invalid_argument("integrate_ivp: degenerate span");
    const size_t n = static_cast<size_t>(p.dim);
    if (p.y0.size() != n) throw std::invalid_argument("integrate_ivp: bad y0 size");

    const double dir = p.t1 > p.t0 ? 1.0 : -1.0;
    const double span = std::abs(p.t1 - p.t0);
    double hmax = p.max_step > 0.0 ? p.max_step : span;

    std::vector<double> y = p.y0, f(n), ynew(n), fnew(n), err(n);
    std::vector<std::vector<double>> k(7, std::vector<double>(n));
    double t = p.t0;

    p.rhs(t, y.data(), f.data());
    if (!finite_all(f))
        throw OdeNonConvergence("right-hand side not finite at initial point", t);

    Trajectory traj(p.dim);
    traj.push(t, y, f);

    // initial step: a fraction of the span, shortened when the right-hand
    // side indicates a faster time scale; rejections refine it further
    double h = span / 100.0;
    {
        double ny = 0.0, nf = 0.0;
        for (size_t i = 0; i < n; ++i) {
            ny = std::max(ny, std::abs(y[i]));
            nf = std::max(nf, std::abs(f[i]));
        }
        if (nf > 0.0) h = std::min(h, 0.1 * (ny + p.atol) / nf + 1e-8 * span);
    }
    h = std::min(h, hmax);

    long steps = 0;
    double errold = 1e-4;
    while (dir * (p.t1 - t) > 0.0) {
        if (++steps > p.max_steps)
            throw OdeNonConvergence("step limit exceeded", t);
        double remain = std::abs(p.t1 - t);
        if (remain <= 1e-14 * span) break;  // complete up to rounding
        bool last = false;
        if (h >= remain) {
            h = remain;
            last = true;
        }
        if (h <= std::abs(t) * 1e-14 + 1e-300)
            throw OdeNonConvergence("step-size underflow", t);
        double hd = dir * h;

        k[0] = f;
        auto stage = [&](int s, double cs, auto&&... aw) {
            const double a[] = {aw...};
            for (size_t i = 0; i < n; ++i) {
                double acc = 0.0;
                for (int j = 0; j < s - 1; ++j) acc += a[j] * k[static_cast<size_t>(j)][i];
                ynew[i] = y[i] + hd * acc;
            }
            p.rhs(t + cs * hd, ynew.data(), k[static_cast<size_t>(s - 1)].data());
        };
        stage(2, c2, a21);
        stage(3, c3, a31, a32);
        stage(4, c4, a41, a42, a43);
        stage(5, c5, a51, a52, a53, a54);
        stage(6, 1.0, a61, a62, a63, a64, a65);
        for (size_t i = 0; i < n; ++i)
            ynew[i] = y[i] + hd * (b1 * k[0][i] + b3 * k[2][i] + b4 * k[3][i] +
                                   b5 * k[4][i] + b6 * k[5][i]);
        p.rhs(t + hd, ynew.data(), k[6].data());
        fnew = k[6];

        bool bad = !finite_all(ynew) || !finite_all(fnew);
        double errnorm = 0.0;
        if (!bad) {
            for (size_t i = 0; i < n; ++i) {
                double e = hd * (e1 * k[0][i] + e3 * k[2][i] + e4 * k[3][i] +
                                 e5 * k[4][i] + e6 * k[5][i] + e7 * k[6][i]);
                double sc = p.atol + p.rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
                errnorm += (e / sc) * (e / sc);
            }
            errnorm = std::sqrt(errnorm / static_cast<double>(n));
        }

        if (!bad && errnorm <= 1.0) {
            t = last ? p.t1 : t + hd;
            y = ynew;
            f = fnew;
            traj.push(t, y, f);
            if (p.stop && p.stop(t, y.data())) {
                traj.stopped_early = true;
                return traj;
            }
            double fac = 0.9 * std::pow(std::max(errnorm, 1e-16), -0.7 / 5.0) *
                         std::pow(errold, 0.4 / 5.0);
            fac = std::clamp(fac, 0.2, 6.0);
            errold = std::max(errnorm, 1e-4);
            h = std::min(h * fac, hmax);
        } else {
            double fac = bad ? 0.1 : std::clamp(0.9 * std::pow(errnorm, -0.2), 0.1, 1.0);
            h *= fac;
        }
    }
    return traj;
}

Trajectory integrate_fixed_rk8(const IvpProblem& p, long nsteps) {
    // 12-stage eighth-order Dormand-Prince step (Hairer-Norsett-Wanner).
    static const double c2 = 0.526001519587677318785587544488e-1,
                        c3 = 0.789002279381515978178381316732e-1,
                        c4 = 0.118350341907227396726757197510,
                        c5 = 0.281649658092772603273242802490,
                        c6 = 1.0 / 3.0, c7 = 0.25,
                        c8 = 0.307692307692307692307692307692,
                        c9 = 0.651282051282051282051282051282,
                        c10 = 0.6,
                        c11 = 0.857142857142857142857142857142;
    static const double b1 = 5.42937341165687622380535766363e-2,
                        b6 = 4.45031289275240888144113950566,
                        b7 = 1.89151789931450038304281599044,
                        b8 = -5.8012039600105847814672114227,
                        b9 = 3.1116436695781989440891606237e-1,
                        b10 = -1.52160949662516078556178806805e-1,
                        b11 = 2.01365400804030348374776537501e-1,
                        b12 = 4.47106157277725905176885569043e-2;
    static const double a21 = 5.26001519587677318785587544488e-2,
                        a31 = 1.97250569845378994544595329183e-2,
                        a32 = 5.91751709536136983633785987549e-2,
                        a41 = 2.95875854768068491816892993775e-2,
                        a43 = 8.87627564304205475450678981324e-2,
                        a51 = 2.41365134159266685502369798665e-1,
                        a53 = -8.84549479328286085344864962717e-1,
                        a54 = 9.24834003261792003115737966543e-1,
                        a61 = 3.7037037037037037037037037037e-2,
                        a64 = 1.70828608729473871279604482173e-1,
                        a65 = 1.25467687566822425016691814123e-1,
                        a71 = 3.7109375e-2,
                        a74 = 1.70252211019544039314978060272e-1,
                        a75 = 6.02165389804559606850219397283e-2,
                        a76 = -1.7578125e-2;
    static const double a81 = 3.70920001185047927108779319836e-2,
                        a84 = 1.70383925712239993810214054705e-1,
                        a85 = 1.07262030446373284651809199168e-1,
                        a86 = -1.53194377486244017527936158236e-2,
                        a87 = 8.27378916381402288758473766002e-3,
                        a91 = 6.24110958716075717114429577812e-1,
                        a94 = -3.36089262944694129406857109825,
                        a95 = -8.68219346841726006818189891453e-1,
                        a96 = 2.75920996994467083049415600797e1,
                        a97 = 2.01540675504778934086186788979e1,
                        a98 = -4.34898841810699588477366255144e1,
                        a101 = 4.77662536438264365890433908527e-1,
                        a104 = -2.48811461997166764192642586468,
                        a105 = -5.90290826836842996371446475743e-1,
                        a106 = 2.12300514481811942347288949897e1,
                        a107 = 1.52792336328824235832596922938e1,
                        a108 = -3.32882109689848629194453265587e1,
                        a109 = -2.03312017085086261358222928593e-2;
    static const double a111 = -9.3714243008598732571704021658e-1,
                        a114 = 5.18637242884406370830023853209,
                        a115 = 1.09143734899672957818500254654,
                        a116 = -8.14978701074692612513997267357,
                        a117 = -1.85200656599969598641566180701e1,
                        a118 = 2.27394870993505042818970056734e1,
                        a119 = 2.49360555267965238987089396762,
                        a1110 = -3.0467644718982195003823669022,
                        a121 = 2.27331014751653820792359768449,
                        a124 = -1.05344954667372501984066689879e1,
                        a125 = -2.00087205822486249909675718444,
                        a126 = -1.79589318631187989172765950534e1,
                        a127 = 2.79488845294199600508499808837e1,
                        a128 = -2.85899827713502369474065508674,
                        a129 = -8.87285693353062954433549289258,
                        a1210 = 1.23605671757943030647266201528e1,
                        a1211 = 6.43392746015763530355970484046e-1;

    const size_t n = static_cast<size_t>(p.dim);
    std::vector<double> y = p.y0, w(n);
    std::vector<std::vector<double>> k(12, std::vector<double>(n));
    const double h = (p.t1 - p.t0) / static_cast<double>(nsteps);
    double t = p.t0;

    Trajectory traj(p.dim);
    std::vector<double> f0(n);
    p.rhs(t, y.data(), f0.data());
    traj.push(t, y, f0);

    for (long s = 0; s < nsteps; ++s) {
        p.rhs(t, y.data(), k[0].data());
        auto lin = [&](std::initializer_list<std::pair<double, int>> terms, double cs) {
            for (size_t i = 0; i < n; ++i) {
                double acc = 0.0;
                for (auto [a, j] : terms) acc += a * k[static_cast<size_t>(j)][i];
                w[i] = y[i] + h * acc;
            }
            return t + cs * h;
        };
        double ts;
        ts = lin({{a21, 0}}, c2);
        p.rhs(ts, w.data(), k[1].data());
        ts = lin({{a31, 0}, {a32, 1}}, c3);
        p.rhs(ts, w.data(), k[2].data());
        ts = lin({{a41, 0}, {a43, 2}}, c4);
        p.rhs(ts, w.data(), k[3].data());
        ts = lin({{a51, 0}, {a53, 2}, {a54, 3}}, c5);
        p.rhs(ts, w.data(), k[4].data());
        ts = lin({{a61, 0}, {a64, 3}, {a65, 4}}, c6);
        p.rhs(ts, w.data(), k[5].data());
        ts = lin({{a71, 0}, {a74, 3}, {a75, 4}, {a76, 5}}, c7);
        p.rhs(ts, w.data(), k[6].data());
        ts = lin({{a81, 0}, {a84, 3}, {a85, 4}, {a86, 5}, {a87, 6}}, c8);
        p.rhs(ts, w.data(), k[7].data());
        ts = lin({{a91, 0}, {a94, 3}, {a95, 4}, {a96, 5}, {a97, 6}, {a98, 7}}, c9);
        p.rhs(ts, w.data(), k[8].data());
        ts = lin({{a101, 0}, {a104, 3}, {a105, 4}, {a106, 5}, {a107, 6}, {a108, 7},
                  {a109, 8}},
                 c10);
        p.rhs(ts, w.data(), k[9].data());
        ts = lin({{a111, 0}, {a114, 3}, {a115, 4}, {a116, 5}, {a117, 6}, {a118, 7},
                  {a119, 8}, {a1110, 9}},
                 c11);
        p.rhs(ts, w.data(), k[10].data());
        ts = lin({{a121, 0}, {a124, 3}, {a125, 4}, {a126, 5}, {a127, 6}, {a128, 7},
                  {a129, 8}, {a1210, 9}, {a1211, 10}},
                 1.0);
        p.rhs(ts, w.data(), k[11].data());

        for (size_t i = 0; i < n; ++i)
            y[i] += h * (b1 * k[0][i] + b6 * k[5][i] + b7 * k[6][i] + b8 * k[7][i] +
                         b9 * k[8][i] + b10 * k[9][i] + b11 * k[10][i] +
                         b12 * k[11][i]);
        t = p.t0 + h * static_cast<double>(s + 1);
        if (!finite_all(y)) throw OdeNonConvergence("rk8: state not finite", t);
        p.rhs(t, y.data(), f0.data());
        traj.push(t, y, f0);
        if (p.stop && p.stop(t, y.data())) {
            traj.stopped_early = true;
            break;
        }
    }
    return traj;
}

}  // namespace singlab
