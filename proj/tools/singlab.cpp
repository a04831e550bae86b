// singlab: command-line front end for the singular-solution laboratory.
//
// Exit codes: 0 pass, 1 verification failure, 2 usage error,
// 3 numerical inconclusiveness.

#include <CLI11.hpp>
#include <cstdlib>
#include <future>
#include <random>
#include <iostream>
#include <sstream>

#include "singlab/adjudicate.hpp"
#include "singlab/residuals.hpp"
#include "singlab/blowup_lab.hpp"
#include "singlab/csv.hpp"
#include "singlab/scaling.hpp"
#include "singlab/solenoidal.hpp"
#include "singlab/svg.hpp"

using namespace singlab;

namespace {

int threads_from_env() {
    const char* t = std::getenv("SINGLAB_THREADS");
    if (!t) return 1;
    int n = std::atoi(t);
    return n > 0 ? n : 1;
}

std::string out_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    const char* env = std::getenv("SINGLAB_OUT");
    return env ? env : ".";
}

/// Deterministic parallel map: tasks run on up to `nthreads` workers and the
/// results are concatenated in task order, so the output does not depend on
/// the parallelism degree.
template <typename Task>
std::vector<AdjudicationRow> ordered_parallel(const std::vector<Task>& tasks,
                                              int nthreads) {
    std::vector<std::future<std::vector<AdjudicationRow>>> futs;
    std::vector<std::vector<AdjudicationRow>> results(tasks.size());
    size_t next = 0;
    while (next < tasks.size()) {
        size_t batch = std::min<size_t>(static_cast<size_t>(nthreads),
                                        tasks.size() - next);
        futs.clear();
        for (size_t i = 0; i < batch; ++i)
            futs.push_back(std::async(std::launch::async, tasks[next + i]));
        for (size_t i = 0; i < batch; ++i) results[next + i] = futs[i].get();
        next += batch;
    }
    std::vector<AdjudicationRow> rows;
    for (auto& r : results) rows.insert(rows.end(), r.begin(), r.end());
    return rows;
}

int emit_ledger(const std::vector<AdjudicationRow>& rows, const std::string& dir,
                const std::string& canonical, const std::string& filename) {
    write_csv(dir + "/" + filename, ledger_csv(rows), canonical);
    int confirmed = 0, refuted = 0, repaired = 0;
    for (const auto& r : rows) {
        if (r.status == "confirmed") ++confirmed;
        if (r.status == "refuted") ++refuted;
        if (r.status == "repaired") ++repaired;
    }
    std::cout << "ledger: " << confirmed << " confirmed, " << repaired
              << " repaired, " << refuted << " refuted -> " << dir << "/"
              << filename << "\n";
    return ledger_accepts(rows) ? 0 : 1;
}

std::string trajectory_csv(const Trajectory& tr) {
    std::ostringstream os;
    os << "s";
    for (int c = 0; c < tr.dim(); ++c) os << ",y" << c;
    os << "\n";
    os.precision(15);
    for (size_t i = 0; i < tr.steps(); ++i) {
        os << tr.times()[i];
        for (int c = 0; c < tr.dim(); ++c)
            os << "," << tr.state(i)[static_cast<size_t>(c)];
        os << "\n";
    }
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"singlab: exact solutions, spectral ladders and blow-up "
                 "rescalings under residual oracles"};
    app.set_config("--config", "", "plain-text sectioned key=value config file");
    app.require_subcommand(1);
    app.fallthrough();

    std::string out_flag;
    unsigned seed = 20260808;
    app.add_option("--out", out_flag, "output directory (or SINGLAB_OUT)");
    app.add_option("--seed", seed, "seed for randomized sample points");

    // ---------------------------------------------------------- verify-exact
    auto* verify = app.add_subcommand("verify-exact",
                                      "adjudicate a printed solution family");
    std::string family;
    double c_param = 2.0;
    verify->add_option("--family", family, "family tag")->required();
    verify->add_option("--c", c_param, "jet parameter, |c| > 1");

    // --------------------------------------------------------------- spectra
    auto* spectra = app.add_subcommand("spectra",
                                       "solenoidal basis and pairing matrix");
    int kmax = 4;
    spectra->add_option("--kmax", kmax, "largest order (<= 6)");

    // ----------------------------------------------------------------- shoot
    auto* shoot = app.add_subcommand("shoot", "shooting experiments");
    std::string tag = "emden", preset;
    int N = 3, k_arg = 10, beta_order = 2;
    double p_exp = 4.0, phi0 = 0.1, phi0p = 0.0, smax = 60.0, amp = 0.1, fj = 1.0;
    bool emit_plot = false, with_oracle = false;
    shoot->add_option("tag", tag,
                      "emden | regular-profile | fk-spectrum | fk-inner | "
                      "hj-profile");
    shoot->add_option("--preset", preset, "fig2a|fig2b|fig3|fig4a|fig4b");
    shoot->add_option("--N", N, "dimension");
    shoot->add_option("--p", p_exp, "nonlinearity exponent");
    shoot->add_option("--phi0", phi0, "initial value");
    shoot->add_option("--phi0p", phi0p, "initial slope");
    shoot->add_option("--smax", smax, "span");
    shoot->add_option("--amplitude", amp, "regular-profile amplitude");
    shoot->add_option("--k", k_arg, "spectrum label cap");
    shoot->add_option("--beta-order", beta_order, "profile order");
    shoot->add_option("--fj", fj, "profile coefficient");
    shoot->add_flag("--emit-plot", emit_plot, "write an SVG polyline");
    shoot->add_flag("--oracle", with_oracle, "also run the fixed-step oracle");

    // ------------------------------------------------------------- exponents
    auto* expo = app.add_subcommand("exponents", "critical exponents and rates");
    int e_N = 3, e_m = 1, e_l = 1;
    double e_sigma = 0.0;
    bool e_fk = false, e_hardy = false;
    double r_lambda = -3.0, r_delta = 3.0, r_gamma = 2.0;
    int r_beta = 2;
    bool e_rates = false;
    std::string ladder_tag;
    int ladder_order = 0;
    expo->add_option("--N", e_N, "dimension");
    expo->add_option("--m", e_m, "half operator order");
    expo->add_option("--l", e_l, "fourth-order family order");
    expo->add_option("--sigma-q", e_sigma, "quasilinear exponent");
    expo->add_flag("--fk", e_fk, "include the reaction-operator exponents");
    expo->add_flag("--hardy", e_hardy, "include the quotient constants");
    expo->add_flag("--rates", e_rates, "include the rate catalog");
    expo->add_option("--lambda", r_lambda, "rate eigenvalue");
    expo->add_option("--delta", r_delta, "rate singularity exponent");
    expo->add_option("--gamma", r_gamma, "rate profile exponent");
    expo->add_option("--beta-order", r_beta, "rate mode order");
    expo->add_option("--ladder", ladder_tag, "spectral ladder family");
    expo->add_option("--order", ladder_order, "ladder order");

    // --------------------------------------------------------------- rescale
    auto* resc = app.add_subcommand("rescale", "frame maps and round trips");
    std::string frame_tag = "blowup-similarity";
    double fr_T = 0.0, fr_sigma = 0.0, fr_Ck = 1.0;
    std::vector<double> sample{1.0, 0.5, -0.3, -1.0, 0.2, -0.4, 0.7, 0.1};
    resc->add_option("--frame", frame_tag, "frame kind");
    resc->add_option("--T", fr_T, "blow-up instant");
    resc->add_option("--sigma", fr_sigma, "swirl speed");
    resc->add_option("--Ck", fr_Ck, "sup normalization");
    resc->add_option("--sample", sample, "x1 x2 x3 t u1 u2 u3 p")->expected(8);

    // ----------------------------------------------------------- functionals
    auto* func = app.add_subcommand("functionals", "mode-state functionals");
    std::string state_spec = "1,0,1.0";
    double dtau = 0.0;
    func->add_option("--state", state_spec, "semicolon list of k,index,coeff");
    func->add_option("--dtau", dtau, "evolve by this log-time first");

    // ---------------------------------------------------------------- ledger
    auto* ledger = app.add_subcommand("ledger", "full adjudication ledger");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::string dir = out_dir(out_flag);
    std::ostringstream canon;
    for (int i = 1; i < argc; ++i) canon << argv[i] << " ";
    canon << "seed=" << seed;
    const std::string canonical = canon.str();

    try {
        if (*verify) {
            auto rows = adjudicate_family(family, c_param, seed);
            if (family == "slezkin-landau") {
                std::mt19937_64 rng(seed);
                std::uniform_real_distribution<double> U(-1.0, 1.0);
                std::vector<Coords> pts;
                while (pts.size() < 20) {
                    std::array<double, 3> x{3 * U(rng), 3 * U(rng), 3 * U(rng)};
                    double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
                    if (r < 0.3 || r > 3.0) continue;
                    pts.push_back({x[0], x[1], x[2], 0.0});
                }
                FieldSpec f = slezkin_landau_cartesian(c_param);
                write_csv(dir + "/residuals-" + family + ".csv",
                          residual_report_csv(nse_residual(f, pts, 1.0, 1e-6)),
                          canonical);
                write_csv(dir + "/field-" + family + ".csv", field_csv(f, pts),
                          canonical);
            }
            return emit_ledger(rows, dir, canonical, "ledger-" + family + ".csv");
        }

        if (*spectra) {
            if (kmax < 1 || kmax > 6) {
                std::cerr << "spectra: --kmax must lie in [1,6]\n";
                return 2;
            }
            std::ostringstream basis;
            basis << "k,dimension,mode_id,component,e1,e2,e3,numerator,denominator\n";
            for (int k = 1; k <= kmax; ++k) {
                auto b = solenoidal_basis(k);
                for (size_t id = 0; id < b.size(); ++id)
                    for (int comp = 0; comp < 3; ++comp)
                        for (const auto& [m, q] :
                             b[id].components[static_cast<size_t>(comp)].terms())
                            basis << k << "," << b.size() << "," << id << ","
                                  << comp + 1 << "," << m[0] << "," << m[1] << ","
                                  << m[2] << "," << q.get_num().get_str() << ","
                                  << q.get_den().get_str() << "\n";
            }
            write_csv(dir + "/solenoidal-basis.csv", basis.str(), canonical);

            std::ostringstream gram;
            gram << "beta,gamma,exactly_zero,normalized_value\n";
            gram.precision(15);
            for (const auto& e : gram_matrix(std::min(kmax, 4))) {
                gram << e.beta.str() << "," << e.gamma.str() << ","
                     << (e.exactly_zero ? 1 : 0) << "," << e.value << "\n";
            }
            write_csv(dir + "/gram-matrix.csv", gram.str(), canonical);
            std::cout << "spectra: wrote solenoidal-basis.csv and gram-matrix.csv"
                      << " (dimensions";
            for (int k = 1; k <= kmax; ++k)
                std::cout << " " << solenoidal_basis(k).size();
            std::cout << ")\n";
            return 0;
        }

        if (*shoot) {
            if (!preset.empty()) {
                auto pr = shoot_preset(preset);
                N = pr.N;
                p_exp = pr.p;
                phi0 = pr.phi0;
                phi0p = pr.phi0p;
                smax = pr.s_max;
                tag = "emden";
            }
            if (tag == "emden") {
                auto out = emden_fowler_shoot(N, p_exp, phi0, phi0p, smax);
                auto sss = emden_fowler_sss(N, p_exp);
                std::cout << "classification: " << shoot_label_name(out.label);
                if (sss.exists) std::cout << "  (C* = " << sss.C_star << ")";
                std::cout << "\n";
                if (with_oracle) {
                    auto oracle = emden_fowler_shoot(N, p_exp, phi0, phi0p, smax, true);
                    std::cout << "oracle classification: "
                              << shoot_label_name(oracle.label) << "\n";
                }
                if (out.traj) {
                    write_csv(dir + "/shoot-emden.csv", trajectory_csv(*out.traj),
                              canonical);
                    if (emit_plot) {
                        std::vector<double> xs, ys;
                        for (size_t i = 0; i < out.traj->steps(); ++i) {
                            xs.push_back(out.traj->times()[i]);
                            ys.push_back(out.traj->state(i)[0]);
                        }
                        write_svg(dir + "/shoot-emden.svg", svg_polyline(xs, ys));
                    }
                }
                return out.label == ShootLabel::Inconclusive ? 3 : 0;
            }
            if (tag == "regular-profile") {
                auto out = regular_profile_shoot(N, p_exp, amp, smax);
                std::cout << "zero count: " << out.zero_count << "\n";
                write_csv(dir + "/shoot-regular.csv", trajectory_csv(*out.traj),
                          canonical);
                return 0;
            }
            if (tag == "fk-spectrum") {
                auto evs = fk_spectrum_shoot(N, k_arg);
                std::ostringstream os;
                os << "k,lambda,small_y_exponent\n";
                os.precision(12);
                for (const auto& ev : evs)
                    os << ev.k << "," << ev.lambda << "," << ev.small_y_exponent
                       << "\n";
                write_csv(dir + "/fk-spectrum.csv", os.str(), canonical);
                std::cout << "eigenvalues found: " << evs.size() << "\n";
                return evs.empty() ? 3 : 0;
            }
            if (tag == "fk-inner") {
                auto prof = fk_inner_profile(N);
                std::cout << "far-field band width: " << prof.band_width << "\n";
                write_csv(dir + "/fk-inner.csv", trajectory_csv(*prof.traj),
                          canonical);
                return 0;
            }
            if (tag == "hj-profile") {
                auto prof = hamilton_jacobi_profile(beta_order, fj);
                std::cout << "reached zero: " << (prof.reached_zero ? "yes" : "no")
                          << ", support end: " << prof.support_end
                          << ", monotone: " << (prof.monotone ? "yes" : "no")
                          << "\n";
                return prof.reached_zero ? 0 : 3;
            }
            std::cerr << "shoot: unknown tag " << tag << "\n";
            return 2;
        }

        if (*expo) {
            std::ostringstream os;
            os << "formula,value\n";
            os.precision(15);
            ExponentQuery q{e_N, p_exp, e_m, e_sigma, e_l};
            auto ce = critical_exponents(q);
            if (ce.p_sobolev) os << "sobolev-exponent (N+2m)/(N-2m)," << *ce.p_sobolev << "\n";
            if (ce.p_sobolev_quasi)
                os << "sobolev-exponent-quasilinear," << *ce.p_sobolev_quasi << "\n";
            os << "fourth-order-family-exponent," << ce.p_kuramoto << "\n";
            if (ce.p_uniqueness) os << "uniqueness-exponent," << *ce.p_uniqueness << "\n";
            if (ce.nse_absorption_upper)
                os << "absorption-upper," << *ce.nse_absorption_upper << "\n";
            os << "absorption-lower," << ce.nse_absorption_lower << "\n";
            if (e_fk) {
                auto fe = fk_exponents(e_N);
                if (fe.delta) os << "origin-exponent-delta," << *fe.delta << "\n";
                if (fe.b) os << "oscillation-exponent-b," << *fe.b << "\n";
                os << "quotient-threshold-lhs," << fe.hardy_lhs << "\n";
                os << "quotient-threshold-rhs," << fe.hardy_rhs << "\n";
            }
            if (e_hardy) {
                auto hr = hardy_constants(e_N, {});
                os << "hardy-constant," << hr.c_hardy << "\n";
                os << "axisymmetric-solenoid-constant," << hr.axisym_solenoid << "\n";
            }
            if (e_rates) {
                RateCatalog rc = blowup_rates({r_lambda, r_delta, r_gamma, r_beta});
                os << "rate-alpha," << rc.alpha_k << "\n";
                os << "rate-linf-coefficient," << rc.linf_coefficient << "\n";
                os << "rate-matched-exponential," << rc.matched_exponential << "\n";
                os << "rate-log-corrected," << rc.log_corrected << "\n";
                os << "rate-critical-sobolev," << rc.critical_sobolev << "\n";
                os << "rate-standing-wave," << rc.standing_wave << "\n";
            }
            if (!ladder_tag.empty()) {
                auto le = spectral_ladder(ladder_family_from_string(ladder_tag),
                                          ladder_order);
                os << "ladder-eigenvalue," << to_double(le.eigenvalue) << "\n";
                if (le.multiplicity)
                    os << "ladder-multiplicity," << *le.multiplicity << "\n";
            }
            std::cout << os.str();
            write_csv(dir + "/exponents.csv", os.str(), canonical);
            return 0;
        }

        if (*resc) {
            ScalingFrame fr;
            fr.kind = frame_kind_from_string(frame_tag);
            fr.T = fr_T;
            fr.sigma = fr_sigma;
            fr.Ck = fr_Ck;
            FrameSample s;
            s.x = {sample[0], sample[1], sample[2]};
            s.t = sample[3];
            s.u = {sample[4], sample[5], sample[6]};
            s.p = sample[7];
            FrameSample f = rescale_forward(fr, s);
            FrameSample b = rescale_inverse(fr, f);
            double rt = std::abs(b.t - s.t);
            for (int i = 0; i < 3; ++i)
                rt = std::max({rt, std::abs(b.x[static_cast<size_t>(i)] -
                                            s.x[static_cast<size_t>(i)]),
                               std::abs(b.u[static_cast<size_t>(i)] -
                                        s.u[static_cast<size_t>(i)])});
            std::ostringstream os;
            os << "quantity,forward,roundtrip_error\n";
            os.precision(15);
            os << "tau," << f.t << "," << rt << "\n";
            for (int i = 0; i < 3; ++i)
                os << "x" << i + 1 << "," << f.x[static_cast<size_t>(i)] << "," << rt
                   << "\n";
            std::cout << "round-trip error: " << rt << "\n";
            write_csv(dir + "/rescale.csv", os.str(), canonical);
            return rt < 1e-13 ? 0 : 1;
        }

        if (*func) {
            StokesModeState st;
            std::stringstream ss(state_spec);
            std::string tok;
            while (std::getline(ss, tok, ';')) {
                int k, i;
                double cv;
                if (sscanf(tok.c_str(), "%d,%d,%lf", &k, &i, &cv) == 3)
                    st.coeff[{k, i}] = cv;
            }
            if (dtau != 0.0) st = stokes_mode_evolution(st, dtau);
            auto f = stokes_functionals(st);
            std::ostringstream os;
            os << "quantity,value\n";
            os.precision(15);
            os << "kinetic-energy," << f.kinetic_energy << "\n";
            os << "dissipation," << f.dissipation << "\n";
            os << "mass-1," << f.component_masses[0] << "\n";
            os << "mass-2," << f.component_masses[1] << "\n";
            os << "mass-3," << f.component_masses[2] << "\n";
            os << "energy-identity-residual," << stokes_energy_identity_residual(st)
               << "\n";
            os << "similarity-growth-factor," << rescaled_l2_growth_factor(1.0)
               << "\n";
            std::cout << os.str();
            write_csv(dir + "/functionals.csv", os.str(), canonical);
            return 0;
        }

        if (*ledger) {
            int nthreads = threads_from_env();
            unsigned s0 = seed;
            std::vector<std::function<std::vector<AdjudicationRow>()>> tasks = {
                [s0] { return adjudicate_family("slezkin-landau", 2.0, s0); },
                [] { return adjudicate_family("euler-separable", 0, 0); },
                [] { return adjudicate_family("oseen-moffatt", 0, 0); },
                [] { return adjudicate_family("von-karman", 0, 0); },
                [] { return adjudicate_family("yaceev", 0, 0); },
                [] { return adjudicate_family("squire", 0, 0); },
                [] { return adjudicate_family("slezkin-riccati", 0, 0); },
                [] { return adjudicate_family("hermite-table", 0, 0); },
                [s0] { return adjudicate_family("reduced-systems", 0, s0 + 1); },
                [] { return adjudicate_family("constants", 0, 0); },
            };
            auto rows = ordered_parallel(tasks, nthreads);
            return emit_ledger(rows, dir, canonical, "ledger.csv");
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const OdeNonConvergence& e) {
        std::cerr << "numerical inconclusiveness: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
