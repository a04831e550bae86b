// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion. Returns the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "singlab/adjudicate.hpp"
#include "singlab/blowup_lab.hpp"
#include "singlab/residuals.hpp"
#include "singlab/scaling.hpp"
#include "singlab/solenoidal.hpp"
#include "singlab/special.hpp"

using namespace singlab;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, double time_limit_s,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    auto start = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
        ok = false;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                start)
                      .count();
    if (time_limit_s > 0.0 && secs > time_limit_s) {
        ok = false;
        detail += " [over time budget]";
    }
    std::printf("[%s] criterion %2d: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL",
                number, name.c_str(), secs, detail.empty() ? "" : " -- ",
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::vector<Coords> shell_points(unsigned seed, size_t n, double lo, double hi) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    std::vector<Coords> pts;
    while (pts.size() < n) {
        std::array<double, 3> x{hi * U(rng), hi * U(rng), hi * U(rng)};
        double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
        if (r < lo || r > hi) continue;
        pts.push_back({x[0], x[1], x[2], 0.0});
    }
    return pts;
}

std::vector<MultiIndex> multiindices_up_to(int kmax) {
    std::vector<MultiIndex> out;
    for (int k = 0; k <= kmax; ++k)
        for (int a = k; a >= 0; --a)
            for (int b = k - a; b >= 0; --b) {
                MultiIndex m;
                m[0] = a;
                m[1] = b;
                m[2] = k - a - b;
                out.push_back(m);
            }
    return out;
}

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

}  // namespace

int main() {
    std::printf("singlab acceptance suite\n");

    criterion(1, "solenoidal dimensions k(k+2) for k = 1..4 by exact rank", 10.0,
              [](std::string& d) {
                  int dims[4] = {3, 8, 15, 24};
                  for (int k = 1; k <= 4; ++k)
                      if (solenoidal_basis(k).size() != static_cast<size_t>(dims[k - 1])) {
                          d = "wrong dimension at k = " + std::to_string(k);
                          return false;
                      }
                  return true;
              });

    criterion(2, "exact eigen-identities for |beta| <= 6 and 100 derivative shifts",
              0.0, [](std::string& d) {
                  for (const auto& m : multiindices_up_to(6)) {
                      auto mode = hermite_mode(m);
                      if (!(apply_bstar(mode.polynomial) -
                            mode.eigenvalue * mode.polynomial)
                               .is_zero()) {
                          d = "eigen-identity failed at " + m.str();
                          return false;
                      }
                  }
                  std::mt19937_64 rng(2026);
                  auto pool = multiindices_up_to(6);
                  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
                  std::uniform_int_distribution<int> axis(0, 2);
                  int done = 0;
                  while (done < 100) {
                      MultiIndex beta = pool[pick(rng)];
                      int dir = axis(rng);
                      if (beta[dir] == 0) continue;
                      ++done;
                      auto hi = hermite_mode(beta).polynomial.differentiate(dir);
                      auto lo = hermite_mode(beta.bumped(dir, -1)).polynomial;
                      if (!(hi - rat(-beta[dir], 2) * lo).is_zero()) {
                          d = "derivative shift failed at " + beta.str();
                          return false;
                      }
                  }
                  return true;
              });

    criterion(3, "gram pairings: exact off-diagonal zeros, positive diagonals",
              0.0, [](std::string& d) {
                  for (const auto& e : gram_matrix(4)) {
                      if (e.beta == e.gamma) {
                          if (!(sgn(e.normalized_diagonal) > 0)) {
                              d = "nonpositive diagonal at " + e.beta.str();
                              return false;
                          }
                      } else if (!e.exactly_zero) {
                          d = "nonzero off-diagonal at " + e.beta.str() + "," +
                              e.gamma.str();
                          return false;
                      }
                  }
                  return true;
              });

    criterion(4, "printed-table adjudication with the single-monomial repair",
              0.0, [](std::string& d) {
                  auto entries = adjudicate_hp1();
                  auto status = [&](const std::string& n) -> AdjudicationStatus {
                      for (const auto& e : entries)
                          if (e.name == n) return e.status;
                      throw std::runtime_error("missing " + n);
                  };
                  for (const char* n : {"v11", "v12", "v13", "v24", "v25"})
                      if (status(n) != AdjudicationStatus::Confirmed) {
                          d = std::string("expected confirmed: ") + n;
                          return false;
                      }
                  for (const auto& e : entries)
                      if (e.name == "v26") {
                          if (e.status != AdjudicationStatus::Repaired ||
                              e.repair_component != 0) {
                              d = "v26 repair not found";
                              return false;
                          }
                          MultiIndex m;
                          m[0] = 1;
                          m[2] = 1;
                          if (!(e.repaired_component ==
                                ExactPolynomial3::monomial(m, Rational(-1)))) {
                              d = "v26 repair is not -y1 y3";
                              return false;
                          }
                      }
                  // ledger emitted
                  std::ofstream("acceptance-hp1-ledger.csv")
                      << ledger_csv(adjudicate_family("hermite-table", 0, 0));
                  return true;
              });

    criterion(5, "singular jet: residuals, mass flux, forcing coefficient", 30.0,
              [](std::string& d) {
                  for (double c : {1.5, 2.0, 5.0}) {
                      auto rep = nse_residual(
                          slezkin_landau_cartesian(c),
                          shell_points(900u + static_cast<unsigned>(c * 10), 20, 0.3,
                                       3.0),
                          1.0, 1e-6);
                      if (!rep.pass()) {
                          d = "steady residual failed at c = " + std::to_string(c);
                          return false;
                      }
                  }
                  if (std::abs(sl_mass_flux(2.0, 1.0, 48)) > 1e-8) {
                      d = "mass flux";
                      return false;
                  }
                  auto f1 = sl_flux_coefficient(2.0, 0.5, 64);
                  auto f2 = sl_flux_coefficient(2.0, 1.0, 64);
                  auto f3 = sl_flux_coefficient(2.0, 2.0, 64);
                  double spread = std::max(std::abs(f1.numeric - f2.numeric),
                                           std::abs(f3.numeric - f2.numeric)) /
                                  std::abs(f2.numeric);
                  if (spread > 1e-6) {
                      d = "flux not radius independent";
                      return false;
                  }
                  std::ofstream rows("acceptance-forcing-comparison.csv");
                  rows << "c,numeric,printed_closed_form,printed_expansion\n";
                  for (double c : {2.0, 10.0}) {
                      auto f = sl_flux_coefficient(c, 1.0, 64);
                      rows << c << "," << f.numeric << "," << f.printed_closed_form
                           << "," << f.printed_asymptote << "\n";
                  }
                  return true;
              });

    criterion(6, "profile reconstruction through the linear reduction", 0.0,
              [](std::string& d) {
                  for (double A : {2.0, 3.0, 5.0}) {
                      RiccatiParams rp;  // zero constants, unit viscosity
                      auto sol = slezkin_riccati(rp, -0.9, 0.9, A - 0.9, 1.0);
                      for (int i = 0; i <= 120; ++i) {
                          double tau = -0.9 + 1.8 * i / 120.0;
                          double target = -2.0 * (1.0 - tau * tau) / (A + tau);
                          if (std::abs(sol.f(tau) - target) > 1e-8) {
                              d = "profile mismatch at A = " + std::to_string(A);
                              return false;
                          }
                      }
                  }
                  return true;
              });

    criterion(7, "figure presets reproduce with matching oracle labels", 25.0,
              [](std::string& d) {
                  double cstar34 = emden_fowler_sss(3, 4.0).C_star;
                  if (std::abs(cstar34 - std::cbrt(2.0 / 9.0)) > 1e-14) {
                      d = "C* mismatch";
                      return false;
                  }
                  for (const char* name : {"fig2a", "fig2b", "fig3", "fig4a", "fig4b"}) {
                      auto pr = shoot_preset(name);
                      auto t0 = std::chrono::steady_clock::now();
                      auto a = emden_fowler_shoot(pr.N, pr.p, pr.phi0, pr.phi0p,
                                                  pr.s_max, false);
                      double secs = std::chrono::duration<double>(
                                        std::chrono::steady_clock::now() - t0)
                                        .count();
                      if (secs > 5.0) {
                          d = std::string(name) + " over 5 s";
                          return false;
                      }
                      auto b = emden_fowler_shoot(pr.N, pr.p, pr.phi0, pr.phi0p,
                                                  pr.s_max, true);
                      if (a.label != pr.expected || b.label != pr.expected) {
                          d = std::string(name) + ": got " +
                              shoot_label_name(a.label) + " / oracle " +
                              shoot_label_name(b.label);
                          return false;
                      }
                      if (std::string(name) == "fig3" &&
                          (a.hamiltonian_drift > 1e-6 || a.maxima.size() < 20)) {
                          d = "fig3 conservation or cycle count";
                          return false;
                      }
                      if (std::string(name) == "fig2a" &&
                          std::abs(a.final_value - cstar34) > 0.01 * cstar34) {
                          d = "fig2a does not end at +C*";
                          return false;
                      }
                      if (std::string(name) == "fig2b" &&
                          std::abs(a.final_value + cstar34) > 0.01 * cstar34) {
                          d = "fig2b does not end at -C*";
                          return false;
                      }
                  }
                  return true;
              });

    criterion(8, "reaction-operator suite: equilibrium, exponents, spectrum, "
                 "inner profile",
              60.0, [](std::string& d) {
                  for (double y : {0.3, 1.0, 4.0})
                      if (std::abs(fk_singular_equilibrium_residual(3, y)) > 1e-12) {
                          d = "equilibrium residual";
                          return false;
                      }
                  if (std::abs(*fk_exponents(11).delta - 3.0) > 0.0) {
                      d = "delta(11) not exactly 3";
                      return false;
                  }
                  if (std::abs(*fk_exponents(3).b - std::sqrt(7.0) / 2.0) > 1e-12) {
                      d = "b(3)";
                      return false;
                  }
                  auto e10 = fk_exponents(10);
                  if (e10.hardy_lhs != 16.0 || e10.hardy_rhs != 16.0) {
                      d = "threshold equality at N = 10";
                      return false;
                  }
                  auto evs = fk_spectrum_shoot(11, 10);
                  if (evs.size() < 5) {
                      d = "missing eigenvalues";
                      return false;
                  }
                  double prev = 0.0;
                  for (const auto& ev : evs) {
                      if (!(ev.lambda < 0.0) || !(ev.lambda < prev)) {
                          d = "eigenvalues not strictly decreasing negative";
                          return false;
                      }
                      prev = ev.lambda;
                      if ((ev.k == 8 && std::abs(ev.lambda / -4.0 - 1.0) > 0.15) ||
                          (ev.k == 10 && std::abs(ev.lambda / -5.0 - 1.0) > 0.15)) {
                          d = "asymptote ratio at k = " + std::to_string(ev.k);
                          return false;
                      }
                  }
                  if (fk_inner_profile(3).band_width > 1.0) {
                      d = "inner profile band";
                      return false;
                  }
                  return true;
              });

    criterion(9, "integro-profiles reach zero monotonically for orders 2, 3, 4",
              0.0, [](std::string& d) {
                  std::ostringstream note;
                  bool ok = true;
                  for (int k : {2, 3, 4}) {
                      auto h = hamilton_jacobi_profile(k, 1.0);
                      bool sub = h.reached_zero && h.monotone &&
                                 h.endpoint_oracle_gap <= 1e-6;
                      if (!sub) {
                          ok = false;
                          note << "order " << k << ": "
                               << (h.reached_zero ? "reaches zero"
                                                  : "stays positive");
                          if (k == 2)
                              note << " (the exact profile is the Gaussian "
                                      "exp(-zeta^2); verified by direct "
                                      "substitution, so compact support fails "
                                      "at this order); ";
                      }
                  }
                  d = note.str();
                  return ok;
              });

    criterion(10, "circle equilibrium satisfies the reduced system exactly", 0.0,
              [](std::string& d) {
                  CircleProfiles zero;
                  zero.A = zero.B = zero.C = zero.D = [](double) { return 0.0; };
                  if (circle_system(zero, 0.0).full.max_overall() != 0.0) {
                      d = "zero solution";
                      return false;
                  }
                  CircleProfiles eq;
                  eq.A = [](double) { return -4.0; };
                  eq.B = [](double) { return 0.0; };
                  eq.C = [](double) { return 0.0; };
                  eq.D = [](double) { return -8.0; };
                  auto rep = circle_system(eq, 0.0);
                  if (rep.reduced.max_overall() > 1e-9) {
                      d = "reduced residual";
                      return false;
                  }
                  if (!rep.irrotational_identity ||
                      *rep.irrotational_identity > 1e-12) {
                      d = "irrotational identity";
                      return false;
                  }
                  return true;
              });

    criterion(11, "reduced systems match their full-system oracles on 30 random "
                  "inputs each",
              0.0, [](std::string& d) {
                  std::mt19937_64 rng(77);
                  std::uniform_real_distribution<double> U(-1.0, 1.0);
                  for (int trial = 0; trial < 30; ++trial) {
                      double a = U(rng), b = U(rng), c = U(rng), e = U(rng);
                      W2Profiles p;
                      p.U = [a](const std::array<P2, 2>& q) {
                          return a * q[0] * q[0] * cos(q[1]);
                      };
                      p.V = [b](const std::array<P2, 2>& q) {
                          return b * q[0] * sin(2.0 * q[1]) +
                                 0.2 * q[0] * q[0] * q[0];
                      };
                      p.Wt = [c](const std::array<P2, 2>& q) {
                          return c * (1.0 + q[0] * q[0]) * cos(q[1]);
                      };
                      p.P = [e](const std::array<P2, 2>& q) {
                          return e * q[0] * q[0] + sin(q[1]);
                      };
                      std::vector<std::array<double, 2>> pts{{0.5, 0.9}, {1.2, 2.4},
                                                             {1.9, 4.4}};
                      if (w2_consistency(p, pts).max_difference_overall() > 1e-9) {
                          d = "subspace system difference";
                          return false;
                      }
                      SphericalHomProfiles sp;
                      sp.comp[0] = [a](const std::array<P2, 2>& q) {
                          return a * sin(q[0]) * cos(q[1]) + 0.2;
                      };
                      sp.comp[1] = [b](const std::array<P2, 2>& q) {
                          return b * cos(q[0]) * sin(2.0 * q[1]);
                      };
                      sp.comp[2] = [c](const std::array<P2, 2>& q) {
                          return c * sin(q[0]) * sin(q[1]);
                      };
                      sp.comp[3] = [e](const std::array<P2, 2>& q) {
                          return e * cos(2.0 * q[0]) + 0.3 * cos(q[1]);
                      };
                      std::vector<std::array<double, 2>> tp{{0.4, 0.3}, {1.1, 2.2},
                                                            {2.6, 4.0}};
                      if (spherical_homogeneous(sp, tp).max_difference_overall() >
                          1e-9) {
                          d = "homogeneous system difference";
                          return false;
                      }
                  }
                  return true;
              });

    criterion(12, "special functions and closed-form residuals", 0.0,
              [](std::string& d) {
                  if (std::abs(kummer_F(1, 1, 2, 0.5) - 2.0 * std::log(2.0)) >
                      1e-12) {
                      d = "series value at (1,1,2)";
                      return false;
                  }
                  if (std::abs(kummer_F(2, 3, 3, 0.5) - 4.0) > 1e-12) {
                      d = "series value at (2,3,3)";
                      return false;
                  }
                  auto om = oseen_moffatt_vortex(2.5, 1.0);
                  for (double r : {0.4, 1.2})
                      for (double t : {0.3, -0.5}) {
                          if (std::abs(om.vorticity(r, t) -
                                       om.vorticity_closed(r, t)) > 1e-8 ||
                              std::abs(om.heat_residual(r, t)) > 1e-8) {
                              d = "vortex identities";
                              return false;
                          }
                      }
                  FieldSpec es = euler_separable(1.0);
                  std::vector<Coords> pts;
                  for (int i = 0; i < 10; ++i)
                      pts.push_back({0.3 + 0.25 * i, 0.4, 0.6 - 0.1 * i, -0.3});
                  auto rep = euler_residual(es, pts, true, 1e-8);
                  if (rep.max_abs[3] > 1e-12) {
                      d = "separable divergence";
                      return false;
                  }
                  std::ofstream("acceptance-euler-separable-verdict.txt")
                      << "curl-of-momentum max residual: " << rep.max_overall()
                      << (rep.pass() ? " (confirmed)\n" : " (refuted)\n");
                  if (!rep.pass()) {
                      d = "separable ideal-flow residual";
                      return false;
                  }
                  for (int N : {3, 4})
                      for (double r : {0.3, 1.0, 10.0})
                          if (std::abs(loewner_nirenberg_residual(N, r)) > 1e-10) {
                              d = "critical profile residual";
                              return false;
                          }
                  return true;
              });

    criterion(13, "scaling frames: round trips, energy identity, sup "
                  "normalization",
              0.0, [](std::string& d) {
                  std::mt19937_64 rng(5);
                  std::uniform_real_distribution<double> U(-1.0, 1.0);
                  for (FrameKind k :
                       {FrameKind::BlowupSimilarity, FrameKind::GlobalSimilarity,
                        FrameKind::Burnett, FrameKind::Twistor,
                        FrameKind::CkRescale}) {
                      ScalingFrame fr;
                      fr.kind = k;
                      fr.T = 0.7;
                      fr.sigma = 1.3;
                      fr.Ck = 5.0;
                      for (int i = 0; i < 100; ++i) {
                          FrameSample s;
                          s.x = {U(rng) + 1.5, U(rng), U(rng)};
                          s.t = k == FrameKind::GlobalSimilarity
                                    ? 0.5 + 0.4 * U(rng)
                                    : 0.7 - (0.5 + 0.4 * std::abs(U(rng)));
                          s.u = {U(rng), U(rng), U(rng)};
                          s.p = U(rng);
                          FrameSample b = rescale_inverse(fr, rescale_forward(fr, s));
                          double g = std::max(std::abs(b.t - s.t),
                                              std::abs(b.p - s.p));
                          for (int j = 0; j < 3; ++j)
                              g = std::max(
                                  {g,
                                   std::abs(b.x[static_cast<size_t>(j)] -
                                            s.x[static_cast<size_t>(j)]),
                                   std::abs(b.u[static_cast<size_t>(j)] -
                                            s.u[static_cast<size_t>(j)])});
                          if (g > 1e-13) {
                              d = "round trip in " + frame_kind_name(k);
                              return false;
                          }
                      }
                  }
                  StokesModeState st;
                  st.coeff[{1, 0}] = 0.8;
                  st.coeff[{2, 3}] = -0.5;
                  if (stokes_energy_identity_residual(st, 1e-4) > 1e-8) {
                      d = "energy identity";
                      return false;
                  }
                  // sup normalization with l2 preservation
                  double C = 10.0;
                  auto u = [C](const std::array<double, 3>& x) {
                      double r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
                      return std::array<double, 3>{C * std::exp(-r2), 0.0, 0.0};
                  };
                  ScalingFrame ck;
                  ck.kind = FrameKind::CkRescale;
                  ck.Ck = C;
                  double a = ck.ak();
                  auto w = [&](const std::array<double, 3>& y) {
                      std::array<double, 3> x{a * y[0], a * y[1], a * y[2]};
                      auto v = u(x);
                      return std::array<double, 3>{v[0] / C, v[1] / C, v[2] / C};
                  };
                  auto fu = functionals_quadrature(u, 1.0, 8.0, 40);
                  auto fw = functionals_quadrature(w, 1.0 / a, 8.0, 40);
                  if (std::abs(fu.value.l2_squared - fw.value.l2_squared) /
                          fu.value.l2_squared >
                      1e-8) {
                      d = "l2 preservation";
                      return false;
                  }
                  if (std::abs(w({0, 0, 0})[0] - 1.0) > 1e-15) {
                      d = "sup normalization";
                      return false;
                  }
                  return true;
              });

    criterion(14, "byte-identical outputs at parallelism 1 and 8", 0.0,
              [](std::string& d) {
                  const char* bin = std::getenv("SINGLAB_BIN");
                  if (!bin) {
                      d = "SINGLAB_BIN not set";
                      return false;
                  }
                  std::string b(bin);
                  if (std::system(("mkdir -p /tmp/singlab-acc/p1 /tmp/singlab-acc/p8 && "
                                   "cd /tmp/singlab-acc/p1 && SINGLAB_THREADS=1 " +
                                   b + " ledger > /dev/null && cd /tmp/singlab-acc/p8 && "
                                       "SINGLAB_THREADS=8 " +
                                   b + " ledger > /dev/null")
                                      .c_str()) != 0) {
                      d = "ledger run failed";
                      return false;
                  }
                  std::string a = slurp("/tmp/singlab-acc/p1/ledger.csv");
                  std::string c = slurp("/tmp/singlab-acc/p8/ledger.csv");
                  if (a.empty() || a != c) {
                      d = "outputs differ";
                      return false;
                  }
                  return true;
              });

    std::printf("%d criteria failed\n", failures);
    return failures;
}
