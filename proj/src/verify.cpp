#include "morse/verify.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "morse/compare.hpp"
#include "morse/icr.hpp"
#include "morse/oracle.hpp"
#include "morse/pekeris.hpp"
#include "morse/quadrature.hpp"
#include "morse/reference.hpp"
#include "morse/specfun.hpp"
#include "morse/spectrum.hpp"
#include "morse/wavefunction.hpp"

namespace morse::verify {

namespace {

// Running maximum of an error measure for one named check.
class Tracker {
 public:
  Tracker(std::string name, double tolerance) : name_(std::move(name)), tolerance_(tolerance) {}

  void add(double error) {
    ++count_;
    if (!(error <= tolerance_)) ++failures_;
    if (std::isnan(error) || error > max_) max_ = error;
  }

  Check finish(std::string note = {}) const {
    Check c;
    c.name = name_;
    c.max_error = max_;
    c.tolerance = tolerance_;
    c.pass = failures_ == 0 && count_ > 0;
    c.note = note.empty() ? std::to_string(count_ - failures_) + "/" + std::to_string(count_) +
                                " within tolerance"
                          : std::move(note);
    return c;
  }

 private:
  std::string name_;
  double tolerance_;
  double max_ = 0.0;
  int count_ = 0;
  int failures_ = 0;
};

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

Check failed_check(const std::string& name, const std::exception& e) {
  Check c;
  c.name = name;
  c.max_error = std::numeric_limits<double>::infinity();
  c.pass = false;
  c.note = e.what();
  return c;
}

template <typename F>
void guarded(SuiteReport& report, const std::string& name, F&& body) {
  try {
    report.checks.push_back(body());
  } catch (const std::exception& e) {
    report.checks.push_back(failed_check(name, e));
  }
}

const MoleculeParams* find(const std::vector<MoleculeParams>& molecules, std::string_view name) {
  for (const auto& m : molecules) {
    if (m.name == name) return &m;
  }
  return nullptr;
}

}  // namespace

bool SuiteReport::pass() const {
  for (const auto& c : checks) {
    if (c.gating && !c.pass) return false;
  }
  return true;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"pekeris", "spectrum", "norm",
                                                 "icr",     "oracle",   "moment"};
  return names;
}

const std::vector<QuantumNumbers>& table_states() {
  static const std::vector<QuantumNumbers> states = [] {
    std::vector<QuantumNumbers> s;
    for (int n : {0, 5, 7}) {
      for (int l : {0, 5, 10}) s.push_back({n, l});
    }
    return s;
  }();
  return states;
}

SuiteReport run_pekeris(const std::vector<MoleculeParams>& molecules) {
  SuiteReport report{"pekeris", {}};

  guarded(report, "coefficient sum a0 + a1 + a2 = 1", [] {
    Tracker t("coefficient sum a0 + a1 + a2 = 1", 1e-14);
    for (int i = 0; i <= 200; ++i) {
      const auto e = pekeris::pekeris_coefficients(0.5 + 9.5 * i / 200.0);
      t.add(std::abs(e.a0 + e.a1 + e.a2 - 1.0));
    }
    return t.finish();
  });

  guarded(report, "centrifugal error / x^3 settles as x -> 0", [&] {
    // Relative drift of the ratio between x = 1e-2 and 2.5e-3; O(x) for a cubic leading term.
    Tracker t("centrifugal error / x^3 settles as x -> 0", 0.1);
    for (const auto& m : molecules) {
      const auto e = pekeris::pekeris_coefficients(m, 10);
      double ratios[3];
      const double xs[3] = {1e-2, 5e-3, 2.5e-3};
      for (int i = 0; i < 3; ++i) {
        const double x = xs[i];
        ratios[i] = (pekeris::exact_centrifugal(x, e.gamma) -
                     pekeris::approx_centrifugal(x, e, m.alpha)) / (x * x * x);
      }
      t.add(std::abs(ratios[0] - ratios[2]) / std::abs(ratios[2]));
    }
    return t.finish();
  });

  guarded(report, "Morse minimum is -V0 at x = 0", [&] {
    Tracker t("Morse minimum is -V0 at x = 0", 1e-14);
    for (const auto& m : molecules) {
      const double v0 = pekeris::morse_potential(0.0, m);
      const bool minimum = pekeris::morse_potential(-1e-4, m) > v0 &&
                           pekeris::morse_potential(1e-4, m) > v0;
      t.add(minimum ? std::abs(v0 + m.V0) / m.V0 : 1.0);
    }
    return t.finish();
  });

  guarded(report, "exact and Pekeris barriers coincide at r0", [&] {
    Tracker t("exact and Pekeris barriers coincide at r0", 1e-14);
    for (const auto& m : molecules) {
      for (int l : {0, 5, 10}) {
        const double exact = pekeris::effective_potential(m.r0, m, l, pekeris::Mode::exact);
        const double approx = pekeris::effective_potential(m.r0, m, l, pekeris::Mode::pekeris);
        t.add(rel(approx, exact));
      }
    }
    return t.finish();
  });
  return report;
}

SuiteReport run_spectrum(const std::vector<MoleculeParams>& molecules) {
  SuiteReport report{"spectrum", {}};
  const auto tables = reference_tables();

  for (int id = 1; id <= kTableCount; ++id) {
    const auto name = table_molecule(id);
    const auto* m = find(molecules, name);
    if (m == nullptr) continue;
    const std::string label = "table " + std::to_string(id) + " (" + name + ") vs ICR column";
    guarded(report, label, [&] {
      const auto cmp = compare_table(id, *m, tables);
      Tracker t(label, cmp.tolerance);
      for (const auto& row : cmp.rows) t.add(row.abs_diff);
      return t.finish();
    });
  }

  guarded(report, "energy vs gamma a0 - eps^2 / Lambda0^2", [&] {
    Tracker t("energy vs gamma a0 - eps^2 / Lambda0^2", 1e-12);
    for (const auto& m : molecules) {
      for (const auto& s : table_states()) {
        const auto sp = spectrum::spectral_setup(m, s.l);
        const double e = spectrum::energy(sp, s.n);
        t.add(rel(spectrum::energy_from_epsilon(sp, spectrum::epsilon_of_n(sp, s.n)), e));
      }
    }
    return t.finish();
  });

  guarded(report, "p = -n at the quantized epsilon", [&] {
    Tracker t("p = -n at the quantized epsilon", 1e-10);
    for (const auto& m : molecules) {
      for (const auto& s : table_states()) {
        const auto sp = spectrum::spectral_setup(m, s.l);
        t.add(std::abs(spectrum::p_of_epsilon(sp, spectrum::epsilon_of_n(sp, s.n)) + s.n));
      }
    }
    return t.finish();
  });

  guarded(report, "p + q = 2 kappa + 1 and q > p", [&] {
    Tracker t("p + q = 2 kappa + 1 and q > p", 1e-12);
    for (const auto& m : molecules) {
      for (const auto& s : table_states()) {
        const auto sp = spectrum::spectral_setup(m, s.l);
        const auto st = spectrum::state_params(sp, s.n);
        const double err = std::abs(st.p + st.q - 2.0 * st.kappa - 1.0) / (2.0 * st.kappa + 1.0);
        t.add(st.q > st.p ? err : 1.0);
      }
    }
    return t.finish();
  });

  guarded(report, "l = 0 reduces to the s-wave Morse levels", [&] {
    Tracker t("l = 0 reduces to the s-wave Morse levels", 1e-12);
    for (const auto& m : molecules) {
      const double root = std::sqrt(m.lambda0_sq() * m.V0);
      const int count = spectrum::max_bound_n(m, 0);
      for (int n = 0; n < count; ++n) {
        const double f = 1.0 - (n + 0.5) * m.alpha / root;
        t.add(rel(spectrum::energy(m, n, 0), -m.V0 * f * f));
      }
    }
    return t.finish();
  });

  guarded(report, "levels rise with n and with l", [&] {
    int violations = 0;
    int pairs = 0;
    for (const auto& m : molecules) {
      for (int l = 0; l <= 10; ++l) {
        const int count = spectrum::max_bound_n(m, l);
        for (int n = 0; n + 1 < count; ++n) {
          ++pairs;
          if (!(spectrum::energy(m, n + 1, l) > spectrum::energy(m, n, l))) ++violations;
        }
      }
      for (int n : {0, 5, 7}) {
        for (int l = 0; l < 10; ++l) {
          ++pairs;
          if (!(spectrum::energy(m, n, l + 1) > spectrum::energy(m, n, l))) ++violations;
        }
      }
    }
    Check c{"levels rise with n and with l", static_cast<double>(violations), 0.0,
            violations == 0, true,
            std::to_string(pairs - violations) + "/" + std::to_string(pairs) + " ordered pairs"};
    return c;
  });
  return report;
}

SuiteReport run_norm(const std::vector<MoleculeParams>& molecules) {
  SuiteReport report{"norm", {}};

  guarded(report, "normalization integral = 1", [&] {
    Tracker t("normalization integral = 1", 1e-8);
    for (const auto& m : molecules) {
      for (const auto& s : table_states()) {
        t.add(std::abs(wavefunction::norm_integral(wavefunction::bound_state(m, s.n, s.l)) - 1.0));
      }
    }
    return t.finish();
  });

  guarded(report, "node count of R equals n", [&] {
    Tracker t("node count of R equals n", 0.0);
    for (const auto& m : molecules) {
      std::vector<double> grid(20000);
      for (std::size_t i = 0; i < grid.size(); ++i) grid[i] = m.r0 * (0.05 + 6.0 * i / grid.size());
      for (int l : {0, 5, 10}) {
        for (int n = 0; n <= 7; ++n) {
          const auto w = wavefunction::radial_wavefunction(m, n, l, grid);
          t.add(std::abs(wavefunction::count_sign_changes(w.values) - n));
        }
      }
    }
    return t.finish();
  });

  guarded(report, "R vanishes at the quadrature cutoffs", [&] {
    Tracker t("R vanishes at the quadrature cutoffs", 1e-10);
    for (const auto& m : molecules) {
      for (const auto& s : table_states()) {
        const auto b = wavefunction::bound_state(m, s.n, s.l);
        const double xi_hi = wavefunction::phi_cutoff(b) / b.sp.lambda();
        const double xi_lo = 1e-300;
        t.add(std::max(std::abs(wavefunction::radial_value_xi(b, xi_hi)),
                       std::abs(wavefunction::radial_value_xi(b, xi_lo))));
      }
    }
    return t.finish();
  });

  guarded(report, "Laguerre orthogonality under phi^(2 kappa) e^-phi", [&] {
    // Normalized overlaps; raw values scale like Gamma(2 kappa + n + 1).
    Tracker t("Laguerre orthogonality under phi^(2 kappa) e^-phi", 1e-9);
    for (const auto& m : molecules) {
      const auto b = wavefunction::bound_state(m, 0, 0);
      const double order = 2.0 * b.state.kappa;
      // Weight scaled by 1 / Gamma(order + 1) so large orders stay in range.
      const double log_scale = specfun::ln_gamma(order + 1.0);
      const double upper = order + 60.0 * std::sqrt(order + 1.0) + 100.0;
      const auto overlap = [&](int i, int j) {
        const auto f = [&](double phi) {
          return std::exp(order * std::log(phi) - phi - log_scale) *
                 specfun::laguerre(i, order, phi) * specfun::laguerre(j, order, phi);
        };
        const double diag_i = std::exp(specfun::ln_gamma(order + i + 1.0) - log_scale -
                                       specfun::ln_gamma(i + 1.0));
        const double diag_j = std::exp(specfun::ln_gamma(order + j + 1.0) - log_scale -
                                       specfun::ln_gamma(j + 1.0));
        const double floor = 1e-12 * std::sqrt(diag_i * diag_j);
        return quadrature::half_line(f, std::min(1.0, order), upper, 1e-12, floor).value;
      };
      for (int n = 0; n <= 5; ++n) {
        for (int k = n + 1; k <= 5; ++k) {
          t.add(std::abs(overlap(n, k)) / std::sqrt(overlap(n, n) * overlap(k, k)));
        }
      }
    }
    return t.finish();
  });
  return report;
}

SuiteReport run_icr(const std::vector<MoleculeParams>& molecules) {
  SuiteReport report{"icr", {}};

  guarded(report, "kernel Q solves its first-order equation", [&] {
    Tracker t("kernel Q solves its first-order equation", 1e-9);
    for (const auto& m : molecules) {
      for (const auto& s : table_states()) {
        const auto sp = spectrum::spectral_setup(m, s.l);
        const auto st = spectrum::state_params(sp, s.n);
        const double b = sp.beta2() / sp.alpha;
        for (int i = 1; i <= 50; ++i) t.add(icr::kernel_ode_residual(b * (-1.0 + 2.0 * i / 51.0), sp, st));
      }
    }
    return t.finish();
  });

  guarded(report, "boundary term vanishes for p, q > 0", [] {
    Tracker t("boundary term vanishes for p, q > 0", 0.0);
    for (double p : {0.5, 1.2, 3.0}) {
      for (double q : {0.5, 3.4, 7.0}) {
        for (double xi : {0.1, 1.0, 5.0}) t.add(icr::boundary_vanishing(p, q, 2.0, xi).max);
      }
    }
    return t.finish();
  });

  guarded(report, "boundary term diverges for p < 0", [] {
    const auto v = icr::boundary_vanishing(-0.2, 3.4, 2.0, 1.0);
    return Check{"boundary term diverges for p < 0", 0.0, 0.0, v.diverges, true,
                 v.diverges ? "divergence reported" : "no divergence"};
  });

  guarded(report, "contour power identity (256 nodes)", [] {
    Tracker t("contour power identity (256 nodes)", 1e-8);
    const icr::ContourSpec c{{0.0, 0.0}, 1.0, 256};
    for (int k = 1; k <= 5; ++k) {
      for (int n = 1; n <= 5; ++n) {
        const auto v = icr::contour_power_identity(k, n, 0.5, c);
        t.add(std::abs(v - std::pow(0.5, k)));
      }
    }
    return t.finish();
  });

  guarded(report, "contour quadrature converges spectrally", [] {
    const std::complex<double> xi{0.5, 0.0};
    const auto err = [&](int nodes) {
      const icr::ContourSpec c{{0.0, 0.0}, 0.6, nodes};
      return std::abs(icr::contour_power_identity(3, 2, xi, c) - std::pow(xi, 3));
    };
    const double e128 = err(128);
    const double e256 = err(256);
    const bool ok = e256 * 10.0 <= e128;
    char note[96];
    std::snprintf(note, sizeof note, "error 128 nodes %.2e, 256 nodes %.2e", e128, e256);
    return Check{"contour quadrature converges spectrally", e256, e128 / 10.0, ok, true, note};
  });

  guarded(report, "residue series (n)_k / k! xi^k", [] {
    Tracker t("residue series (n)_k / k! xi^k", 1e-9);
    for (double xi : {-0.7, 0.4, 0.9}) {
      for (double product : {0.3, 0.8}) {
        const icr::ContourSpec c{{0.0, 0.0}, product / std::abs(xi), 256};
        for (int k = 0; k <= 8; ++k) {
          for (int n = 1; n <= 5; ++n) {
            const double expected =
                specfun::pochhammer(n, k) / std::exp(specfun::ln_gamma(k + 1.0)) * std::pow(xi, k);
            const auto v = icr::residue_series_check(k, n, xi, c);
            t.add(std::abs(v - expected) / std::max(1.0, std::abs(expected)));
          }
        }
      }
    }
    return t.finish();
  });

  guarded(report, "Euler integral = B(p, q) 1F1(p; p + q; s)", [] {
    Tracker t("Euler integral = B(p, q) 1F1(p; p + q; s)", icr::kEulerTolerance);
    const double pq[] = {0.35, 0.9, 1.7, 2.8, 4.0};
    for (double p : pq) {
      for (double q : pq) {
        for (double s : {-6.0, -3.0, 0.0, 3.0, 6.0}) {
          try {
            const auto r = icr::euler_integral_identity(p, q, s);
            t.add(std::abs(r.lhs - r.rhs) / std::max(1.0, std::abs(r.rhs)));
          } catch (const std::runtime_error&) {
            t.add(std::numeric_limits<double>::infinity());
          }
        }
      }
    }
    return t.finish();
  });

  guarded(report, "1F1(-n; b; x) = n! Gamma(b) / Gamma(n + b) L_n^(b-1)(x)", [] {
    Tracker t("1F1(-n; b; x) = n! Gamma(b) / Gamma(n + b) L_n^(b-1)(x)", 1e-10);
    for (int n = 0; n <= 10; ++n) {
      for (double b : {0.5, 1.0, 2.5, 7.0, 20.0}) {
        const double factor =
            std::exp(specfun::ln_gamma(n + 1.0) + specfun::ln_gamma(b) - specfun::ln_gamma(n + b));
        for (int i = 0; i <= 60; ++i) {
          const double x = 0.5 * i;
          const double lhs = specfun::kummer_1f1(-n, b, x);
          const double rhs = factor * specfun::laguerre(n, b - 1.0, x);
          t.add(std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
        }
      }
    }
    return t.finish();
  });
  return report;
}

SuiteReport run_oracle(const std::vector<MoleculeParams>& molecules) {
  SuiteReport report{"oracle", {}};

  guarded(report, "finite-difference levels match closed form", [&] {
    Tracker t("finite-difference levels match closed form", 1e-6);
    for (const auto& m : molecules) {
      for (int l : {0, 5, 10}) {
        const auto levels = oracle::eigenvalues_pekeris(m, l, 8);
        for (int n : {0, 5, 7}) t.add(rel(levels[n], spectrum::energy(m, n, l)));
      }
    }
    return t.finish();
  });

  guarded(report, "second-order grid convergence", [&] {
    const auto* m = find(molecules, "H2");
    if (m == nullptr) m = &molecules.front();
    oracle::GridSpec g;
    const auto e1 = oracle::fd_eigenvalues(*m, 0, 1, g, pekeris::Mode::pekeris)[0];
    g.num_points = 2 * g.num_points - 1;
    const auto e2 = oracle::fd_eigenvalues(*m, 0, 1, g, pekeris::Mode::pekeris)[0];
    g.num_points = 2 * g.num_points - 1;
    const auto e3 = oracle::fd_eigenvalues(*m, 0, 1, g, pekeris::Mode::pekeris)[0];
    const double order = std::log2((e1 - e2) / (e2 - e3));
    char note[64];
    std::snprintf(note, sizeof note, "observed order %.3f", order);
    return Check{"second-order grid convergence", std::abs(order - 2.0), 0.2,
                 std::abs(order - 2.0) <= 0.2, true, note};
  });

  guarded(report, "default grid truncation (x_max doubled)", [&] {
    Tracker t("default grid truncation (x_max doubled)", 1e-9);
    for (const auto& m : molecules) {
      for (int l : {0, 5, 10}) t.add(oracle::truncation_shift(m, l, 8, {}));
    }
    return t.finish();
  });

  guarded(report, "eigenvector node counts equal n", [&] {
    Tracker t("eigenvector node counts equal n", 0.0);
    for (const auto& m : molecules) {
      for (int n : {0, 3, 7}) t.add(std::abs(oracle::eigenvector_nodes(m, 5, n, {}) - n));
    }
    return t.finish();
  });

  guarded(report, "exact and Pekeris solvers agree at l = 0", [&] {
    Tracker t("exact and Pekeris solvers agree at l = 0", 1e-12);
    for (const auto& m : molecules) {
      const auto a = oracle::eigenvalues_pekeris(m, 0, 3);
      const auto b = oracle::eigenvalues_exact(m, 0, 3);
      for (int i = 0; i < 3; ++i) t.add(rel(b[i], a[i]));
    }
    return t.finish();
  });

  guarded(report, "Pekeris approximation error, l = 10, n = 0", [&] {
    double worst = 0.0;
    std::string note;
    for (const auto& m : molecules) {
      const double gap =
          std::abs(oracle::eigenvalues_exact(m, 10, 1)[0] - oracle::eigenvalues_pekeris(m, 10, 1)[0]);
      worst = std::max(worst, gap);
      char buf[64];
      std::snprintf(buf, sizeof buf, "%s%s %.3e eV", note.empty() ? "" : ", ", m.name.c_str(), gap);
      note += buf;
    }
    return Check{"Pekeris approximation error, l = 10, n = 0", worst, 0.0, true, false, note};
  });
  return report;
}

SuiteReport run_moment() {
  SuiteReport report{"moment", {}};
  const double mus[] = {0.5, 2.0, 7.3};

  guarded(report, "nu = -1: Gamma(mu + n + 1) / (mu n!)", [&] {
    Tracker t("nu = -1: Gamma(mu + n + 1) / (mu n!)", 1e-8);
    for (int n = 0; n <= 6; ++n) {
      for (double mu : mus) {
        const double expected =
            std::exp(specfun::ln_gamma(mu + n + 1.0) - specfun::ln_gamma(n + 1.0)) / mu;
        t.add(rel(wavefunction::moment_quadrature(n, mu, -1.0), expected));
      }
    }
    return t.finish();
  });

  guarded(report, "nu = 0: Gamma(mu + n + 1) / n!", [&] {
    Tracker t("nu = 0: Gamma(mu + n + 1) / n!", 1e-8);
    for (int n = 0; n <= 6; ++n) {
      for (double mu : mus) {
        const double expected =
            std::exp(specfun::ln_gamma(mu + n + 1.0) - specfun::ln_gamma(n + 1.0));
        t.add(rel(wavefunction::moment_quadrature(n, mu, 0.0), expected));
      }
    }
    return t.finish();
  });

  int printed_ok = 0;
  int total = 0;
  guarded(report, "series closed form vs quadrature", [&] {
    Tracker t("series closed form vs quadrature", wavefunction::kMomentTolerance);
    for (int n = 0; n <= 6; ++n) {
      for (double mu : mus) {
        for (double nu : {-1.0, -0.5, 0.0, 1.5}) {
          const double quad = wavefunction::moment_quadrature(n, mu, nu);
          t.add(rel(wavefunction::moment_series_form(n, mu, nu), quad));
          ++total;
          if (rel(wavefunction::moment_printed_form(n, mu, nu), quad) <= wavefunction::kMomentTolerance) {
            ++printed_ok;
          }
        }
      }
    }
    return t.finish();
  });

  Check printed;
  printed.name = "printed double sum (Gamma(n + k + 1)) vs quadrature";
  printed.gating = false;
  printed.pass = printed_ok == total;
  printed.max_error = static_cast<double>(total - printed_ok);
  printed.note = "agrees in " + std::to_string(printed_ok) + "/" + std::to_string(total) +
                 " cases" + (printed.pass ? "" : "; printed form does not match quadrature");
  report.checks.push_back(printed);
  return report;
}

std::vector<SuiteReport> run(std::string_view suite, const std::vector<MoleculeParams>& molecules) {
  if (molecules.empty()) throw std::invalid_argument("verification needs at least one molecule");
  const auto one = [&](std::string_view name) -> SuiteReport {
    if (name == "pekeris") return run_pekeris(molecules);
    if (name == "spectrum") return run_spectrum(molecules);
    if (name == "norm") return run_norm(molecules);
    if (name == "icr") return run_icr(molecules);
    if (name == "oracle") return run_oracle(molecules);
    if (name == "moment") return run_moment();
    throw std::invalid_argument("unknown verification suite '" + std::string(name) + "'");
  };
  std::vector<SuiteReport> out;
  if (suite == "all") {
    for (const auto& name : suite_names()) out.push_back(one(name));
  } else {
    out.push_back(one(suite));
  }
  return out;
}

void render(std::ostream& os, const SuiteReport& report) {
  os << "== " << report.suite << " ==\n";
  char buf[256];
  for (const auto& c : report.checks) {
    const char* status = !c.gating ? "INFO" : (c.pass ? "PASS" : "FAIL");
    std::snprintf(buf, sizeof buf, "[%s] %-56s max_err=%.3e tol=%.1e  %s\n", status,
                  c.name.c_str(), c.max_error, c.tolerance, c.note.c_str());
    os << buf;
  }
  os << "suite " << report.suite << ": " << (report.pass() ? "PASS" : "FAIL") << '\n';
}

}  // namespace morse::verify
