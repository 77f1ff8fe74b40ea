#include "morse/wavefunction.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <system_error>

#include "morse/quadrature.hpp"
#include "morse/specfun.hpp"

namespace morse::wavefunction {

using specfun::laguerre;
using specfun::ln_gamma;

namespace {

// Envelope margin (in e-folds) used to truncate [0, inf) integrals.
constexpr double kTailMargin = 80.0;

// Smallest phi past both the largest Laguerre zero and the point where
// phi^power e^-phi has dropped kTailMargin e-folds below its maximum.
double envelope_cutoff(double power, int n, double laguerre_order) {
  const double mode = std::max(power, 1.0);
  const auto log_env = [&](double phi) { return power * std::log(phi) - phi; };
  const double target = log_env(mode) - kTailMargin;
  double phi = mode + 1.0;
  while (log_env(phi) > target) phi *= 1.1;
  return std::max(phi, 4.0 * n + 2.0 * laguerre_order + 2.0);
}

double split_point(double upper) { return std::min(1.0, 0.5 * upper); }

}  // namespace

double BoundState::normalization() const { return std::exp(log_normalization); }

double log_normalization_constant(const spectrum::SpectralParams& sp, int n) {
  const double eps = spectrum::epsilon_of_n(sp, n);
  const double kappa = eps / sp.alpha;
  return kappa * std::log(sp.lambda()) +
         0.5 * (std::log(2.0 * eps) + ln_gamma(n + 1.0) - ln_gamma(2.0 * kappa + n + 1.0));
}

double normalization_constant(const spectrum::SpectralParams& sp, int n) {
  return std::exp(log_normalization_constant(sp, n));
}

BoundState bound_state(const MoleculeParams& params, int n, int l) {
  BoundState s;
  s.qn = {n, l};
  s.sp = spectrum::spectral_setup(params, l);
  s.state = spectrum::state_params(s.sp, n);
  s.energy = spectrum::energy(s.sp, n);
  s.log_normalization = log_normalization_constant(s.sp, n);
  s.r0 = params.r0;
  return s;
}

double radial_value_xi(const BoundState& state, double xi) {
  if (!(xi > 0.0)) return 0.0;
  const double phi = state.sp.lambda() * xi;
  const double poly = laguerre(state.qn.n, 2.0 * state.state.kappa, phi);
  if (poly == 0.0) return 0.0;
  const double log_mag =
      state.log_normalization + state.state.kappa * std::log(xi) - 0.5 * phi + std::log(std::abs(poly));
  return std::copysign(std::exp(log_mag), poly);
}

double radial_value(const BoundState& state, double r) {
  const double x = (r - state.r0) / state.r0;
  return radial_value_xi(state, std::exp(-state.sp.alpha * x));
}

std::vector<double> default_grid(double r0) {
  constexpr int kPoints = 2000;
  const double lo = 0.3 * r0;
  const double hi = 5.0 * r0;
  std::vector<double> grid(kPoints);
  for (int i = 0; i < kPoints; ++i) grid[i] = lo + (hi - lo) * i / (kPoints - 1);
  return grid;
}

double phi_cutoff(const BoundState& state) {
  const double two_kappa = 2.0 * state.state.kappa;
  return envelope_cutoff(two_kappa - 1.0 + 2.0 * state.qn.n, state.qn.n, two_kappa);
}

double norm_integral(const BoundState& state) {
  const double lambda = state.sp.lambda();
  const double alpha = state.sp.alpha;
  const auto integrand = [&](double phi) {
    const double r = radial_value_xi(state, phi / lambda);
    return r * r / (alpha * phi);
  };
  const double upper = phi_cutoff(state);
  return quadrature::half_line(integrand, split_point(upper), upper, 1e-12).value;
}

double norm_integral(const WavefunctionSamples& samples, double r0) {
  double sum = 0.0;
  for (std::size_t i = 1; i < samples.grid.size(); ++i) {
    const double dx = (samples.grid[i] - samples.grid[i - 1]) / r0;
    sum += 0.5 * dx * (samples.values[i] * samples.values[i] +
                       samples.values[i - 1] * samples.values[i - 1]);
  }
  return sum;
}

WavefunctionSamples radial_wavefunction(const MoleculeParams& params, int n, int l,
                                        std::span<const double> grid) {
  if (grid.empty()) throw std::invalid_argument("wavefunction grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0)) throw std::invalid_argument("wavefunction grid must be positive");
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw std::invalid_argument("wavefunction grid must be strictly increasing");
    }
  }
  const auto state = bound_state(params, n, l);
  WavefunctionSamples out;
  out.molecule = params.name;
  out.n = n;
  out.l = l;
  out.grid.assign(grid.begin(), grid.end());
  out.values.reserve(grid.size());
  for (double r : grid) out.values.push_back(radial_value(state, r));
  out.norm_estimate = norm_integral(state);
  return out;
}

int count_sign_changes(std::span<const double> values) {
  int changes = 0;
  int last = 0;
  for (double v : values) {
    const int sign = (v > 0.0) - (v < 0.0);
    if (sign == 0) continue;
    if (last != 0 && sign != last) ++changes;
    last = sign;
  }
  return changes;
}

void write_csv(std::ostream& os, const WavefunctionSamples& samples) {
  os << "r_angstrom,R\n";
  char buf[64];
  for (std::size_t i = 0; i < samples.grid.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.12g,%.12g\n", samples.grid[i], samples.values[i]);
    os << buf;
  }
}

void write_csv_file(const std::filesystem::path& path, const WavefunctionSamples& samples) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    write_csv(out, samples);
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw std::runtime_error("write failed for " + path.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw std::runtime_error("cannot write " + path.string());
  }
}

// Both closed forms share the outer structure
//   Gamma(mu + n + 1) / n! sum_k (-1)^k (-k - nu)_n / (n - k)!
//       * Gamma(mu + nu + k + 1) / (k! Gamma(d_k)),
// with Gamma(-k - nu + n) / Gamma(-k - nu) written as the finite product (-k - nu)_n.
namespace {

template <typename Denominator>
double moment_sum(int n, double mu, double nu, Denominator log_gamma_denominator) {
  double sum = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double poch = specfun::pochhammer(-k - nu, n);
    if (poch == 0.0) continue;
    const double log_mag = ln_gamma(mu + nu + k + 1.0) - ln_gamma(k + 1.0) -
                           ln_gamma(n - k + 1.0) - log_gamma_denominator(k);
    const double sign = (k % 2 == 0 ? 1.0 : -1.0);
    sum += sign * poch * std::exp(log_mag);
  }
  return std::exp(ln_gamma(mu + n + 1.0) - ln_gamma(n + 1.0)) * sum;
}

void check_moment_domain(int n, double mu, double nu) {
  if (n < 0) throw std::domain_error("laguerre_moment: n must be non-negative");
  if (!(mu > 0.0)) throw std::domain_error("laguerre_moment: mu must be positive");
  if (!(mu + nu + 1.0 > 0.0)) throw std::domain_error("laguerre_moment: needs mu + nu + 1 > 0");
}

}  // namespace

double moment_printed_form(int n, double mu, double nu) {
  check_moment_domain(n, mu, nu);
  return moment_sum(n, mu, nu, [n](int k) { return ln_gamma(n + k + 1.0); });
}

double moment_series_form(int n, double mu, double nu) {
  check_moment_domain(n, mu, nu);
  return moment_sum(n, mu, nu, [mu](int k) { return ln_gamma(mu + k + 1.0); });
}

double moment_quadrature(int n, double mu, double nu) {
  check_moment_domain(n, mu, nu);
  const double power = mu + nu;
  const auto integrand = [&](double xi) {
    const double poly = laguerre(n, mu, xi);
    return std::exp(power * std::log(xi) - xi) * poly * poly;
  };
  const double upper = envelope_cutoff(power + 2.0 * n, n, mu);
  return quadrature::half_line(integrand, split_point(upper), upper, 1e-12).value;
}

MomentResult laguerre_moment(int n, double mu, double nu) {
  MomentResult r;
  r.quadrature = moment_quadrature(n, mu, nu);
  r.printed_closed_form = moment_printed_form(n, mu, nu);
  r.series_closed_form = moment_series_form(n, mu, nu);
  const auto agrees = [&](double v) {
    return std::abs(v - r.quadrature) <= kMomentTolerance * std::abs(r.quadrature);
  };
  r.printed_agrees = agrees(r.printed_closed_form);
  r.series_agrees = agrees(r.series_closed_form);
  if (!r.series_agrees) {
    throw std::runtime_error("laguerre_moment: closed form and quadrature disagree");
  }
  return r;
}

}  // namespace morse::wavefunction
