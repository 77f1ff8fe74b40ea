#include "morse/icr.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "morse/quadrature.hpp"
#include "morse/specfun.hpp"

namespace morse::icr {

namespace {

double half_width(const spectrum::SpectralParams& sp) { return sp.beta2() / sp.alpha; }

}  // namespace

void validate(const ContourSpec& contour) {
  if (!(contour.radius > 0.0)) throw std::invalid_argument("contour radius must be positive");
  if (contour.num_points < 64) throw std::invalid_argument("contour needs at least 64 nodes");
}

double log_kernel_Q(double t, const spectrum::SpectralParams& sp,
                    const spectrum::StateParams& st) {
  const double b = half_width(sp);
  if (!(std::abs(t) < b)) throw std::domain_error("kernel_Q: t outside (-beta2/alpha, beta2/alpha)");
  return (st.q - 1.0) * std::log(b - t) + (st.p - 1.0) * std::log(b + t);
}

double kernel_Q(double t, const spectrum::SpectralParams& sp, const spectrum::StateParams& st) {
  return std::exp(log_kernel_Q(t, sp, st));
}

double kernel_ode_residual(double t, const spectrum::SpectralParams& sp,
                           const spectrum::StateParams& st) {
  const double b = half_width(sp);
  const double h = 1e-3 * std::min(b - t, b + t);
  const auto f = [&](double u) { return log_kernel_Q(u, sp, st); };
  const double dlog = (-f(t + 2 * h) + 8 * f(t + h) - 8 * f(t - h) + f(t - 2 * h)) / (12 * h);

  const double a2 = sp.alpha * sp.alpha;
  const double drift = (t * t - b * b) * dlog;
  const double linear = (1.0 - 2.0 * st.epsilon / sp.alpha) * t;
  const double constant = sp.beta1_sq / a2;
  const double scale = std::abs(drift) + std::abs(linear) + std::abs(constant);
  return std::abs(drift + linear - constant) / scale;
}

BoundaryValues boundary_vanishing(double p, double q, double b, double xi) {
  const auto endpoint = [](double vanishing_power, double other_power, double other_base,
                           double exp_arg) {
    if (vanishing_power > 0.0) return 0.0;
    if (vanishing_power < 0.0) return std::numeric_limits<double>::infinity();
    return std::pow(other_base, other_power) * std::exp(exp_arg);
  };
  BoundaryValues v;
  v.at_upper = endpoint(q, p, 2.0 * b, xi * b);
  v.at_lower = endpoint(p, q, 2.0 * b, -xi * b);
  v.max = std::max(v.at_lower, v.at_upper);
  v.diverges = std::isinf(v.max);
  return v;
}

BoundaryValues boundary_vanishing(const spectrum::SpectralParams& sp,
                                  const spectrum::StateParams& st, double xi) {
  return boundary_vanishing(st.p, st.q, half_width(sp), xi);
}

std::complex<double> contour_power_identity(int k, int n, std::complex<double> xi,
                                            const ContourSpec& contour) {
  validate(contour);
  if (k < 1 || n < 1) throw std::invalid_argument("contour_power_identity: k, n must be positive");
  const double distance = std::abs(xi - contour.center);
  const double margin = 2.0 * contour.radius / contour.num_points;
  if (!(distance < contour.radius - margin)) {
    throw std::invalid_argument("contour_power_identity: xi must lie inside the contour, away from it");
  }

  // (1 / 2 pi i) \oint g dz with z = c + R e^{i theta} is the mean of g(z) (z - c).
  std::complex<double> sum{0.0, 0.0};
  for (int j = 0; j < contour.num_points; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / contour.num_points;
    const auto w = std::polar(contour.radius, theta);
    const auto z = contour.center + w;
    sum += std::pow(z, n + k - 1) / std::pow(z - xi, n) * w;
  }
  sum /= static_cast<double>(contour.num_points);
  return static_cast<double>(k) * specfun::beta(k, n) * sum;
}

std::complex<double> residue_series_check(int k, int n, double xi, const ContourSpec& contour) {
  validate(contour);
  if (k < 0 || n < 1) throw std::invalid_argument("residue_series_check: need k >= 0, n >= 1");
  if (contour.center != std::complex<double>{0.0, 0.0}) {
    throw std::invalid_argument("residue_series_check: contour must be centred on u = 0");
  }
  if (std::abs(xi) * contour.radius > kResidueMargin) {
    throw std::invalid_argument("residue_series_check: radius too large, need |xi| radius <= 0.8");
  }
  std::complex<double> sum{0.0, 0.0};
  for (int j = 0; j < contour.num_points; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / contour.num_points;
    const auto u = std::polar(contour.radius, theta);
    sum += std::pow(1.0 - xi * u, -n) / std::pow(u, k);
  }
  return sum / static_cast<double>(contour.num_points);
}

EulerIdentity euler_integral_identity(double p, double q, double s) {
  if (!(p > 0.0) || !(q > 0.0)) {
    throw std::domain_error("euler_integral_identity: p and q must be positive");
  }
  const auto integrand = [&](double z, double zc) {
    const double one_minus_z = z > 0.5 ? zc : 1.0 - z;
    return std::pow(z, p - 1.0) * std::pow(one_minus_z, q - 1.0) * std::exp(s * z);
  };
  EulerIdentity out;
  out.lhs = quadrature::tanh_sinh(quadrature::IntegrandWithComplement(integrand), 0.0, 1.0, 1e-14)
                .value;
  out.rhs = specfun::beta(p, q) * specfun::kummer_1f1(p, p + q, s);
  if (!(std::abs(out.lhs - out.rhs) <= kEulerTolerance * std::max(1.0, std::abs(out.rhs)))) {
    throw std::runtime_error("euler_integral_identity: integral and series disagree");
  }
  return out;
}

}  // namespace morse::icr
