#pragma once

#include <complex>

#include "morse/spectrum.hpp"

namespace morse::icr {

/// Circle used for trapezoid contour quadrature.
struct ContourSpec {
  std::complex<double> center{0.0, 0.0};
  double radius = 1.0;
  int num_points = 256;
};

/// Throws std::invalid_argument unless radius > 0 and num_points >= 64.
void validate(const ContourSpec& contour);

/// Unnormalized kernel (b - t)^(q-1) (b + t)^(p-1), b = beta2 / alpha.
/// Defined for |t| < b; std::domain_error otherwise.
double kernel_Q(double t, const spectrum::SpectralParams& sp, const spectrum::StateParams& st);
double log_kernel_Q(double t, const spectrum::SpectralParams& sp,
                    const spectrum::StateParams& st);

/// Relative residual of (t^2 - b^2) Q' + [(1 - 2 eps/alpha) t - beta1^2/alpha^2] Q = 0,
/// with Q'/Q taken by a five-point finite difference of ln Q.
double kernel_ode_residual(double t, const spectrum::SpectralParams& sp,
                           const spectrum::StateParams& st);

struct BoundaryValues {
  double at_lower = 0.0;  // t = -b (z = 0)
  double at_upper = 0.0;  // t = +b (z = 1)
  double max = 0.0;
  bool diverges = false;
};

/// (b - t)^q (b + t)^p e^(xi t) at t = +-b.
BoundaryValues boundary_vanishing(double p, double q, double b, double xi);
BoundaryValues boundary_vanishing(const spectrum::SpectralParams& sp,
                                  const spectrum::StateParams& st, double xi);

/// (k / 2 pi i) B(k, n) \oint z^(n+k-1) / (z - xi)^n dz by the trapezoid rule,
/// expected to reproduce xi^k. Throws std::invalid_argument if xi is outside
/// the circle or within 2/num_points of it.
std::complex<double> contour_power_identity(int k, int n, std::complex<double> xi,
                                            const ContourSpec& contour);

/// (1 / 2 pi i) \oint (1 - xi u)^(-n) / u^(k+1) du, counterclockwise around
/// u = 0; expected to equal (n)_k / k! xi^k. Requires |xi| radius <= 0.8.
std::complex<double> residue_series_check(int k, int n, double xi, const ContourSpec& contour);

inline constexpr double kResidueMargin = 0.8;

struct EulerIdentity {
  double lhs = 0.0;  // int_0^1 z^(p-1) (1 - z)^(q-1) e^(s z) dz
  double rhs = 0.0;  // B(p, q) 1F1(p; p + q; s)
};

inline constexpr double kEulerTolerance = 1e-9;

/// Throws std::domain_error for p, q <= 0 and std::runtime_error when the two
/// sides differ by more than kEulerTolerance * max(1, |rhs|).
EulerIdentity euler_integral_identity(double p, double q, double s);

}  // namespace morse::icr
