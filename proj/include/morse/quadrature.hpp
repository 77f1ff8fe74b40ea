#pragma once

#include <functional>

namespace morse::quadrature {

struct Result {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
};

using Integrand = std::function<double(double)>;

/// Adaptive Gauss-Kronrod (7/15) on a finite interval with a smooth integrand.
Result gauss_kronrod(const Integrand& f, double a, double b, double rel_tol = 1e-13);

/// Tanh-sinh on a finite interval; tolerates integrable endpoint singularities
/// such as x^(p - 1) with p > 0. The integrand is never evaluated at a or b.
Result tanh_sinh(const Integrand& f, double a, double b, double rel_tol = 1e-13);

/// Tanh-sinh with an integrand f(x, xc) that also receives the signed distance
/// to the nearer endpoint: xc = a - x on the left half, b - x on the right.
/// Lets integrands such as (1 - x)^(q - 1) keep full precision near b.
using IntegrandWithComplement = std::function<double(double, double)>;
Result tanh_sinh(const IntegrandWithComplement& f, double a, double b, double rel_tol = 1e-13);

/// Integral over (0, upper]: tanh-sinh on (0, split] for the possibly singular
/// origin, Gauss-Kronrod on [split, upper]. Throws QuadratureError when the
/// combined error estimate exceeds max(rel_tol |value|, abs_tol).
Result half_line(const Integrand& f, double split, double upper, double rel_tol = 1e-12,
                 double abs_tol = 0.0);

}  // namespace morse::quadrature
