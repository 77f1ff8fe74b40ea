#include "morse/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <limits>

#include "morse/errors.hpp"

namespace morse::quadrature {

namespace bq = boost::math::quadrature;

Result gauss_kronrod(const Integrand& f, double a, double b, double rel_tol) {
  Result r;
  double l1 = 0.0;
  const auto g = [&f](double x) { return f(x); };
  r.value = bq::gauss_kronrod<double, 15>::integrate(g, a, b, 30, rel_tol, &r.error, &l1);
  return r;
}

Result tanh_sinh(const Integrand& f, double a, double b, double rel_tol) {
  static thread_local bq::tanh_sinh<double> integrator(15);
  Result r;
  double l1 = 0.0;
  std::size_t levels = 0;
  const auto g = [&f](double x) { return f(x); };
  r.value = integrator.integrate(g, a, b, rel_tol, &r.error, &l1, &levels);
  return r;
}

Result tanh_sinh(const IntegrandWithComplement& f, double a, double b, double rel_tol) {
  static thread_local bq::tanh_sinh<double> integrator(15);
  Result r;
  double l1 = 0.0;
  std::size_t levels = 0;
  const auto g = [&f](double x, double xc) { return f(x, xc); };
  r.value = integrator.integrate(g, a, b, rel_tol, &r.error, &l1, &levels);
  return r;
}

Result half_line(const Integrand& f, double split, double upper, double rel_tol,
                 double abs_tol) {
  Result total;
  if (upper <= split) {
    total = tanh_sinh(f, 0.0, upper, rel_tol * 0.1);
  } else {
    const auto head = tanh_sinh(f, 0.0, split, rel_tol * 0.1);
    const auto tail = gauss_kronrod(f, split, upper, rel_tol * 0.1);
    total = {head.value + tail.value, head.error + tail.error};
  }
  const double allowed = std::max(rel_tol * std::abs(total.value), abs_tol);
  if (!std::isfinite(total.value) || !(total.error <= allowed)) {
    throw QuadratureError("quadrature did not converge: estimated error " +
                              std::to_string(total.error) + " for value " +
                              std::to_string(total.value),
                          total.error);
  }
  return total;
}

}  // namespace morse::quadrature
