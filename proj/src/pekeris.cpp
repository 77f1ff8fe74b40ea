#include "morse/pekeris.hpp"

#include <cmath>
#include <stdexcept>

namespace morse::pekeris {

double morse_potential(double x, const MoleculeParams& params) {
  const double u = std::exp(-params.alpha * x);
  return params.V0 * (u * u - 2.0 * u);
}

PekerisExpansion pekeris_coefficients(double alpha) {
  const double inv = 1.0 / alpha;
  const double inv2 = inv * inv;
  PekerisExpansion e;
  e.a0 = 1.0 - 3.0 * inv + 3.0 * inv2;
  e.a1 = 4.0 * inv - 6.0 * inv2;
  e.a2 = -inv + 3.0 * inv2;
  return e;
}

PekerisExpansion pekeris_coefficients(const MoleculeParams& params, int l) {
  if (l < 0) throw std::domain_error("rotational quantum number must be non-negative");
  auto e = pekeris_coefficients(params.alpha);
  e.gamma = l * (l + 1.0) * params.rotational_unit();
  return e;
}

double approx_centrifugal(double x, const PekerisExpansion& expansion, double alpha) {
  if (expansion.gamma == 0.0) return 0.0;
  const double u = std::exp(-alpha * x);
  return expansion.gamma * (expansion.a0 + expansion.a1 * u + expansion.a2 * u * u);
}

double exact_centrifugal(double x, double gamma) {
  const double s = 1.0 + x;
  return gamma / (s * s);
}

double effective_potential_x(double x, const MoleculeParams& params, int l, Mode mode) {
  const auto e = pekeris_coefficients(params, l);
  const double barrier = mode == Mode::exact ? (l == 0 ? 0.0 : exact_centrifugal(x, e.gamma))
                                             : approx_centrifugal(x, e, params.alpha);
  return barrier + morse_potential(x, params);
}

double effective_potential(double r, const MoleculeParams& params, int l, Mode mode) {
  if (mode == Mode::exact && !(r > 0.0)) {
    throw std::domain_error("effective_potential: r must be positive in exact mode");
  }
  return effective_potential_x((r - params.r0) / params.r0, params, l, mode);
}

}  // namespace morse::pekeris
