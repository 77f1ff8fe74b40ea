#include "morse/spectrum.hpp"

#include <cmath>
#include <string>

#include "morse/errors.hpp"
#include "morse/pekeris.hpp"

namespace morse::spectrum {

double SpectralParams::beta2() const { return std::sqrt(beta2_sq); }

double SpectralParams::lambda() const { return 2.0 * beta2() / alpha; }

double SpectralParams::level_ceiling() const { return beta1_sq / (2.0 * alpha * beta2()); }

SpectralParams spectral_setup(const MoleculeParams& params, int l) {
  const auto e = pekeris::pekeris_coefficients(params, l);
  SpectralParams sp;
  sp.l = l;
  sp.lambda0_sq = params.lambda0_sq();
  sp.alpha = params.alpha;
  sp.gamma = e.gamma;
  sp.a0 = e.a0;
  const double well2 = params.V0 + e.gamma * e.a2;
  const double well1 = 2.0 * params.V0 - e.gamma * e.a1;
  if (!(well2 > 0.0) || !(well1 > 0.0)) {
    throw NoBoundSpectrumError("no Pekeris bound spectrum for " + params.name +
                               " at l = " + std::to_string(l));
  }
  sp.beta2_sq = sp.lambda0_sq * well2;
  sp.beta1_sq = sp.lambda0_sq * well1;
  return sp;
}

double epsilon_of_n(const SpectralParams& sp, int n) {
  if (n < 0) throw std::domain_error("vibrational quantum number must be non-negative");
  const double eps = sp.beta1_sq / (2.0 * sp.beta2()) - sp.alpha * (n + 0.5);
  if (!(eps > 0.0)) {
    throw NotBoundError("state not bound: n = " + std::to_string(n) +
                        ", l = " + std::to_string(sp.l));
  }
  return eps;
}

double p_of_epsilon(const SpectralParams& sp, double epsilon) {
  return epsilon / sp.alpha + 0.5 - sp.beta1_sq / (2.0 * sp.alpha * sp.beta2());
}

double q_of_epsilon(const SpectralParams& sp, double epsilon) {
  return epsilon / sp.alpha + 0.5 + sp.beta1_sq / (2.0 * sp.alpha * sp.beta2());
}

StateParams state_params(const SpectralParams& sp, int n) {
  StateParams st;
  st.n = n;
  st.epsilon = epsilon_of_n(sp, n);
  st.kappa = st.epsilon / sp.alpha;
  st.p = -static_cast<double>(n);
  st.q = q_of_epsilon(sp, st.epsilon);
  return st;
}

double energy(const SpectralParams& sp, int n) {
  epsilon_of_n(sp, n);  // bound-state precondition
  const double bracket = sp.beta1_sq / sp.beta2() - (2.0 * n + 1.0) * sp.alpha;
  return -bracket * bracket / (4.0 * sp.lambda0_sq) + sp.gamma * sp.a0;
}

double energy(const MoleculeParams& params, int n, int l) {
  return energy(spectral_setup(params, l), n);
}

double energy_from_epsilon(const SpectralParams& sp, double epsilon) {
  return sp.gamma * sp.a0 - epsilon * epsilon / sp.lambda0_sq;
}

int max_bound_n(const SpectralParams& sp) {
  const double limit = sp.level_ceiling() - 0.5;
  if (!(limit > 0.0)) return 0;
  return static_cast<int>(std::ceil(limit));
}

int max_bound_n(const MoleculeParams& params, int l) {
  return max_bound_n(spectral_setup(params, l));
}

}  // namespace morse::spectrum
