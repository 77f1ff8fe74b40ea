#pragma once

#include "morse/molecule.hpp"

namespace morse::spectrum {

/// State-independent parameters of the reduced radial equation
/// R'' - beta2^2 e^{-2 alpha x} R + beta1^2 e^{-alpha x} R - eps^2 R = 0.
struct SpectralParams {
  int l = 0;
  double lambda0_sq = 0.0;  // 2 m r0^2 / hbar^2, 1/eV
  double alpha = 0.0;
  double gamma = 0.0;  // eV
  double a0 = 0.0;
  double beta1_sq = 0.0;
  double beta2_sq = 0.0;

  /// Positive root of beta2_sq.
  double beta2() const;
  /// 2 beta2 / alpha.
  double lambda() const;
  /// beta1^2 / (2 alpha beta2); levels are bound while n + 1/2 is below it.
  double level_ceiling() const;
};

/// Per-level quantities. At a quantized level p == -n.
struct StateParams {
  int n = 0;
  double epsilon = 0.0;
  double kappa = 0.0;  // epsilon / alpha
  double p = 0.0;
  double q = 0.0;
};

/// Throws NoBoundSpectrumError when V0 + gamma a2 <= 0 or 2 V0 - gamma a1 <= 0.
SpectralParams spectral_setup(const MoleculeParams& params, int l);

/// beta1^2 / (2 beta2) - alpha (n + 1/2). Throws NotBoundError when <= 0.
double epsilon_of_n(const SpectralParams& sp, int n);

StateParams state_params(const SpectralParams& sp, int n);

/// Exponents p, q of the contour kernel for an arbitrary epsilon.
double p_of_epsilon(const SpectralParams& sp, double epsilon);
double q_of_epsilon(const SpectralParams& sp, double epsilon);

/// Closed-form level E(n, l) in eV.
double energy(const MoleculeParams& params, int n, int l);
double energy(const SpectralParams& sp, int n);

/// Same level via gamma a0 - eps^2 / Lambda0^2.
double energy_from_epsilon(const SpectralParams& sp, double epsilon);

/// Number of bound vibrational levels for this l (0 if none).
int max_bound_n(const MoleculeParams& params, int l);
int max_bound_n(const SpectralParams& sp);

}  // namespace morse::spectrum
