#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "morse/molecule.hpp"
#include "morse/spectrum.hpp"

namespace morse::wavefunction {

/// A quantized level together with everything needed to evaluate its radial
/// function R(xi) = C xi^kappa exp(-lambda xi / 2) L_n^(2 kappa)(lambda xi).
struct BoundState {
  QuantumNumbers qn;
  double energy = 0.0;             // eV
  double log_normalization = 0.0;  // ln C; C alone can exceed double range
  double r0 = 0.0;                 // angstrom
  spectrum::SpectralParams sp;
  spectrum::StateParams state;

  double normalization() const;
};

struct WavefunctionSamples {
  std::string molecule;
  int n = 0;
  int l = 0;
  std::vector<double> grid;    // r, angstrom, strictly increasing
  std::vector<double> values;  // R at each r
  double norm_estimate = 0.0;
};

/// ln C; C = lambda^kappa sqrt(2 eps Gamma(n + 1) / Gamma(2 kappa + n + 1)).
double log_normalization_constant(const spectrum::SpectralParams& sp, int n);
double normalization_constant(const spectrum::SpectralParams& sp, int n);

BoundState bound_state(const MoleculeParams& params, int n, int l);

/// R as a function of xi = exp(-alpha x). Evaluated in the log domain.
double radial_value_xi(const BoundState& state, double xi);
/// R at bond length r (angstrom).
double radial_value(const BoundState& state, double r);

/// Default output grid: 2000 uniform points on [0.3 r0, 5 r0].
std::vector<double> default_grid(double r0);

/// Throws std::invalid_argument unless the grid is strictly increasing and positive.
WavefunctionSamples radial_wavefunction(const MoleculeParams& params, int n, int l,
                                        std::span<const double> grid);

/// Integral of R^2 over the whole line in x, computed as int_0^inf R^2 / (alpha xi) dxi.
double norm_integral(const BoundState& state);

/// Trapezoid estimate of int R^2 dx over the sampled range only.
double norm_integral(const WavefunctionSamples& samples, double r0);

/// Upper cutoff in phi = lambda xi beyond which the envelope of R^2 / phi is 80 e-folds below its peak.
double phi_cutoff(const BoundState& state);

/// Number of strict sign changes, skipping exact zeros.
int count_sign_changes(std::span<const double> values);

/// `r_angstrom,R` header, 12 significant digits.
void write_csv(std::ostream& os, const WavefunctionSamples& samples);
/// Writes via a temporary sibling file and rename. Throws std::runtime_error on I/O failure.
void write_csv_file(const std::filesystem::path& path, const WavefunctionSamples& samples);

/// int_0^inf xi^(mu + nu) e^-xi [L_n^(mu)(xi)]^2 dxi evaluated three ways.
struct MomentResult {
  double quadrature = 0.0;
  double printed_closed_form = 0.0;   // double sum with Gamma(n + k + 1) as published
  double series_closed_form = 0.0;    // same sum with Gamma(mu + k + 1), from the power series
  bool printed_agrees = false;        // |printed - quadrature| <= tol * |quadrature|
  bool series_agrees = false;
};

inline constexpr double kMomentTolerance = 1e-8;

/// Requires mu > 0 and mu + nu + 1 > 0 (std::domain_error otherwise). Throws
/// std::runtime_error when the series form disagrees with quadrature.
MomentResult laguerre_moment(int n, double mu, double nu);

double moment_printed_form(int n, double mu, double nu);
double moment_series_form(int n, double mu, double nu);
double moment_quadrature(int n, double mu, double nu);

}  // namespace morse::wavefunction
