#pragma once

#include "morse/molecule.hpp"

namespace morse::pekeris {

/// Three-term exponential replacement of the centrifugal barrier,
/// gamma (a0 + a1 exp(-alpha x) + a2 exp(-2 alpha x)), matched to the exact
/// gamma / (1 + x)^2 through second order at x = 0.
struct PekerisExpansion {
  double gamma = 0.0;  // l (l + 1) hbar^2 / (2 m r0^2), eV
  double a0 = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;
};

enum class Mode { exact, pekeris };

double morse_potential(double x, const MoleculeParams& params);

PekerisExpansion pekeris_coefficients(const MoleculeParams& params, int l);

/// Coefficients only; gamma is left at zero.
PekerisExpansion pekeris_coefficients(double alpha);

double approx_centrifugal(double x, const PekerisExpansion& expansion, double alpha);

/// gamma / (1 + x)^2, the exact barrier in the reduced coordinate.
double exact_centrifugal(double x, double gamma);

/// Effective radial potential at bond length r (angstrom). Throws
/// std::domain_error for r <= 0 in exact mode.
double effective_potential(double r, const MoleculeParams& params, int l, Mode mode);

/// Same potential in the reduced coordinate x = (r - r0) / r0.
double effective_potential_x(double x, const MoleculeParams& params, int l, Mode mode);

}  // namespace morse::pekeris
