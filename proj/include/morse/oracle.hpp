#pragma once

#include <vector>

#include "morse/molecule.hpp"
#include "morse/pekeris.hpp"

namespace morse::oracle {

/// Uniform grid in the reduced coordinate x = (r - r0) / r0.
struct GridSpec {
  double x_min = -0.8;
  double x_max = 12.0;
  int num_points = 8000;
};

/// Uniform grid in r for the exact centrifugal barrier.
struct RadialGridSpec {
  double r_min = 0.0;  // angstrom, > 0
  double r_max = 0.0;
  int num_points = 8000;
};

/// r in [0.2 r0, 13 r0], i.e. the default x range.
RadialGridSpec default_radial_grid(const MoleculeParams& params);

/// Throws std::invalid_argument unless x_min < 0 < x_max and num_points >= 1000.
void validate(const GridSpec& grid);

/// Lowest `count` levels of -R'' + Lambda0^2 V(x) R = Lambda0^2 E R, one grid.
std::vector<double> fd_eigenvalues(const MoleculeParams& params, int l, int count,
                                   const GridSpec& grid, pekeris::Mode mode);

/// Two resolutions (h and h/2) combined by Richardson extrapolation.
struct Levels {
  std::vector<double> coarse;
  std::vector<double> fine;
  std::vector<double> extrapolated;
};

/// Relative coarse/fine disagreement above which a solve is "unconverged".
inline constexpr double kConvergenceThreshold = 1e-3;

Levels solve(const MoleculeParams& params, int l, int count, const GridSpec& grid,
             pekeris::Mode mode);

/// Pekeris-mode levels (eV). Throws std::invalid_argument when count exceeds
/// the number of bound levels, UnconvergedError on resolution disagreement.
std::vector<double> eigenvalues_pekeris(const MoleculeParams& params, int l, int count,
                                        const GridSpec& grid = {});

/// Levels with the true l (l + 1) / r^2 barrier on r > 0.
std::vector<double> eigenvalues_exact(const MoleculeParams& params, int l, int count,
                                      const RadialGridSpec& grid);
std::vector<double> eigenvalues_exact(const MoleculeParams& params, int l, int count);

/// Largest relative level shift when x_max is pushed out to twice the grid
/// length at the same spacing: the Dirichlet truncation error of `grid`.
double truncation_shift(const MoleculeParams& params, int l, int count, const GridSpec& grid,
                        pekeris::Mode mode = pekeris::Mode::pekeris);

/// Node count of the discrete eigenvector for level `index` on one grid.
int eigenvector_nodes(const MoleculeParams& params, int l, int index, const GridSpec& grid,
                      pekeris::Mode mode = pekeris::Mode::pekeris);

}  // namespace morse::oracle
