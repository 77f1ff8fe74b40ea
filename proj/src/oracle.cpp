#include "morse/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "morse/errors.hpp"
#include "morse/spectrum.hpp"
#include "morse/tridiagonal.hpp"
#include "morse/wavefunction.hpp"

namespace morse::oracle {

namespace {

// Interior nodes of -d^2/dx^2 + Lambda0^2 V(x) with Dirichlet ends.
tridiagonal::SymTridiagonal build_operator(const MoleculeParams& params, int l,
                                           const GridSpec& grid, pekeris::Mode mode) {
  const double h = (grid.x_max - grid.x_min) / (grid.num_points - 1);
  const double inv_h2 = 1.0 / (h * h);
  const double l0 = params.lambda0_sq();
  const std::size_t interior = static_cast<std::size_t>(grid.num_points - 2);
  tridiagonal::SymTridiagonal m;
  m.diag.resize(interior);
  m.off.assign(interior - 1, -inv_h2);
  for (std::size_t i = 0; i < interior; ++i) {
    const double x = grid.x_min + static_cast<double>(i + 1) * h;
    m.diag[i] = 2.0 * inv_h2 + l0 * pekeris::effective_potential_x(x, params, l, mode);
  }
  return m;
}

void check_count(const MoleculeParams& params, int l, int count) {
  if (count < 0) throw std::invalid_argument("level count must be non-negative");
  const int bound = spectrum::max_bound_n(params, l);
  if (count > bound) {
    throw std::invalid_argument("requested " + std::to_string(count) + " levels but only " +
                                std::to_string(bound) + " are bound");
  }
}

GridSpec refined(const GridSpec& grid) {
  return {grid.x_min, grid.x_max, 2 * grid.num_points - 1};
}

}  // namespace

RadialGridSpec default_radial_grid(const MoleculeParams& params) {
  const GridSpec x;
  return {(1.0 + x.x_min) * params.r0, (1.0 + x.x_max) * params.r0, x.num_points};
}

void validate(const GridSpec& grid) {
  if (!(grid.x_min < 0.0 && grid.x_max > 0.0)) {
    throw std::invalid_argument("grid must satisfy x_min < 0 < x_max");
  }
  if (grid.num_points < 1000) throw std::invalid_argument("grid needs at least 1000 points");
}

std::vector<double> fd_eigenvalues(const MoleculeParams& params, int l, int count,
                                   const GridSpec& grid, pekeris::Mode mode) {
  validate(grid);
  if (count == 0) return {};
  const auto m = build_operator(params, l, grid, mode);
  auto levels = tridiagonal::lowest_eigenvalues(m, static_cast<std::size_t>(count));
  const double l0 = params.lambda0_sq();
  for (double& e : levels) e /= l0;
  return levels;
}

Levels solve(const MoleculeParams& params, int l, int count, const GridSpec& grid,
             pekeris::Mode mode) {
  Levels out;
  out.coarse = fd_eigenvalues(params, l, count, grid, mode);
  out.fine = fd_eigenvalues(params, l, count, refined(grid), mode);
  out.extrapolated.resize(out.fine.size());
  for (std::size_t i = 0; i < out.fine.size(); ++i) {
    const double gap = std::abs(out.fine[i] - out.coarse[i]);
    if (gap > kConvergenceThreshold * std::abs(out.fine[i])) {
      throw UnconvergedError("finite-difference level " + std::to_string(i) + " for " +
                             params.name + " l = " + std::to_string(l) +
                             " changed by " + std::to_string(gap) + " eV under refinement");
    }
    out.extrapolated[i] = (4.0 * out.fine[i] - out.coarse[i]) / 3.0;
  }
  return out;
}

std::vector<double> eigenvalues_pekeris(const MoleculeParams& params, int l, int count,
                                        const GridSpec& grid) {
  validate(grid);
  check_count(params, l, count);
  if (count == 0) return {};
  return solve(params, l, count, grid, pekeris::Mode::pekeris).extrapolated;
}

std::vector<double> eigenvalues_exact(const MoleculeParams& params, int l, int count,
                                      const RadialGridSpec& grid) {
  if (!(grid.r_min > 0.0)) throw std::invalid_argument("exact-mode grid needs r_min > 0");
  if (!(grid.r_max > params.r0 && grid.r_min < params.r0)) {
    throw std::invalid_argument("exact-mode grid must bracket r0");
  }
  const GridSpec x{grid.r_min / params.r0 - 1.0, grid.r_max / params.r0 - 1.0, grid.num_points};
  validate(x);
  check_count(params, l, count);
  if (count == 0) return {};
  return solve(params, l, count, x, pekeris::Mode::exact).extrapolated;
}

std::vector<double> eigenvalues_exact(const MoleculeParams& params, int l, int count) {
  return eigenvalues_exact(params, l, count, default_radial_grid(params));
}

double truncation_shift(const MoleculeParams& params, int l, int count, const GridSpec& grid,
                        pekeris::Mode mode) {
  validate(grid);
  check_count(params, l, count);
  const GridSpec wide{grid.x_min, 2.0 * grid.x_max - grid.x_min, 2 * grid.num_points - 1};
  const auto a = fd_eigenvalues(params, l, count, grid, mode);
  const auto b = fd_eigenvalues(params, l, count, wide, mode);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]) / std::abs(b[i]));
  }
  return worst;
}

int eigenvector_nodes(const MoleculeParams& params, int l, int index, const GridSpec& grid,
                      pekeris::Mode mode) {
  validate(grid);
  const auto m = build_operator(params, l, grid, mode);
  const auto levels = tridiagonal::lowest_eigenvalues(m, static_cast<std::size_t>(index) + 1);
  auto v = tridiagonal::eigenvector(m, levels.back());
  double peak = 0.0;
  for (double x : v) peak = std::max(peak, std::abs(x));
  // Inverse-iteration noise in the far tails must not register as nodes.
  for (double& x : v) {
    if (std::abs(x) < 1e-8 * peak) x = 0.0;
  }
  return wavefunction::count_sign_changes(v);
}

}  // namespace morse::oracle
