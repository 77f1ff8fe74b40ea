#pragma once

#include <cstddef>
#include <vector>

namespace morse::tridiagonal {

/// Real symmetric tridiagonal matrix; `off[i]` couples rows i and i + 1.
struct SymTridiagonal {
  std::vector<double> diag;
  std::vector<double> off;

  std::size_t size() const { return diag.size(); }
};

/// Number of eigenvalues strictly below x (Sturm sequence).
std::size_t sturm_count(const SymTridiagonal& m, double x);

/// The `count` smallest eigenvalues in ascending order, by Sturm bisection to
/// full double precision.
std::vector<double> lowest_eigenvalues(const SymTridiagonal& m, std::size_t count);

/// Unit eigenvector for a (converged) eigenvalue, by inverse iteration.
std::vector<double> eigenvector(const SymTridiagonal& m, double eigenvalue);

/// All eigenvalues by implicit QL with Wilkinson shifts, ascending.
std::vector<double> all_eigenvalues(SymTridiagonal m);

}  // namespace morse::tridiagonal
