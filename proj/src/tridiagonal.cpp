#include "morse/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace morse::tridiagonal {

namespace {

void check_shape(const SymTridiagonal& m) {
  if (m.diag.empty()) throw std::invalid_argument("empty tridiagonal matrix");
  if (m.off.size() + 1 != m.diag.size()) {
    throw std::invalid_argument("off-diagonal must have size n - 1");
  }
}

double pivot_floor(const SymTridiagonal& m) {
  double emax = 1.0;
  for (double e : m.off) emax = std::max(emax, e * e);
  return std::numeric_limits<double>::min() * emax;
}

}  // namespace

std::size_t sturm_count(const SymTridiagonal& m, double x) {
  const double floor = pivot_floor(m);
  std::size_t count = 0;
  double q = m.diag[0] - x;
  if (std::abs(q) < floor) q = -floor;
  if (q < 0.0) ++count;
  for (std::size_t i = 1; i < m.diag.size(); ++i) {
    q = m.diag[i] - x - m.off[i - 1] * m.off[i - 1] / q;
    if (std::abs(q) < floor) q = -floor;
    if (q < 0.0) ++count;
  }
  return count;
}

std::vector<double> lowest_eigenvalues(const SymTridiagonal& m, std::size_t count) {
  check_shape(m);
  if (count > m.size()) throw std::invalid_argument("more eigenvalues requested than matrix size");

  // Gershgorin bounds.
  double lo = std::numeric_limits<double>::max();
  double hi = std::numeric_limits<double>::lowest();
  for (std::size_t i = 0; i < m.size(); ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(m.off[i - 1]);
    if (i + 1 < m.size()) radius += std::abs(m.off[i]);
    lo = std::min(lo, m.diag[i] - radius);
    hi = std::max(hi, m.diag[i] + radius);
  }
  const double spread = std::max(std::abs(lo), std::abs(hi));
  lo -= 1e-12 * spread + 1e-300;
  hi += 1e-12 * spread + 1e-300;

  std::vector<double> out;
  out.reserve(count);
  double floor_lo = lo;
  for (std::size_t i = 0; i < count; ++i) {
    double a = floor_lo;
    double b = hi;
    for (int iter = 0; iter < 200; ++iter) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      if (sturm_count(m, mid) > i) {
        b = mid;
      } else {
        a = mid;
      }
      if (b - a <= 2.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(a), std::abs(b))) {
        break;
      }
    }
    out.push_back(0.5 * (a + b));
    floor_lo = a;
  }
  return out;
}

std::vector<double> eigenvector(const SymTridiagonal& m, double eigenvalue) {
  check_shape(m);
  const std::size_t n = m.size();
  double scale = 0.0;
  for (double d : m.diag) scale = std::max(scale, std::abs(d));
  for (double e : m.off) scale = std::max(scale, std::abs(e));
  const double shift = eigenvalue + 1e-13 * std::max(scale, 1.0);

  // LU with partial pivoting of (T - shift I); U has two superdiagonals.
  std::vector<double> sub(m.off), dia(n), sup1(m.off), sup2(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) dia[i] = m.diag[i] - shift;
  std::vector<double> mult(n, 0.0);
  std::vector<char> swapped(n, 0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(sub[i]) > std::abs(dia[i])) {
      swapped[i] = 1;
      // swap rows i and i + 1 within the band
      std::swap(dia[i], sub[i]);
      const double next_sup = i + 1 < n - 1 ? sup1[i + 1] : 0.0;
      std::swap(sup1[i], dia[i + 1]);
      sup2[i] = next_sup;
      if (i + 1 < n - 1) sup1[i + 1] = 0.0;
    }
    if (dia[i] == 0.0) dia[i] = std::numeric_limits<double>::epsilon() * std::max(scale, 1.0);
    mult[i] = sub[i] / dia[i];
    dia[i + 1] -= mult[i] * sup1[i];
    if (i + 1 < n - 1) sup1[i + 1] -= mult[i] * sup2[i];
  }
  if (dia[n - 1] == 0.0) dia[n - 1] = std::numeric_limits<double>::epsilon() * std::max(scale, 1.0);

  std::vector<double> v(n, 1.0);
  for (int iter = 0; iter < 4; ++iter) {
    // forward: apply row swaps and multipliers
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (swapped[i]) std::swap(v[i], v[i + 1]);
      v[i + 1] -= mult[i] * v[i];
    }
    // back substitution
    for (std::size_t k = n; k-- > 0;) {
      double s = v[k];
      if (k + 1 < n) s -= sup1[k] * v[k + 1];
      if (k + 2 < n) s -= sup2[k] * v[k + 2];
      v[k] = s / dia[k];
    }
    const double norm = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
    for (double& x : v) x /= norm;
  }
  return v;
}

std::vector<double> all_eigenvalues(SymTridiagonal m) {
  check_shape(m);
  const std::size_t n = m.size();
  std::vector<double>& d = m.diag;
  std::vector<double> e(m.off);
  e.push_back(0.0);

  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t mm = l;
    do {
      for (mm = l; mm + 1 < n; ++mm) {
        const double dd = std::abs(d[mm]) + std::abs(d[mm + 1]);
        if (std::abs(e[mm]) <= std::numeric_limits<double>::epsilon() * dd) break;
      }
      if (mm != l) {
        if (++iter > 60) throw std::runtime_error("implicit QL did not converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[mm] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0;
        double c = 1.0;
        double p = 0.0;
        bool deflated = false;
        for (std::size_t i = mm; i-- > l;) {
          const double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[mm] = 0.0;
            deflated = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (deflated) continue;
        d[l] -= p;
        e[l] = g;
        e[mm] = 0.0;
      }
    } while (mm != l);
  }
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace morse::tridiagonal
