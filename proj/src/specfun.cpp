#include "morse/specfun.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace morse::specfun {

double ln_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("ln_gamma: argument must be positive");
  // Lanczos series with g = 671/128 and 14 terms.
  static constexpr std::array<double, 14> cof = {
      57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
      -0.491913816097620199,   .339946499848118887e-4,  .465236289270485756e-4,
      -.983744753048795646e-4, .158088703224912494e-3,  -.210264441724104883e-3,
      .217439618115212643e-3,  -.164318106536763890e-3, .844182239838527433e-4,
      -.261908384015814087e-4, .368991826595316234e-5};
  double y = x;
  double tmp = x + 5.24218750000000000;
  tmp = (x + 0.5) * std::log(tmp) - tmp;
  double ser = 0.999999999999997092;
  for (double c : cof) ser += c / ++y;
  return tmp + std::log(2.5066282746310005 * ser / x);
}

double ln_beta(double p, double q) {
  if (!(p > 0.0) || !(q > 0.0)) throw std::domain_error("beta: arguments must be positive");
  return ln_gamma(p) + ln_gamma(q) - ln_gamma(p + q);
}

double beta(double p, double q) { return std::exp(ln_beta(p, q)); }

double pochhammer(double a, int k) {
  if (k < 0) throw std::domain_error("pochhammer: k must be non-negative");
  double out = 1.0;
  for (int i = 0; i < k; ++i) out *= a + i;
  return out;
}

double laguerre(int n, double a, double x) {
  if (n < 0) throw std::domain_error("laguerre: degree must be non-negative");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double curr = 1.0 + a - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + a - x) * curr - (k + a) * prev) / (k + 1.0);
    prev = curr;
    curr = next;
  }
  return curr;
}

double kummer_1f1(double a, double b, double x) {
  constexpr int kMaxTerms = 10000;
  constexpr double kTol = 1e-16;

  const bool terminating = a <= 0.0 && a == std::floor(a);
  // Extended-precision accumulation: alternating terms for x > 0 can exceed
  // the result by many orders of magnitude.
  long double sum = 1.0L;
  long double term = 1.0L;
  for (int k = 0; k < kMaxTerms; ++k) {
    if (terminating && a + k == 0.0) return static_cast<double>(sum);
    if (b + k == 0.0) {
      throw std::domain_error("kummer_1f1: b is a non-positive integer reached before termination");
    }
    term *= (static_cast<long double>(a) + k) / (static_cast<long double>(b) + k) * x / (k + 1.0L);
    sum += term;
    if (!std::isfinite(static_cast<double>(sum))) {
      throw std::domain_error("kummer_1f1: series overflows double range");
    }
    if (!terminating && std::abs(term) < kTol * std::abs(sum)) {
      // Only stop once the terms are shrinking for good.
      const double next = (a + k + 1) / (b + k + 1) * x / (k + 2.0);
      if (std::abs(next) < 0.5) return static_cast<double>(sum);
    }
  }
  throw std::domain_error("kummer_1f1: series did not converge within " +
                          std::to_string(kMaxTerms) + " terms");
}

}  // namespace morse::specfun
