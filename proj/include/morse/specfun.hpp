#pragma once

namespace morse::specfun {

/// ln Gamma(x) for x > 0 (Lanczos, g = 607/128). Throws std::domain_error otherwise.
double ln_gamma(double x);

/// Euler beta function Gamma(p) Gamma(q) / Gamma(p + q), evaluated in the log domain.
double beta(double p, double q);
double ln_beta(double p, double q);

/// Rising factorial (a)_k = a (a + 1) ... (a + k - 1); (a)_0 = 1.
double pochhammer(double a, int k);

/// Generalized Laguerre polynomial L_n^(a)(x) by the three-term recurrence.
double laguerre(int n, double a, double x);

/// Kummer's confluent hypergeometric series 1F1(a; b; x).
///
/// Summation stops once |term| < 1e-16 |sum| or, for non-positive integer a,
/// at k = -a. Throws std::domain_error if b is a non-positive integer reached
/// before the series terminates, or if 10000 terms do not suffice.
double kummer_1f1(double a, double b, double x);

}  // namespace morse::specfun
