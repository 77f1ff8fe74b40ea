#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>

#include "morse/icr.hpp"
#include "morse/molecule.hpp"
#include "morse/specfun.hpp"
#include "morse/spectrum.hpp"

using namespace morse;
using namespace morse::icr;
using cd = std::complex<double>;

namespace {

// b = beta2 / alpha = 2 with arbitrary exponents p, q.
struct Artificial {
  spectrum::SpectralParams sp;
  spectrum::StateParams st;
};

Artificial artificial(double p, double q) {
  Artificial a;
  a.sp.alpha = 1.0;
  a.sp.beta2_sq = 4.0;
  a.sp.beta1_sq = 6.0;
  a.sp.lambda0_sq = 1.0;
  a.st.p = p;
  a.st.q = q;
  return a;
}

}  // namespace

TEST_CASE("kernel Q") {
  const auto a = artificial(1.5, 3.0);
  CHECK(kernel_Q(0.0, a.sp, a.st) == doctest::Approx(std::pow(2.0, 2.5)).epsilon(1e-14));
  // (1e-9)^2 * 4^0.5 at the upper edge.
  CHECK(kernel_Q(2.0 - 1e-9, a.sp, a.st) < 1e-15);
  CHECK(kernel_Q(1.0, a.sp, a.st) == doctest::Approx(std::pow(1.0, 2.0) * std::pow(3.0, 0.5)));
  CHECK(std::log(kernel_Q(0.7, a.sp, a.st)) ==
        doctest::Approx(log_kernel_Q(0.7, a.sp, a.st)).epsilon(1e-14));
  CHECK_THROWS_AS(kernel_Q(2.0, a.sp, a.st), std::domain_error);
  CHECK_THROWS_AS(kernel_Q(-2.5, a.sp, a.st), std::domain_error);
}

TEST_CASE("kernel Q solves its first-order equation") {
  for (const auto& name : builtin_molecule_names()) {
    for (int n : {0, 5, 7}) {
      for (int l : {0, 10}) {
        const auto sp = spectrum::spectral_setup(builtin_molecule(name), l);
        const auto st = spectrum::state_params(sp, n);
        const double b = sp.beta2() / sp.alpha;
        for (int i = 1; i <= 50; ++i) {
          const double t = -b + 2.0 * b * i / 51.0;
          CAPTURE(name);
          CAPTURE(t);
          CHECK(kernel_ode_residual(t, sp, st) <= 1e-9);
        }
      }
    }
  }
}

TEST_CASE("boundary terms") {
  for (double xi : {0.1, 1.0, 5.0}) {
    const auto half = boundary_vanishing(0.5, 0.5, 2.0, xi);
    CHECK(half.at_lower == 0.0);
    CHECK(half.at_upper == 0.0);
    CHECK(half.max == 0.0);
    CHECK_FALSE(half.diverges);
    const auto generic = boundary_vanishing(1.2, 3.4, 2.0, xi);
    CHECK(generic.max == 0.0);
    CHECK_FALSE(generic.diverges);
    CHECK(boundary_vanishing(-0.2, 1.5, 2.0, xi).diverges);
  }
}

TEST_CASE("contour power identity") {
  const ContourSpec shifted{{0.5, 0.0}, 1.0, 256};
  CHECK(std::abs(contour_power_identity(2, 3, 0.5, shifted) - 0.25) <= 1e-8);

  const ContourSpec unit{};
  CHECK(std::abs(contour_power_identity(1, 1, 0.3, unit) - 0.3) <= 1e-10);
  const cd xi(0.7, 0.2);
  CHECK(std::abs(contour_power_identity(4, 2, xi, unit) - std::pow(xi, 4)) <= 1e-8);

  for (int k = 1; k <= 6; ++k) {
    for (int n = 1; n <= 5; ++n) {
      const cd z(0.3, -0.25);
      CHECK(std::abs(contour_power_identity(k, n, z, unit) - std::pow(z, k)) <= 1e-9);
    }
  }
}

TEST_CASE("contour power identity converges spectrally") {
  const cd xi(0.5, 0.0);
  const auto error = [&](int nodes) {
    return std::abs(contour_power_identity(3, 2, xi, {{0.0, 0.0}, 0.6, nodes}) - std::pow(xi, 3));
  };
  CHECK(error(128) >= 10.0 * error(256));
}

TEST_CASE("contour power identity rejects poles on or outside the contour") {
  const ContourSpec unit{};
  CHECK_THROWS_AS(contour_power_identity(2, 2, 1.5, unit), std::invalid_argument);
  CHECK_THROWS_AS(contour_power_identity(2, 2, 1.0 - 1e-4, unit), std::invalid_argument);
  CHECK_THROWS_AS(contour_power_identity(2, 2, 0.3, {{0.0, 0.0}, 1.0, 32}), std::invalid_argument);
  CHECK_THROWS_AS(contour_power_identity(2, 2, 0.3, {{0.0, 0.0}, 0.0, 256}), std::invalid_argument);
}

TEST_CASE("residue series") {
  const ContourSpec unit{};
  CHECK(std::abs(residue_series_check(0, 3, 0.5, unit) - 1.0) <= 1e-12);
  CHECK(std::abs(residue_series_check(2, 3, 0.4, unit) - 0.96) <= 1e-9);
  CHECK_THROWS_AS(residue_series_check(5, 1, 0.9, unit), std::invalid_argument);
  CHECK_THROWS_AS(residue_series_check(1, 1, 0.2, {{0.1, 0.0}, 1.0, 256}), std::invalid_argument);

  for (int k = 0; k <= 8; ++k) {
    for (int n = 1; n <= 5; ++n) {
      for (double radius : {0.5, 1.0, 2.0}) {
        for (double xi : {-0.8 / radius, -0.3 / radius, 0.1 / radius, 0.8 / radius}) {
          const double expected = specfun::pochhammer(n, k) / std::tgamma(k + 1.0) * std::pow(xi, k);
          CAPTURE(k);
          CAPTURE(n);
          CAPTURE(xi);
          CHECK(std::abs(residue_series_check(k, n, xi, {{0.0, 0.0}, radius, 256}) - expected) <=
                1e-9);
        }
      }
    }
  }
}

TEST_CASE("Euler integral identity") {
  for (double p : {0.5, 1.0, 3.0}) {
    const auto e = euler_integral_identity(p, 2.0, 0.0);
    CHECK(e.lhs == doctest::Approx(specfun::beta(p, 2.0)).epsilon(1e-12));
    CHECK(e.rhs == doctest::Approx(specfun::beta(p, 2.0)).epsilon(1e-12));
  }
  const auto elementary = euler_integral_identity(1.0, 1.0, 2.0);
  CHECK(elementary.lhs == doctest::Approx(std::expm1(2.0) / 2.0).epsilon(1e-12));
  CHECK(elementary.rhs == doctest::Approx(std::expm1(2.0) / 2.0).epsilon(1e-12));

  // Both sides against a 40-digit quadrature of the left-hand integral.
  const auto derived = euler_integral_identity(0.8, 2.3, 5.5);
  CHECK(derived.lhs == doctest::Approx(6.1761900124046428080).epsilon(1e-12));
  CHECK(derived.rhs == doctest::Approx(6.1761900124046428080).epsilon(1e-12));

  CHECK_THROWS_AS(euler_integral_identity(0.0, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(euler_integral_identity(1.0, -0.5, 1.0), std::domain_error);
}

TEST_CASE("Euler integral identity over a parameter grid") {
  for (int i = 1; i <= 5; ++i) {
    for (int j = 1; j <= 5; ++j) {
      for (int k = 0; k < 5; ++k) {
        const double p = 0.3 + 3.7 * i / 5.0;
        const double q = 0.3 + 3.7 * j / 5.0;
        const double s = -6.0 + 3.0 * k;
        const auto e = euler_integral_identity(p, q, s);
        CAPTURE(p);
        CAPTURE(q);
        CAPTURE(s);
        CHECK(std::abs(e.lhs - e.rhs) <= kEulerTolerance * std::max(1.0, std::abs(e.rhs)));
      }
    }
  }
}
