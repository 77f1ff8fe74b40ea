#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "morse/molecule.hpp"
#include "morse/pekeris.hpp"

using namespace morse;
using namespace morse::pekeris;

TEST_CASE("Morse potential shape") {
  const auto h2 = builtin_molecule("H2");
  CHECK(morse_potential(0.0, h2) == doctest::Approx(-h2.V0).epsilon(1e-15));
  CHECK(std::abs(morse_potential(50.0, h2)) < 1e-20);
  // Half-depth point of the attractive exponential: e^{-alpha x} = 1/2 gives -3/4 V0.
  CHECK(morse_potential(std::log(2.0) / h2.alpha, h2) ==
        doctest::Approx(-0.75 * h2.V0).epsilon(1e-14));
  CHECK(morse_potential(-0.2, h2) > morse_potential(0.0, h2));
}

TEST_CASE("coefficients") {
  const auto c = pekeris_coefficients(3.0);
  CHECK(c.a0 == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(c.a1 == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(std::abs(c.a2) < 1e-15);

  for (int i = 0; i <= 200; ++i) {
    const double alpha = 0.5 + 9.5 * i / 200.0;
    const auto e = pekeris_coefficients(alpha);
    CHECK(std::abs(e.a0 + e.a1 + e.a2 - 1.0) <= 1e-14);
  }

  const auto h2 = builtin_molecule("H2");
  CHECK(pekeris_coefficients(h2, 0).gamma == 0.0);
  CHECK(pekeris_coefficients(h2, 10).gamma ==
        doctest::Approx(110.0 / h2.lambda0_sq()).epsilon(1e-15));
}

TEST_CASE("approximation matches the barrier at the equilibrium") {
  for (const auto& name : builtin_molecule_names()) {
    const auto m = builtin_molecule(name);
    for (int l : {0, 1, 5, 10, 30}) {
      const auto e = pekeris_coefficients(m, l);
      CHECK(approx_centrifugal(0.0, e, m.alpha) == doctest::Approx(e.gamma).epsilon(1e-14));
      CHECK(approx_centrifugal(0.0, e, m.alpha) ==
            doctest::Approx(exact_centrifugal(0.0, e.gamma)).epsilon(1e-14));
    }
    const auto s = pekeris_coefficients(m, 0);
    CHECK(approx_centrifugal(0.3, s, m.alpha) == 0.0);
  }
}

TEST_CASE("approximation error is third order near x = 0") {
  // Expanding both sides in x: exact - approx = gamma (-4 - (2 alpha^2 - 9 alpha) / 3) x^3 + O(x^4).
  for (const auto& name : builtin_molecule_names()) {
    const auto m = builtin_molecule(name);
    const auto e = pekeris_coefficients(m, 10);
    const double limit = e.gamma * (-4.0 - (2.0 * m.alpha * m.alpha - 9.0 * m.alpha) / 3.0);
    const auto err = [&](double x) {
      return exact_centrifugal(x, e.gamma) - approx_centrifugal(x, e, m.alpha);
    };
    CAPTURE(name);
    for (double x : {1e-2, 1e-3}) {
      CHECK(err(x) / (x * x * x) == doctest::Approx(limit).epsilon(0.05));
      CHECK(err(-x) / (-x * x * x) == doctest::Approx(limit).epsilon(0.05));
    }
    const double ratio = err(2e-3) / err(1e-3);
    CHECK(ratio == doctest::Approx(8.0).epsilon(0.02));
  }
}

TEST_CASE("effective potential") {
  const auto h2 = builtin_molecule("H2");
  for (double r : {0.4, 0.7416, 1.3, 3.0}) {
    CHECK(effective_potential(r, h2, 0, Mode::exact) ==
          effective_potential(r, h2, 0, Mode::pekeris));
  }
  CHECK(effective_potential(h2.r0, h2, 10, Mode::exact) ==
        doctest::Approx(effective_potential(h2.r0, h2, 10, Mode::pekeris)).epsilon(1e-14));

  const double gamma = pekeris_coefficients(h2, 10).gamma;
  const double r = 1.2 * h2.r0;
  CHECK(effective_potential(r, h2, 10, Mode::exact) ==
        doctest::Approx(morse_potential(0.2, h2) + gamma / 1.44).epsilon(1e-14));
  CHECK(effective_potential_x(0.2, h2, 10, Mode::exact) ==
        doctest::Approx(effective_potential(r, h2, 10, Mode::exact)).epsilon(1e-14));

  CHECK_THROWS_AS(effective_potential(0.0, h2, 5, Mode::exact), std::domain_error);
  CHECK_THROWS_AS(effective_potential(-1.0, h2, 5, Mode::exact), std::domain_error);
  CHECK(std::isfinite(effective_potential(0.0, h2, 5, Mode::pekeris)));
}
