#include <doctest.h>

#include <cmath>

#include "morse/errors.hpp"
#include "morse/molecule.hpp"
#include "morse/reference.hpp"
#include "morse/spectrum.hpp"

using namespace morse;
using namespace morse::spectrum;

TEST_CASE("s-wave parameters") {
  const auto h2 = builtin_molecule("H2");
  const auto sp = spectral_setup(h2, 0);
  const double L2 = h2.lambda0_sq();
  CHECK(sp.gamma == 0.0);
  CHECK(sp.beta2_sq == doctest::Approx(L2 * h2.V0).epsilon(1e-15));
  CHECK(sp.beta1_sq == doctest::Approx(2.0 * L2 * h2.V0).epsilon(1e-15));
  CHECK(sp.beta1_sq / sp.beta2() == doctest::Approx(2.0 * std::sqrt(L2 * h2.V0)).epsilon(1e-15));
  CHECK(sp.lambda() == doctest::Approx(2.0 * sp.beta2() / h2.alpha).epsilon(1e-15));
  for (int n = 0; n < 5; ++n) {
    CHECK(epsilon_of_n(sp, n) ==
          doctest::Approx(std::sqrt(L2 * h2.V0) - h2.alpha * (n + 0.5)).epsilon(1e-14));
  }
}

TEST_CASE("rotating H2 stays bound") {
  const auto sp = spectral_setup(builtin_molecule("H2"), 10);
  CHECK(sp.beta1_sq > 0.0);
  CHECK(sp.beta2_sq > 0.0);
  CHECK(std::isfinite(sp.beta1_sq));
}

TEST_CASE("strong barrier has no bound spectrum") {
  // Light fictitious particle: gamma a1 dwarfs 2 V0.
  const MoleculeParams m{"light", 1.0, 1.0, 3.0, 1e-4};
  CHECK_THROWS_AS(spectral_setup(m, 10), NoBoundSpectrumError);
  CHECK_THROWS_AS(energy(m, 0, 10), NoBoundSpectrumError);
  CHECK_THROWS_AS(max_bound_n(m, 10), NoBoundSpectrumError);
  CHECK_NOTHROW(spectral_setup(m, 0));
}

TEST_CASE("epsilon at the dissociation edge") {
  SpectralParams sp;
  sp.alpha = 1.0;
  sp.beta1_sq = 5.0;
  sp.beta2_sq = 1.0;
  sp.lambda0_sq = 1.0;
  // beta1^2 / (2 beta2) = 2.5 = alpha (n + 1/2) at n = 2.
  CHECK(epsilon_of_n(sp, 1) == doctest::Approx(1.0));
  CHECK_THROWS_AS(epsilon_of_n(sp, 2), NotBoundError);
  CHECK_THROWS_AS(epsilon_of_n(sp, 3), NotBoundError);
  CHECK(max_bound_n(sp) == 2);

  sp.beta1_sq = 0.8;  // ceiling 0.4: not even n = 0
  CHECK(max_bound_n(sp) == 0);
  CHECK_THROWS_AS(epsilon_of_n(sp, 0), NotBoundError);
}

TEST_CASE("published levels") {
  CHECK(std::abs(energy(builtin_molecule("H2"), 0, 0) - -4.47600) <= 1e-4);
  CHECK(std::abs(energy(builtin_molecule("CO"), 5, 10) - -9.76967) <= 1e-3);
  CHECK(std::abs(energy(builtin_molecule("HCl"), 7, 5) - -2.22619) <= 1e-3);

  const auto tables = builtin_reference_tables();
  for (const auto& name : builtin_molecule_names()) {
    const auto m = builtin_molecule(name);
    const double tol = name == "H2" ? 1e-4 : 1e-3;
    for (int n : {0, 5, 7}) {
      for (int l : {0, 5, 10}) {
        const auto ref = lookup_reference(tables, name, kPresentMethod, n, l);
        REQUIRE(ref.has_value());
        CAPTURE(name);
        CAPTURE(n);
        CAPTURE(l);
        CHECK(std::abs(energy(m, n, l) - *ref) <= tol);
      }
    }
  }
}

TEST_CASE("level count") {
  CHECK(max_bound_n(builtin_molecule("H2"), 0) >= 8);
  CHECK(max_bound_n(builtin_molecule("CO"), 10) >= 8);
  for (const auto& name : builtin_molecule_names()) {
    const auto m = builtin_molecule(name);
    for (int l = 0; l <= 40; l += 5) {
      const auto sp = spectral_setup(m, l);
      const int count = max_bound_n(sp);
      REQUIRE(count > 0);
      CHECK(epsilon_of_n(sp, count - 1) > 0.0);
      CHECK_THROWS_AS(epsilon_of_n(sp, count), NotBoundError);
    }
  }
}

TEST_CASE("invariants over every bound level") {
  for (const auto& name : builtin_molecule_names()) {
    const auto m = builtin_molecule(name);
    for (int l = 0; l <= 30; ++l) {
      const auto sp = spectral_setup(m, l);
      const int count = max_bound_n(sp);
      double previous = -INFINITY;
      for (int n = 0; n < count; ++n) {
        CAPTURE(name);
        CAPTURE(n);
        CAPTURE(l);
        const double e = energy(sp, n);
        const auto st = state_params(sp, n);

        // Two algebraically equivalent routes to the same level.
        CHECK(std::abs(e - energy_from_epsilon(sp, st.epsilon)) <= 1e-12 * std::abs(e));
        // Quantization condition p = -n.
        CHECK(std::abs(st.p + n) <= 1e-9);
        CHECK(std::abs(p_of_epsilon(sp, st.epsilon) + n) <= 1e-9);
        CHECK(st.q == doctest::Approx(q_of_epsilon(sp, st.epsilon)).epsilon(1e-15));
        CHECK(st.kappa == doctest::Approx(st.epsilon / sp.alpha).epsilon(1e-15));
        // Strictly rising in n and below the dissociation limit.
        CHECK(e > previous);
        CHECK(e < sp.gamma * sp.a0);
        previous = e;

        if (l == 0) {
          // Pure Morse: E = -V0 (1 - alpha (n + 1/2) / (Lambda0 sqrt V0))^2.
          const double s = m.alpha * (n + 0.5) / std::sqrt(m.lambda0_sq() * m.V0);
          const double morse = -m.V0 * (1.0 - s) * (1.0 - s);
          CHECK(std::abs(e - morse) <= 1e-12 * std::abs(morse));
        }
      }
    }
  }
}

TEST_CASE("levels rise with l at fixed n") {
  for (const auto& name : builtin_molecule_names()) {
    const auto m = builtin_molecule(name);
    for (int n = 0; n <= 7; ++n) {
      for (int l = 0; l < 20; ++l) CHECK(energy(m, n, l) < energy(m, n, l + 1));
    }
  }
}

TEST_CASE("negative quantum numbers are rejected") {
  const auto h2 = builtin_molecule("H2");
  CHECK_THROWS(energy(h2, -1, 0));
  CHECK_THROWS(energy(h2, 0, -1));
}
