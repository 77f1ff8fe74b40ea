#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "morse/errors.hpp"
#include "morse/molecule.hpp"
#include "morse/oracle.hpp"
#include "morse/spectrum.hpp"

using namespace morse;
using namespace morse::oracle;

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(validate(GridSpec{0.1, 12.0, 8000}), std::invalid_argument);
  CHECK_THROWS_AS(validate(GridSpec{-0.8, -0.1, 8000}), std::invalid_argument);
  CHECK_THROWS_AS(validate(GridSpec{-0.8, 12.0, 999}), std::invalid_argument);
  CHECK_NOTHROW(validate(GridSpec{}));
}

TEST_CASE("H2 ground state against the closed form and the published value") {
  const auto h2 = builtin_molecule("H2");
  const auto e = eigenvalues_pekeris(h2, 0, 1);
  REQUIRE(e.size() == 1);
  const double closed = spectrum::energy(h2, 0, 0);
  CHECK(std::abs(e[0] - closed) <= 1e-6 * std::abs(closed));
  CHECK(std::abs(e[0] - -4.47600) <= 1e-4);
}

TEST_CASE("artificial s-wave well reproduces the Morse formula") {
  const MoleculeParams well{"well", 1.0, 1.0, 2.0, 1.0};
  const int count = spectrum::max_bound_n(well, 0);
  REQUIRE(count >= 3);
  const auto e = eigenvalues_pekeris(well, 0, count - 1);
  const double s0 = well.alpha / std::sqrt(well.lambda0_sq() * well.V0);
  for (int n = 0; n < count - 1; ++n) {
    const double s = s0 * (n + 0.5);
    const double morse = -well.V0 * (1.0 - s) * (1.0 - s);
    CAPTURE(n);
    CHECK(std::abs(e[n] - morse) <= 1e-6 * std::abs(morse));
  }
}

TEST_CASE("all table states") {
  for (const auto& name : builtin_molecule_names()) {
    const auto m = builtin_molecule(name);
    for (int l : {0, 5, 10}) {
      const auto e = eigenvalues_pekeris(m, l, 8);
      for (int n : {0, 5, 7}) {
        const double closed = spectrum::energy(m, n, l);
        CAPTURE(name);
        CAPTURE(n);
        CAPTURE(l);
        CHECK(std::abs(e[n] - closed) <= 1e-6 * std::abs(closed));
      }
    }
  }
}

TEST_CASE("second-order convergence") {
  const auto h2 = builtin_molecule("H2");
  const double exact = spectrum::energy(h2, 0, 0);
  const auto at = [&](int points) {
    return fd_eigenvalues(h2, 0, 1, GridSpec{-0.8, 12.0, points}, pekeris::Mode::pekeris)[0];
  };
  const double e1 = std::abs(at(2000) - exact);
  const double e2 = std::abs(at(3999) - exact);
  CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("default grid is long enough") {
  for (const auto& name : builtin_molecule_names()) {
    CAPTURE(name);
    CHECK(truncation_shift(builtin_molecule(name), 10, 8, GridSpec{}) <= 1e-9);
  }
  // A box cut off just past the well squeezes the upper levels.
  CHECK(truncation_shift(builtin_molecule("H2"), 0, 8, GridSpec{-0.8, 1.0, 2000}) > 1e-4);
}

TEST_CASE("node count of discrete eigenvectors") {
  const auto co = builtin_molecule("CO");
  for (int n = 0; n < 6; ++n) CHECK(eigenvector_nodes(co, 5, n, GridSpec{}) == n);
}

TEST_CASE("exact barrier") {
  const auto h2 = builtin_molecule("H2");
  const auto pek = eigenvalues_pekeris(h2, 0, 3);
  const auto exact = eigenvalues_exact(h2, 0, 3);
  for (int n = 0; n < 3; ++n) CHECK(std::abs(pek[n] - exact[n]) <= 1e-9);

  const double gap = eigenvalues_exact(h2, 10, 1)[0] - eigenvalues_pekeris(h2, 10, 1)[0];
  CHECK(std::abs(gap) >= 1e-4);
  CHECK(std::abs(gap) <= 1e-1);

  CHECK(eigenvalues_exact(h2, 3, 0).empty());
  CHECK_THROWS_AS(eigenvalues_exact(h2, 0, 1, RadialGridSpec{0.0, 9.0, 8000}), std::invalid_argument);
  CHECK_THROWS_AS(eigenvalues_exact(h2, 0, 1, RadialGridSpec{1.0, 9.0, 8000}), std::invalid_argument);
}

TEST_CASE("errors") {
  const auto h2 = builtin_molecule("H2");
  const int count = spectrum::max_bound_n(h2, 0);
  CHECK_THROWS_AS(eigenvalues_pekeris(h2, 0, count + 1), std::invalid_argument);
  // Far too coarse for the narrow CO well: the two resolutions disagree.
  CHECK_THROWS_AS(eigenvalues_pekeris(builtin_molecule("CO"), 0, 1, GridSpec{-0.8, 60.0, 1000}),
                  UnconvergedError);
}
