#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "morse/molecule.hpp"

namespace morse::verify {

struct Check {
  std::string name;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  bool gating = true;  // informational checks never fail a suite
  std::string note;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;

  bool pass() const;
};

/// pekeris, spectrum, norm, icr, oracle, moment.
const std::vector<std::string>& suite_names();

/// Runs one named suite (or every suite for "all"). Throws
/// std::invalid_argument for unknown names.
std::vector<SuiteReport> run(std::string_view suite, const std::vector<MoleculeParams>& molecules);

SuiteReport run_pekeris(const std::vector<MoleculeParams>& molecules);
SuiteReport run_spectrum(const std::vector<MoleculeParams>& molecules);
SuiteReport run_norm(const std::vector<MoleculeParams>& molecules);
SuiteReport run_icr(const std::vector<MoleculeParams>& molecules);
SuiteReport run_oracle(const std::vector<MoleculeParams>& molecules);
SuiteReport run_moment();

void render(std::ostream& os, const SuiteReport& report);

/// The (n, l) grid listed in every published table.
const std::vector<QuantumNumbers>& table_states();

}  // namespace morse::verify
