#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace morse {

/// Physical constants of one diatomic species.
///
/// `alpha` is the dimensionless width a * r0 of the Morse well, so the
/// potential in the reduced coordinate x = (r - r0) / r0 reads
/// V0 (exp(-2 alpha x) - 2 exp(-alpha x)).
struct MoleculeParams {
  std::string name;
  double V0 = 0.0;            // eV
  double r0 = 0.0;            // angstrom
  double alpha = 0.0;         // dimensionless
  double reduced_mass = 0.0;  // amu

  /// 2 m r0^2 / hbar^2 in 1/eV.
  double lambda0_sq() const;
  /// hbar^2 / (2 m r0^2) in eV.
  double rotational_unit() const { return 1.0 / lambda0_sq(); }

  bool operator==(const MoleculeParams&) const = default;
};

struct QuantumNumbers {
  int n = 0;  // vibrational
  int l = 0;  // rotational

  bool operator==(const QuantumNumbers&) const = default;
};

/// Throws ValidationError naming the first offending field.
void validate(const MoleculeParams& params);

/// Parses the line-oriented `key = value` format. `source` labels errors.
MoleculeParams parse_molecule(std::string_view text, const std::string& source = "<string>");

/// Renders the same format with round-trip precision.
std::string format_molecule(const MoleculeParams& params);

MoleculeParams load_molecule(const std::filesystem::path& path);

/// Names of the shipped molecules, in table order (H2, CO, HCl, LiH).
const std::vector<std::string>& builtin_molecule_names();

/// Shipped parameter set; throws std::out_of_range for unknown names.
MoleculeParams builtin_molecule(std::string_view name);

/// Directory named by MORSE_DATA_DIR, if set and non-empty.
std::optional<std::filesystem::path> data_dir_override();

/// Looks up `<MORSE_DATA_DIR>/<name>.params` when the override is set,
/// otherwise the shipped parameters.
MoleculeParams find_molecule(std::string_view name);

}  // namespace morse
