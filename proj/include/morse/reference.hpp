#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace morse {

struct ReferenceEntry {
  int n = 0;
  int l = 0;
  double energy = 0.0;  // eV
};

/// Published energies for one (molecule, method) column.
struct ReferenceTable {
  std::string molecule;
  std::string method;
  std::vector<ReferenceEntry> entries;

  std::optional<double> lookup(int n, int l) const;
};

/// Method label of the closed-form column that computed energies are compared with.
inline constexpr std::string_view kPresentMethod = "ICR";

/// Parses CSV with header `molecule,method,n,l,energy_eV`. Rejects duplicate
/// keys and non-negative energies.
std::vector<ReferenceTable> parse_reference_csv(std::string_view text,
                                                const std::string& source = "<string>");

std::string format_reference_csv(const std::vector<ReferenceTable>& tables);

/// The four published tables (H2, CO, HCl, LiH), every method column, as
/// compiled into the library.
std::vector<ReferenceTable> builtin_reference_tables();

/// `<MORSE_DATA_DIR>/reference_tables.csv` when the override is set and the
/// file exists, otherwise the compiled-in tables.
std::vector<ReferenceTable> reference_tables();

std::optional<double> lookup_reference(const std::vector<ReferenceTable>& tables,
                                       std::string_view molecule, std::string_view method, int n,
                                       int l);

}  // namespace morse
