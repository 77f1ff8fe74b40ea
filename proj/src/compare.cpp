#include "morse/compare.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "morse/errors.hpp"
#include "morse/spectrum.hpp"

namespace morse {

double table_tolerance(int table_id) {
  table_molecule(table_id);
  return table_id == 1 ? 1e-4 : 1e-3;
}

std::string table_molecule(int table_id) {
  switch (table_id) {
    case 1: return "H2";
    case 2: return "CO";
    case 3: return "HCl";
    case 4: return "LiH";
    default: throw std::out_of_range("table id must be 1..4, got " + std::to_string(table_id));
  }
}

ComparisonReport compare_table(int table_id, const MoleculeParams& params,
                               const std::vector<ReferenceTable>& tables) {
  ComparisonReport report;
  report.molecule = table_molecule(table_id);
  report.method = std::string(kPresentMethod);
  report.tolerance = table_tolerance(table_id);

  const ReferenceTable* column = nullptr;
  for (const auto& t : tables) {
    if (t.molecule == report.molecule && t.method == kPresentMethod) column = &t;
  }
  if (column == nullptr || column->entries.empty()) {
    throw std::runtime_error("no reference column for " + report.molecule);
  }

  for (const auto& e : column->entries) {
    ComparisonRow row{e.n, e.l, std::numeric_limits<double>::quiet_NaN(), e.energy,
                      std::numeric_limits<double>::infinity()};
    try {
      row.computed = spectrum::energy(params, e.n, e.l);
      row.abs_diff = std::abs(row.computed - row.reference);
    } catch (const std::domain_error&) {
      // unbound under these parameters; leave the row failing
    }
    report.max_abs_diff = std::max(report.max_abs_diff, row.abs_diff);
    report.rows.push_back(row);
  }
  report.pass = report.max_abs_diff <= report.tolerance;
  return report;
}

void render(std::ostream& os, const ComparisonReport& report) {
  char buf[160];
  os << "Energy eigenvalues (eV) for " << report.molecule << ": closed form vs "
     << report.method << '\n';
  std::snprintf(buf, sizeof buf, "%3s %4s %12s %12s %10s\n", "n", "l", "computed", "reference",
                "|diff|");
  os << buf;
  int last_n = -1;
  for (const auto& r : report.rows) {
    const std::string n = r.n == last_n ? "" : std::to_string(r.n);
    last_n = r.n;
    if (std::isnan(r.computed)) {
      std::snprintf(buf, sizeof buf, "%3s %4d %12s %12.5f %10s\n", n.c_str(), r.l, "unbound",
                    r.reference, "-");
    } else {
      std::snprintf(buf, sizeof buf, "%3s %4d %12.5f %12.5f %10.2e\n", n.c_str(), r.l,
                    r.computed, r.reference, r.abs_diff);
    }
    os << buf;
  }
  std::snprintf(buf, sizeof buf, "max |diff| = %.2e eV, tolerance %.0e eV: %s\n",
                report.max_abs_diff, report.tolerance, report.pass ? "PASS" : "FAIL");
  os << buf;
}

}  // namespace morse
