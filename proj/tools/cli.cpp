#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "morse/compare.hpp"
#include "morse/errors.hpp"
#include "morse/molecule.hpp"
#include "morse/reference.hpp"
#include "morse/spectrum.hpp"
#include "morse/verify.hpp"
#include "morse/wavefunction.hpp"

namespace morse::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

int parse_int(std::string_view s) {
  int v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc{} || ptr != end || v < 0) {
    throw std::invalid_argument("invalid index '" + std::string(s) + "'");
  }
  return v;
}

struct MoleculeArgs {
  std::string positional;
  std::string option;
  std::string params_file;

  void attach(CLI::App* cmd, bool with_positional) {
    if (with_positional) cmd->add_option("species", positional, "Molecule name (H2, CO, HCl, LiH)");
    cmd->add_option("-m,--molecule", option, "Molecule name (H2, CO, HCl, LiH)");
    cmd->add_option("--params", params_file, "Molecule parameter file overriding the built-in set");
  }

  std::string name() const { return option.empty() ? positional : option; }

  MoleculeParams resolve(const std::string& fallback = {}) const {
    if (!params_file.empty()) return load_molecule(params_file);
    const auto n = name().empty() ? fallback : name();
    if (n.empty()) throw UsageError("a molecule is required (-m/--molecule or --params)");
    try {
      return find_molecule(n);
    } catch (const std::out_of_range&) {
      throw UsageError("unknown molecule '" + n + "'");
    }
  }
};

void print_spectrum_table(std::ostream& out, const MoleculeParams& m, const std::vector<int>& ns,
                          const std::vector<int>& ls) {
  char buf[96];
  out << "Energy eigenvalues (eV) for " << m.name << '\n';
  std::snprintf(buf, sizeof buf, "%3s %4s %12s\n", "n", "l", "E");
  out << buf;
  for (int n : ns) {
    bool first = true;
    for (int l : ls) {
      const std::string n_col = first ? std::to_string(n) : "";
      first = false;
      try {
        std::snprintf(buf, sizeof buf, "%3s %4d %12.5f\n", n_col.c_str(), l,
                      spectrum::energy(m, n, l));
      } catch (const std::domain_error&) {
        std::snprintf(buf, sizeof buf, "%3s %4d %12s\n", n_col.c_str(), l, "unbound");
      }
      out << buf;
    }
  }
}

void print_spectrum_csv(std::ostream& out, const MoleculeParams& m, const std::vector<int>& ns,
                        const std::vector<int>& ls) {
  out << "molecule,n,l,energy_eV\n";
  char buf[64];
  for (int n : ns) {
    for (int l : ls) {
      out << m.name << ',' << n << ',' << l << ',';
      try {
        std::snprintf(buf, sizeof buf, "%.17g", spectrum::energy(m, n, l));
        out << buf << '\n';
      } catch (const std::domain_error&) {
        out << "unbound\n";
      }
    }
  }
}

}  // namespace

std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) throw std::invalid_argument("empty entry in list '" + text + "'");
    const auto dash = item.find('-', 1);
    if (dash == std::string::npos) {
      out.push_back(parse_int(item));
    } else {
      const int lo = parse_int(std::string_view(item).substr(0, dash));
      const int hi = parse_int(std::string_view(item).substr(dash + 1));
      if (hi < lo) throw std::invalid_argument("descending range '" + item + "'");
      for (int i = lo; i <= hi; ++i) out.push_back(i);
    }
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bound states of the rotating Morse potential in the Pekeris approximation"};
  app.name("morse");
  app.require_subcommand(1);

  MoleculeArgs spec_mol;
  std::string n_list = "0,5,7";
  std::string l_list = "0,5,10";
  std::string format = "table";
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Closed-form energy levels");
  spec_mol.attach(spectrum_cmd, true);
  spectrum_cmd->add_option("--n", n_list, "Vibrational levels, e.g. 0,5,7 or 0-7")
      ->capture_default_str();
  spectrum_cmd->add_option("--l", l_list, "Rotational levels, e.g. 0,5,10")->capture_default_str();
  spectrum_cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"table", "csv"}))
      ->capture_default_str();

  MoleculeArgs wf_mol;
  int wf_n = 0;
  int wf_l = 0;
  double r_min = 0.0;
  double r_max = 0.0;
  int points = 2000;
  std::string out_path;
  auto* wf_cmd = app.add_subcommand("wavefunction", "Export a normalized radial wavefunction as CSV");
  wf_mol.attach(wf_cmd, true);
  wf_cmd->add_option("--n", wf_n, "Vibrational quantum number")->check(CLI::NonNegativeNumber);
  wf_cmd->add_option("--l", wf_l, "Rotational quantum number")->check(CLI::NonNegativeNumber);
  wf_cmd->add_option("--r-min", r_min, "Grid start in angstrom (default 0.3 r0)");
  wf_cmd->add_option("--r-max", r_max, "Grid end in angstrom (default 5 r0)");
  wf_cmd->add_option("--points", points, "Number of grid points")->check(CLI::PositiveNumber);
  wf_cmd->add_option("-o,--out", out_path, "Output CSV path (stdout when omitted)");

  MoleculeArgs cmp_mol;
  int table_id = 0;
  auto* cmp_cmd = app.add_subcommand("compare", "Compare closed-form energies with a published table");
  cmp_cmd->add_option("table", table_id, "Table id 1..4 (H2, CO, HCl, LiH)")->required();
  cmp_mol.attach(cmp_cmd, false);

  MoleculeArgs ver_mol;
  std::string suite = "all";
  auto* ver_cmd = app.add_subcommand("verify", "Run numerical verification suites");
  ver_cmd->add_option("suite", suite, "all | pekeris | spectrum | norm | icr | oracle | moment")
      ->check(CLI::IsMember({"all", "pekeris", "spectrum", "norm", "icr", "oracle", "moment"}))
      ->capture_default_str();
  ver_cmd->add_option("--params", ver_mol.params_file, "Verify a single parameter file instead");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*spectrum_cmd) {
      std::vector<int> ns;
      std::vector<int> ls;
      try {
        ns = parse_index_list(n_list);
        ls = parse_index_list(l_list);
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--n/--l: ") + e.what());
      }
      const auto m = spec_mol.resolve();
      if (format == "csv") {
        print_spectrum_csv(out, m, ns, ls);
      } else {
        print_spectrum_table(out, m, ns, ls);
      }
      return kExitPass;
    }

    if (*wf_cmd) {
      const auto m = wf_mol.resolve();
      std::vector<double> grid;
      if (r_min == 0.0 && r_max == 0.0 && points == 2000) {
        grid = wavefunction::default_grid(m.r0);
      } else {
        const double lo = r_min > 0.0 ? r_min : 0.3 * m.r0;
        const double hi = r_max > 0.0 ? r_max : 5.0 * m.r0;
        if (!(hi > lo) || points < 2) throw UsageError("grid needs r-max > r-min and points >= 2");
        grid.resize(points);
        for (int i = 0; i < points; ++i) grid[i] = lo + (hi - lo) * i / (points - 1);
      }
      const auto samples = wavefunction::radial_wavefunction(m, wf_n, wf_l, grid);
      if (out_path.empty()) {
        wavefunction::write_csv(out, samples);
      } else {
        wavefunction::write_csv_file(out_path, samples);
        char buf[160];
        std::snprintf(buf, sizeof buf, "wrote %zu rows to %s (norm %.10f)\n", samples.grid.size(),
                      out_path.c_str(), samples.norm_estimate);
        err << buf;
      }
      return kExitPass;
    }

    if (*cmp_cmd) {
      if (table_id < 1 || table_id > kTableCount) {
        throw UsageError("table id must be 1.." + std::to_string(kTableCount));
      }
      const auto m = cmp_mol.resolve(table_molecule(table_id));
      const auto report = compare_table(table_id, m, reference_tables());
      render(out, report);
      return report.pass ? kExitPass : kExitFail;
    }

    if (*ver_cmd) {
      std::vector<MoleculeParams> molecules;
      if (!ver_mol.params_file.empty()) {
        molecules.push_back(load_molecule(ver_mol.params_file));
      } else {
        for (const auto& name : builtin_molecule_names()) molecules.push_back(find_molecule(name));
      }
      bool pass = true;
      for (const auto& report : verify::run(suite, molecules)) {
        verify::render(out, report);
        pass = pass && report.pass();
      }
      out << "overall: " << (pass ? "PASS" : "FAIL") << '\n';
      return pass ? kExitPass : kExitFail;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace morse::cli
