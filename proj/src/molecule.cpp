#include "morse/molecule.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "morse/embedded_data.hpp"
#include "morse/errors.hpp"
#include "morse/units.hpp"

namespace morse {

namespace {

constexpr std::array<std::string_view, 5> kKeys = {"name", "V0_eV", "r0_angstrom", "alpha",
                                                     "reduced_mass_amu"};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_real(std::string_view value, const std::string& source, std::size_t line,
                  std::string_view key) {
  // std::from_chars for double is available in libstdc++ 11.
  double out = 0.0;
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc{} || ptr != end || !std::isfinite(out)) {
    throw ParseError(source, line,
                     "invalid number '" + std::string(value) + "' for " + std::string(key));
  }
  return out;
}

}  // namespace

double MoleculeParams::lambda0_sq() const {
  const double mass = reduced_mass * units::amu_eV;
  return 2.0 * mass * r0 * r0 / (units::hbar_c_eV_angstrom * units::hbar_c_eV_angstrom);
}

void validate(const MoleculeParams& params) {
  if (params.name.empty()) throw ValidationError("name", "must not be empty");
  const auto positive = [](const char* field, double v) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw ValidationError(field, "must be positive and finite, got " + std::to_string(v));
    }
  };
  positive("V0_eV", params.V0);
  positive("r0_angstrom", params.r0);
  positive("alpha", params.alpha);
  positive("reduced_mass_amu", params.reduced_mass);
  const double l0 = params.lambda0_sq();
  if (!(l0 > 0.0) || !std::isfinite(l0)) {
    throw ValidationError("reduced_mass_amu", "Lambda0 is not finite and positive");
  }
}

MoleculeParams parse_molecule(std::string_view text, const std::string& source) {
  std::map<std::string_view, std::pair<std::string_view, std::size_t>> values;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(source, line_no, "expected 'key = value'");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    bool known = false;
    for (auto k : kKeys) known = known || k == key;
    if (!known) throw ParseError(source, line_no, "unknown key '" + std::string(key) + "'");
    if (value.empty()) throw ParseError(source, line_no, "missing value for " + std::string(key));
    if (values.contains(key)) {
      throw ParseError(source, line_no, "duplicate key '" + std::string(key) + "'");
    }
    values[key] = {value, line_no};
  }

  for (auto k : kKeys) {
    if (!values.contains(k)) {
      throw ParseError(source, line_no, "missing required key '" + std::string(k) + "'");
    }
  }
  const auto real = [&](std::string_view key) {
    const auto& [value, line] = values.at(key);
    return parse_real(value, source, line, key);
  };

  MoleculeParams params;
  params.name = std::string(values.at("name").first);
  params.V0 = real("V0_eV");
  params.r0 = real("r0_angstrom");
  params.alpha = real("alpha");
  params.reduced_mass = real("reduced_mass_amu");
  validate(params);
  return params;
}

std::string format_molecule(const MoleculeParams& params) {
  std::ostringstream os;
  const auto line = [&](std::string_view key, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    os << key << " = " << buf << '\n';
  };
  os << "name = " << params.name << '\n';
  line("V0_eV", params.V0);
  line("r0_angstrom", params.r0);
  line("alpha", params.alpha);
  line("reduced_mass_amu", params.reduced_mass);
  return os.str();
}

MoleculeParams load_molecule(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open molecule file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_molecule(buffer.str(), path.string());
}

const std::vector<std::string>& builtin_molecule_names() {
  static const std::vector<std::string> names = {"H2", "CO", "HCl", "LiH"};
  return names;
}

MoleculeParams builtin_molecule(std::string_view name) {
  if (name == "H2") return parse_molecule(embedded::kParamsH2, "H2.params");
  if (name == "CO") return parse_molecule(embedded::kParamsCO, "CO.params");
  if (name == "HCl") return parse_molecule(embedded::kParamsHCl, "HCl.params");
  if (name == "LiH") return parse_molecule(embedded::kParamsLiH, "LiH.params");
  throw std::out_of_range("unknown molecule '" + std::string(name) + "'");
}

std::optional<std::filesystem::path> data_dir_override() {
  const char* dir = std::getenv("MORSE_DATA_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return std::filesystem::path(dir);
}

MoleculeParams find_molecule(std::string_view name) {
  if (const auto dir = data_dir_override()) {
    const auto path = *dir / (std::string(name) + ".params");
    if (std::filesystem::exists(path)) return load_molecule(path);
  }
  return builtin_molecule(name);
}

}  // namespace morse
