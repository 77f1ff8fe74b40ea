#include "morse/reference.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>
#include <tuple>

#include "morse/embedded_data.hpp"
#include "morse/errors.hpp"
#include "morse/molecule.hpp"

namespace morse {

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto next = line.find(sep, pos);
    out.push_back(line.substr(pos, next == std::string_view::npos ? next : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view s, const std::string& source, std::size_t line) {
  T out{};
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, out);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(source, line, "invalid number '" + std::string(s) + "'");
  }
  return out;
}

}  // namespace

std::optional<double> ReferenceTable::lookup(int n, int l) const {
  for (const auto& e : entries) {
    if (e.n == n && e.l == l) return e.energy;
  }
  return std::nullopt;
}

std::vector<ReferenceTable> parse_reference_csv(std::string_view text, const std::string& source) {
  std::vector<ReferenceTable> tables;
  std::set<std::tuple<std::string, std::string, int, int>> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool header_seen = false;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;

    if (!header_seen) {
      if (line != "molecule,method,n,l,energy_eV") {
        throw ParseError(source, line_no, "expected header 'molecule,method,n,l,energy_eV'");
      }
      header_seen = true;
      continue;
    }
    const auto fields = split(line, ',');
    if (fields.size() != 5) throw ParseError(source, line_no, "expected 5 columns");

    std::string molecule(fields[0]);
    std::string method(fields[1]);
    const ReferenceEntry entry{parse_number<int>(fields[2], source, line_no),
                               parse_number<int>(fields[3], source, line_no),
                               parse_number<double>(fields[4], source, line_no)};
    if (!(entry.energy < 0.0)) {
      throw ParseError(source, line_no, "bound-state energy must be negative");
    }
    if (!seen.emplace(molecule, method, entry.n, entry.l).second) {
      throw ParseError(source, line_no, "duplicate entry");
    }

    auto it = std::find_if(tables.begin(), tables.end(), [&](const ReferenceTable& t) {
      return t.molecule == molecule && t.method == method;
    });
    if (it == tables.end()) {
      tables.push_back({std::move(molecule), std::move(method), {}});
      it = std::prev(tables.end());
    }
    it->entries.push_back(entry);
  }
  if (!header_seen) throw ParseError(source, line_no, "empty reference file");
  return tables;
}

std::string format_reference_csv(const std::vector<ReferenceTable>& tables) {
  std::ostringstream os;
  os << "molecule,method,n,l,energy_eV\n";
  for (const auto& t : tables) {
    for (const auto& e : t.entries) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g", e.energy);
      os << t.molecule << ',' << t.method << ',' << e.n << ',' << e.l << ',' << buf << '\n';
    }
  }
  return os.str();
}

std::vector<ReferenceTable> builtin_reference_tables() {
  return parse_reference_csv(embedded::kReferenceCsv, "reference_tables.csv");
}

std::vector<ReferenceTable> reference_tables() {
  if (const auto dir = data_dir_override()) {
    const auto path = *dir / "reference_tables.csv";
    if (std::filesystem::exists(path)) {
      std::ifstream in(path);
      std::ostringstream buffer;
      buffer << in.rdbuf();
      return parse_reference_csv(buffer.str(), path.string());
    }
  }
  return builtin_reference_tables();
}

std::optional<double> lookup_reference(const std::vector<ReferenceTable>& tables,
                                       std::string_view molecule, std::string_view method, int n,
                                       int l) {
  for (const auto& t : tables) {
    if (t.molecule == molecule && t.method == method) return t.lookup(n, l);
  }
  return std::nullopt;
}

}  // namespace morse
