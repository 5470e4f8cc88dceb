#include "vknot/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "vknot/error.hpp"

namespace vknot {

namespace {

const std::map<std::string, std::string, std::less<>>& data_files() {
  static const std::map<std::string, std::string, std::less<>> files{
#include "catalog_data.inc"
  };
  return files;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

}  // namespace

std::optional<std::string> CatalogEntry::expect(std::string_view key) const {
  for (const auto& [k, v] : expected)
    if (k == key) return v;
  return std::nullopt;
}

std::vector<CatalogEntry> parse_catalog(std::string_view text,
                                        const std::function<std::string(std::string_view)>& read_file) {
  std::vector<CatalogEntry> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (trim(line).empty()) continue;
    const auto fields = split(line, '|');
    const auto colon = fields[0].find(':');
    if (colon == std::string::npos || colon == 0 || fields.size() > 3)
      throw Error(ErrorCode::SyntaxError, "bad catalog line: " + line);
    CatalogEntry e;
    e.name = trim(std::string_view(fields[0]).substr(0, colon));
    e.encoding = trim(std::string_view(fields[0]).substr(colon + 1));
    if (fields.size() > 1) e.note = fields[1];
    if (fields.size() > 2)
      for (const auto& kv : split(fields[2], ';')) {
        if (kv.empty()) continue;
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw Error(ErrorCode::SyntaxError, "bad expectation: " + kv);
        e.expected.emplace_back(trim(kv.substr(0, eq)), trim(kv.substr(eq + 1)));
      }
    if (e.encoding.starts_with("pd:")) e.diagram = parse_pd(read_file(e.encoding.substr(3)));
    else e.code = parse_gauss(e.encoding);
    for (const auto& prev : out)
      if (prev.name == e.name) throw Error(ErrorCode::InvalidInput, "duplicate catalog name: " + e.name);
    out.push_back(std::move(e));
  }
  return out;
}

const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    const auto& files = data_files();
    const auto it = files.find("catalog.txt");
    if (it == files.end()) return std::vector<CatalogEntry>{};
    return parse_catalog(it->second, [&](std::string_view name) {
      const auto f = files.find(name);
      if (f == files.end()) throw Error(ErrorCode::InvalidInput, "missing data file: " + std::string(name));
      return f->second;
    });
  }();
  return entries;
}

const CatalogEntry& catalog_entry(std::string_view name) {
  for (const auto& e : builtin_catalog())
    if (e.name == name) return e;
  throw Error(ErrorCode::UnknownCatalogName, std::string(name));
}

GaussCode resolve_code(std::string_view name_or_code) {
  for (const auto& e : builtin_catalog()) {
    if (e.name != name_or_code) continue;
    if (!e.code) throw Error(ErrorCode::InvalidInput, e.name + " is stored as a planar diagram");
    return *e.code;
  }
  try {
    return parse_gauss(name_or_code);
  } catch (const Error& e) {
    // Identifier-like text that is not a code was meant as a name.
    const bool identifier = !name_or_code.empty() && std::isalpha(static_cast<unsigned char>(name_or_code[0])) &&
                            std::all_of(name_or_code.begin(), name_or_code.end(), [](char c) {
                              return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
                            });
    if (e.code() == ErrorCode::SyntaxError && identifier)
      throw Error(ErrorCode::UnknownCatalogName, std::string(name_or_code));
    throw;
  }
}

}  // namespace vknot
