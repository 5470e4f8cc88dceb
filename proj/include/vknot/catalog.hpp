#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vknot/gauss_code.hpp"
#include "vknot/planar_diagram.hpp"

namespace vknot {

struct CatalogEntry {
  std::string name;
  std::string encoding;  // Gauss code text, or pd:<file>
  std::optional<GaussCode> code;
  std::optional<PlanarDiagram> diagram;
  std::string note;
  std::vector<std::pair<std::string, std::string>> expected;

  /// Expected value for `key`, if recorded.
  std::optional<std::string> expect(std::string_view key) const;
};

/// Lines `name: encoding | note | key=value; ...`, `#` comments; the note
/// and expectation fields are optional. Diagram
/// files named by `pd:<file>` are fetched through `read_file`. Throws
/// SyntaxError on malformed lines, InvalidInput on duplicate names, and the
/// parser's errors on bad encodings.
std::vector<CatalogEntry> parse_catalog(std::string_view text,
                                        const std::function<std::string(std::string_view)>& read_file);

/// Catalog compiled into the library from the data directory.
const std::vector<CatalogEntry>& builtin_catalog();

/// Throws UnknownCatalogName.
const CatalogEntry& catalog_entry(std::string_view name);

/// A catalog name with a Gauss code, or else Gauss code text. Throws
/// InvalidInput when the name refers to a diagram-only entry.
GaussCode resolve_code(std::string_view name_or_code);

}  // namespace vknot
