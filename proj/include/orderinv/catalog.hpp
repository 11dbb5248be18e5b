#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "orderinv/group.hpp"

namespace orderinv {

/// One family term: every combination of the listed parameter values,
/// optionally restricted to groups of order <= max_order (0: no extra limit).
struct FamilyRange {
  std::string family;
  std::vector<std::vector<std::uint64_t>> parameters;
  std::uint64_t max_order = 0;
};

struct CatalogSpec {
  std::vector<FamilyRange> families;
  /// Group expressions such as "S3" or "Q8xC3".
  std::vector<std::string> groups;
  /// Cayley-table or permutation JSON files.
  std::vector<std::filesystem::path> ingested;
  std::size_t order_cap = default_order_cap;
  bool paranoid = false;
};

struct CatalogEntry {
  FiniteGroup group;
  std::string family;
  std::optional<SemidirectParams> semidirect;
};

struct CatalogError {
  std::string source;
  std::string kind;
  std::string message;
  friend bool operator==(const CatalogError&, const CatalogError&) = default;
};

struct Catalog {
  std::vector<CatalogEntry> entries;
  /// Ingestion and construction failures; they never stop the other groups.
  std::vector<CatalogError> errors;
};

inline const std::vector<std::string>& known_families() {
  static const std::vector<std::string> names = {
      "cyclic",    "dihedral", "quaternion",  "symmetric",
      "alternating", "elementary", "semidirect", "coprime-products"};
  return names;
}

/// Families up to order 64 (cyclic, dihedral, generalized quaternion,
/// elementary abelian, the inverting semidirect grid, coprime direct
/// products), plus S3, S4, S5, A4 and A5.
CatalogSpec default_catalog_spec();

/// Parses terms separated by ';' or whitespace:
///   default                       the default catalog
///   family:1..12[,15][@64]        one family, parameters per '/'
///   elementary:2,3/2..4           multi-parameter family
///   path/to/group.json            ingest a file
///   S3, Q8xC3, C3:C10, ...        a group expression
/// Throws UnknownFamily / ParseError.
CatalogSpec parse_catalog_spec(std::string_view text);

/// Resolves a spec. Unknown families raise; per-group construction and
/// ingestion failures are collected in Catalog::errors. Labels are unique:
/// a repeated label is skipped.
Catalog build_catalog(const CatalogSpec& spec);

/// "C12", "D3", "Q8", "S4", "A5", "E2^3", "C3:C10", products with 'x'.
CatalogEntry parse_group_expression(std::string_view text, const GroupOptions& options = {});

/// Cayley format {"label", "order", "table"} or permutation format
/// {"label", "degree", "generators"}.
FiniteGroup group_from_json(const nlohmann::json& j, const GroupOptions& options = {});
nlohmann::json group_to_json(const FiniteGroup& g);
FiniteGroup load_group_file(const std::filesystem::path& path, const GroupOptions& options = {});

/// Group expression, or a JSON file when the text names an existing file or
/// ends in ".json".
CatalogEntry resolve_group(std::string_view text, const GroupOptions& options = {});

}  // namespace orderinv
