#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "orderinv/catalog.hpp"
#include "orderinv/matcher.hpp"
#include "orderinv/numtheory.hpp"
#include "orderinv/verifier.hpp"

namespace orderinv {

inline constexpr int report_schema_version = 1;
std::string tool_version();

/// R_G(r,s) and T_G(r,s) at one grid point.
struct GridValue {
  ExactScalar r;
  ExactScalar s;
  ExactScalar R;
  ExactScalar T;
  friend bool operator==(const GridValue&, const GridValue&) = default;
};

struct GroupRecord {
  std::string label;
  std::uint64_t order = 0;
  std::string family;
  std::map<std::uint64_t, std::uint64_t> profile;
  /// B(m) for every divisor m of the order.
  std::map<std::uint64_t, std::uint64_t> solutions;
  bool cyclic = false;
  bool nilpotent = false;
  bool solvable = false;
  std::uint64_t cyclic_subgroups = 0;
  FactoredInteger order_product;
  std::vector<GridValue> values;
  std::vector<TheoremVerdict> verdicts;
  /// Requested claims whose hypotheses this group does not meet.
  std::vector<std::string> not_applicable;
  std::optional<DivisibilityMatching> matching;
  bool matching_verified = false;
  /// Failures while analysing this group; the other groups are unaffected.
  std::vector<std::string> errors;

  friend bool operator==(const GroupRecord&, const GroupRecord&) = default;
};

struct ReportSummary {
  std::uint64_t groups = 0;
  std::uint64_t verdicts = 0;
  std::uint64_t consistent = 0;
  std::uint64_t inconsistent = 0;
  std::uint64_t approximate = 0;
  std::uint64_t matchings_found = 0;
  /// Inconsistent exact verdicts, matching violations on solvable groups,
  /// and per-group errors, as "label: what".
  std::vector<std::string> anomalies;
  /// Matching violations on non-solvable groups and T_G(1,1) = 0 on
  /// non-nilpotent groups.
  std::vector<std::string> conjecture_events;
  std::uint64_t catalog_errors = 0;
  int exit_status = 0;

  friend bool operator==(const ReportSummary&, const ReportSummary&) = default;
};

struct Report {
  int schema_version = report_schema_version;
  std::string tool_version;
  std::vector<std::string> claims;
  std::vector<std::pair<ExactScalar, ExactScalar>> grid;
  std::vector<CatalogError> catalog_errors;
  std::vector<GroupRecord> groups;
  ReportSummary summary;

  friend bool operator==(const Report&, const Report&) = default;
};

/// Exact values become "p/q" strings, approximations JSON numbers.
nlohmann::json scalar_to_json(const ExactScalar& v);
ExactScalar scalar_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TheoremVerdict& v);
TheoremVerdict verdict_from_json(const nlohmann::json& j);
nlohmann::json to_json(const DivisibilityMatching& m);
DivisibilityMatching matching_from_json(const nlohmann::json& j);
nlohmann::json to_json(const FactoredInteger& f);
FactoredInteger factored_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Report& r);
/// Throws ParseError on schema mismatch.
Report report_from_json(const nlohmann::json& j);

/// Pretty JSON with a trailing newline; the bytes depend only on the report.
std::string render_json(const Report& r);
/// One row per group followed by the anomaly list.
std::string render_table(const Report& r);

}  // namespace orderinv
