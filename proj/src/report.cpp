#include "orderinv/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "orderinv/error.hpp"

#ifndef ORDERINV_VERSION
#define ORDERINV_VERSION "0.0.0"
#endif

namespace orderinv {

using nlohmann::json;

namespace {

Sign sign_from_string(const std::string& s) {
  if (s == "neg") return Sign::negative;
  if (s == "zero") return Sign::zero;
  if (s == "pos") return Sign::positive;
  throw Error(ErrorKind::parse_error, "bad sign '" + s + "'");
}

Mode mode_from_string(const std::string& s) {
  if (s == "exact") return Mode::exact;
  if (s == "approximate") return Mode::approximate;
  throw Error(ErrorKind::parse_error, "bad mode '" + s + "'");
}

template <class Map>
json count_map_to_json(const Map& m) {
  json out = json::object();
  for (const auto& [k, v] : m) out[std::to_string(k)] = v;
  return out;
}

std::map<std::uint64_t, std::uint64_t> count_map_from_json(const json& j) {
  std::map<std::uint64_t, std::uint64_t> out;
  for (const auto& [k, v] : j.items()) out[std::stoull(k)] = v.get<std::uint64_t>();
  return out;
}

json optional_scalar(const std::optional<ExactScalar>& v) {
  return v ? scalar_to_json(*v) : json(nullptr);
}

std::optional<ExactScalar> optional_scalar_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return scalar_from_json(j);
}

json group_to_record_json(const GroupRecord& g) {
  json values = json::array();
  for (const GridValue& v : g.values) {
    values.push_back({{"r", scalar_to_json(v.r)},
                      {"s", scalar_to_json(v.s)},
                      {"R", scalar_to_json(v.R)},
                      {"T", scalar_to_json(v.T)}});
  }
  json verdicts = json::array();
  for (const TheoremVerdict& v : g.verdicts) verdicts.push_back(to_json(v));
  return {
      {"label", g.label},
      {"order", g.order},
      {"family", g.family},
      {"profile", count_map_to_json(g.profile)},
      {"solutions", count_map_to_json(g.solutions)},
      {"cyclic", g.cyclic},
      {"nilpotent", g.nilpotent},
      {"solvable", g.solvable},
      {"cyclic_subgroups", g.cyclic_subgroups},
      {"order_product", to_json(g.order_product)},
      {"values", std::move(values)},
      {"verdicts", std::move(verdicts)},
      {"not_applicable", g.not_applicable},
      {"matching", g.matching ? to_json(*g.matching) : json(nullptr)},
      {"matching_verified", g.matching_verified},
      {"errors", g.errors},
  };
}

GroupRecord record_from_json(const json& j) {
  GroupRecord g;
  g.label = j.at("label").get<std::string>();
  g.order = j.at("order").get<std::uint64_t>();
  g.family = j.at("family").get<std::string>();
  g.profile = count_map_from_json(j.at("profile"));
  g.solutions = count_map_from_json(j.at("solutions"));
  g.cyclic = j.at("cyclic").get<bool>();
  g.nilpotent = j.at("nilpotent").get<bool>();
  g.solvable = j.at("solvable").get<bool>();
  g.cyclic_subgroups = j.at("cyclic_subgroups").get<std::uint64_t>();
  g.order_product = factored_from_json(j.at("order_product"));
  for (const json& v : j.at("values")) {
    g.values.push_back({scalar_from_json(v.at("r")), scalar_from_json(v.at("s")),
                        scalar_from_json(v.at("R")), scalar_from_json(v.at("T"))});
  }
  for (const json& v : j.at("verdicts")) g.verdicts.push_back(verdict_from_json(v));
  g.not_applicable = j.at("not_applicable").get<std::vector<std::string>>();
  if (!j.at("matching").is_null()) g.matching = matching_from_json(j.at("matching"));
  g.matching_verified = j.at("matching_verified").get<bool>();
  g.errors = j.at("errors").get<std::vector<std::string>>();
  return g;
}

}  // namespace

std::string tool_version() { return ORDERINV_VERSION; }

json scalar_to_json(const ExactScalar& v) {
  if (v.is_exact()) return v.to_string();
  return v.to_double();
}

ExactScalar scalar_from_json(const json& j) {
  if (j.is_string()) return ExactScalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return ExactScalar(j.get<long long>());
  if (j.is_number()) return ExactScalar::approx(j.get<double>());
  throw Error(ErrorKind::parse_error, "expected a scalar, got " + j.dump());
}

json to_json(const TheoremVerdict& v) {
  json witness = json::array();
  for (const auto& [k, val] : v.witness) witness.push_back({k, val});
  return {
      {"claim", v.claim_id},
      {"group", v.group_label},
      {"n", v.n ? json(*v.n) : json(nullptr)},
      {"r", optional_scalar(v.r)},
      {"s", optional_scalar(v.s)},
      {"sign_of_t", to_string(v.sign_of_t)},
      {"inequality_holds", v.inequality_holds},
      {"equality_condition_holds", v.equality_condition_holds},
      {"consistent", v.consistent},
      {"mode", to_string(v.mode)},
      {"criterion", v.criterion},
      {"witness", std::move(witness)},
  };
}

TheoremVerdict verdict_from_json(const json& j) {
  TheoremVerdict v;
  v.claim_id = j.at("claim").get<std::string>();
  v.group_label = j.at("group").get<std::string>();
  if (!j.at("n").is_null()) v.n = j.at("n").get<std::uint64_t>();
  v.r = optional_scalar_from(j.at("r"));
  v.s = optional_scalar_from(j.at("s"));
  v.sign_of_t = sign_from_string(j.at("sign_of_t").get<std::string>());
  v.inequality_holds = j.at("inequality_holds").get<bool>();
  v.equality_condition_holds = j.at("equality_condition_holds").get<bool>();
  v.consistent = j.at("consistent").get<bool>();
  v.mode = mode_from_string(j.at("mode").get<std::string>());
  v.criterion = j.at("criterion").get<std::string>();
  for (const json& w : j.at("witness")) {
    v.witness.emplace_back(w.at(0).get<std::string>(), w.at(1).get<std::string>());
  }
  return v;
}

json to_json(const DivisibilityMatching& m) {
  json assignment = json::object();
  for (const auto& [d, row] : m.assignment) assignment[std::to_string(d)] = count_map_to_json(row);
  json out = {
      {"status", m.status == DivisibilityMatching::Status::found ? "found" : "violated"},
      {"group_order", m.group_order},
      {"assignment", std::move(assignment)},
      {"violator", nullptr},
  };
  if (m.violator) {
    out["violator"] = {{"orders", m.violator->orders},
                       {"demand", m.violator->demand},
                       {"capacity", m.violator->capacity}};
  }
  return out;
}

DivisibilityMatching matching_from_json(const json& j) {
  DivisibilityMatching m;
  const std::string status = j.at("status").get<std::string>();
  if (status != "found" && status != "violated") {
    throw Error(ErrorKind::parse_error, "bad matching status '" + status + "'");
  }
  m.status = status == "found" ? DivisibilityMatching::Status::found
                               : DivisibilityMatching::Status::violated;
  m.group_order = j.at("group_order").get<std::uint64_t>();
  for (const auto& [d, row] : j.at("assignment").items()) {
    m.assignment[std::stoull(d)] = count_map_from_json(row);
  }
  if (!j.at("violator").is_null()) {
    const json& v = j.at("violator");
    m.violator = DivisibilityMatching::HallViolation{
        v.at("orders").get<std::vector<std::uint64_t>>(), v.at("demand").get<std::uint64_t>(),
        v.at("capacity").get<std::uint64_t>()};
  }
  return m;
}

json to_json(const FactoredInteger& f) {
  json out = json::object();
  for (const auto& [p, e] : f.factors()) out[std::to_string(p)] = e.str();
  return out;
}

FactoredInteger factored_from_json(const json& j) {
  FactoredInteger::Factors factors;
  for (const auto& [p, e] : j.items()) {
    factors[std::stoull(p)] = e.is_string() ? BigInt(e.get<std::string>()) : BigInt(e.get<std::uint64_t>());
  }
  return FactoredInteger(std::move(factors));
}

json to_json(const Report& r) {
  json grid = json::array();
  for (const auto& [a, b] : r.grid) grid.push_back({scalar_to_json(a), scalar_to_json(b)});
  json errors = json::array();
  for (const CatalogError& e : r.catalog_errors) {
    errors.push_back({{"source", e.source}, {"kind", e.kind}, {"message", e.message}});
  }
  json groups = json::array();
  for (const GroupRecord& g : r.groups) groups.push_back(group_to_record_json(g));
  const ReportSummary& s = r.summary;
  return {
      {"schema_version", r.schema_version},
      {"tool_version", r.tool_version},
      {"claims", r.claims},
      {"grid", std::move(grid)},
      {"catalog", {{"groups", r.groups.size()}, {"errors", std::move(errors)}}},
      {"groups", std::move(groups)},
      {"summary",
       {{"groups", s.groups},
        {"verdicts", s.verdicts},
        {"consistent", s.consistent},
        {"inconsistent", s.inconsistent},
        {"approximate", s.approximate},
        {"matchings_found", s.matchings_found},
        {"anomalies", s.anomalies},
        {"conjecture_events", s.conjecture_events},
        {"catalog_errors", s.catalog_errors},
        {"exit_status", s.exit_status}}},
  };
}

Report report_from_json(const json& j) {
  try {
    Report r;
    r.schema_version = j.at("schema_version").get<int>();
    if (r.schema_version != report_schema_version) {
      throw Error(ErrorKind::parse_error,
                  "unsupported schema version " + std::to_string(r.schema_version));
    }
    r.tool_version = j.at("tool_version").get<std::string>();
    r.claims = j.at("claims").get<std::vector<std::string>>();
    for (const json& p : j.at("grid")) r.grid.emplace_back(scalar_from_json(p.at(0)), scalar_from_json(p.at(1)));
    for (const json& e : j.at("catalog").at("errors")) {
      r.catalog_errors.push_back({e.at("source").get<std::string>(), e.at("kind").get<std::string>(),
                                  e.at("message").get<std::string>()});
    }
    for (const json& g : j.at("groups")) r.groups.push_back(record_from_json(g));
    const json& s = j.at("summary");
    r.summary.groups = s.at("groups").get<std::uint64_t>();
    r.summary.verdicts = s.at("verdicts").get<std::uint64_t>();
    r.summary.consistent = s.at("consistent").get<std::uint64_t>();
    r.summary.inconsistent = s.at("inconsistent").get<std::uint64_t>();
    r.summary.approximate = s.at("approximate").get<std::uint64_t>();
    r.summary.matchings_found = s.at("matchings_found").get<std::uint64_t>();
    r.summary.anomalies = s.at("anomalies").get<std::vector<std::string>>();
    r.summary.conjecture_events = s.at("conjecture_events").get<std::vector<std::string>>();
    r.summary.catalog_errors = s.at("catalog_errors").get<std::uint64_t>();
    r.summary.exit_status = s.at("exit_status").get<int>();
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse_error, e.what());
  }
}

std::string render_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

std::string render_table(const Report& r) {
  std::ostringstream out;
  std::size_t width = 5;
  for (const GroupRecord& g : r.groups) width = std::max(width, g.label.size());
  out << std::left << std::setw(int(width)) << "group" << std::right << std::setw(7) << "order"
      << std::setw(8) << "cyclic" << std::setw(8) << "nilp" << std::setw(8) << "solv"
      << std::setw(8) << "csubs" << std::setw(10) << "verdicts" << std::setw(8) << "incons"
      << std::setw(10) << "matching" << "\n";
  for (const GroupRecord& g : r.groups) {
    const auto bad = std::count_if(g.verdicts.begin(), g.verdicts.end(),
                                   [](const TheoremVerdict& v) { return !v.consistent; });
    std::string matching = "-";
    if (g.matching) {
      matching = g.matching->status == DivisibilityMatching::Status::found ? "found" : "violated";
    }
    out << std::left << std::setw(int(width)) << g.label << std::right << std::setw(7) << g.order
        << std::setw(8) << (g.cyclic ? "yes" : "no") << std::setw(8) << (g.nilpotent ? "yes" : "no")
        << std::setw(8) << (g.solvable ? "yes" : "no") << std::setw(8) << g.cyclic_subgroups
        << std::setw(10) << g.verdicts.size() << std::setw(8) << bad << std::setw(10) << matching
        << "\n";
  }
  const ReportSummary& s = r.summary;
  out << "\ngroups " << s.groups << ", verdicts " << s.verdicts << ", consistent " << s.consistent
      << ", inconsistent " << s.inconsistent << ", approximate " << s.approximate
      << ", catalog errors " << s.catalog_errors << "\n";
  for (const std::string& a : s.anomalies) out << "anomaly: " << a << "\n";
  for (const std::string& c : s.conjecture_events) out << "event: " << c << "\n";
  for (const CatalogError& e : r.catalog_errors) out << "catalog error: " << e.source << ": " << e.message << "\n";
  return out.str();
}

}  // namespace orderinv
