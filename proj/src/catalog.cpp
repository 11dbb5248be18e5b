#include "orderinv/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <set>

#include "orderinv/error.hpp"
#include "orderinv/numtheory.hpp"
#include "orderinv/structure.hpp"

namespace orderinv {

namespace {

using Params = std::vector<std::uint64_t>;

std::uint64_t factorial(std::uint64_t k) {
  std::uint64_t f = 1;
  for (std::uint64_t i = 2; i <= k; ++i) f *= i;
  return f;
}

// Order of a family member without building it; 0 when parameters are invalid.
std::uint64_t family_order(const std::string& family, const Params& p) {
  if (family == "cyclic") return p[0];
  if (family == "dihedral") return 2 * p[0];
  if (family == "quaternion") return p[0];
  if (family == "symmetric") return p[0] <= 20 ? factorial(p[0]) : 0;
  if (family == "alternating") return p[0] <= 20 ? std::max<std::uint64_t>(1, factorial(p[0]) / 2) : 0;
  if (family == "elementary") {
    std::uint64_t o = 1;
    for (std::uint64_t i = 0; i < p[1]; ++i) {
      if (o > (std::uint64_t{1} << 40) / std::max<std::uint64_t>(p[0], 1)) return 0;
      o *= p[0];
    }
    return o;
  }
  if (family == "semidirect") {
    if (p[2] > 40) return 0;
    return p[0] * (std::uint64_t{1} << p[2]) * p[1];
  }
  return 0;
}

std::size_t arity(const std::string& family) {
  if (family == "elementary") return 2;
  if (family == "semidirect") return 3;
  return 1;
}

CatalogEntry build_member(const std::string& family, const Params& p, const GroupOptions& options) {
  if (family == "cyclic") return {cyclic(p[0], options), family, std::nullopt};
  if (family == "dihedral") return {dihedral(p[0], options), family, std::nullopt};
  if (family == "quaternion") return {generalized_quaternion(p[0], options), family, std::nullopt};
  if (family == "symmetric") return {symmetric(p[0], options), family, std::nullopt};
  if (family == "alternating") return {alternating(p[0], options), family, std::nullopt};
  if (family == "elementary") return {elementary_abelian(p[0], p[1], options), family, std::nullopt};
  if (family == "semidirect") {
    const SemidirectParams params{p[0], p[1], p[2]};
    return {inverting_semidirect(params, options), family, params};
  }
  throw Error(ErrorKind::unknown_family, "unknown family '" + family + "'");
}

void cartesian(const std::vector<Params>& lists, std::size_t depth, Params& current,
               std::vector<Params>& out) {
  if (depth == lists.size()) {
    out.push_back(current);
    return;
  }
  for (std::uint64_t v : lists[depth]) {
    current.push_back(v);
    cartesian(lists, depth + 1, current, out);
    current.pop_back();
  }
}

std::uint64_t parse_uint(const std::string& s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit) || s.size() > 18) {
    throw Error(ErrorKind::parse_error, "expected a non-negative integer, got '" + s + "'");
  }
  return std::stoull(s);
}

Params parse_value_list(const std::string& text) {
  Params out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const std::size_t dots = item.find("..");
    if (dots != std::string::npos) {
      const std::uint64_t lo = parse_uint(item.substr(0, dots));
      const std::uint64_t hi = parse_uint(item.substr(dots + 2));
      if (hi < lo || hi - lo > 100000) throw Error(ErrorKind::parse_error, "bad range '" + item + "'");
      for (std::uint64_t v = lo; v <= hi; ++v) out.push_back(v);
    } else {
      out.push_back(parse_uint(item));
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

void add_entry(Catalog& catalog, std::set<std::string>& labels, CatalogEntry entry) {
  if (labels.insert(entry.group.label()).second) catalog.entries.push_back(std::move(entry));
}

void add_coprime_products(Catalog& catalog, std::set<std::string>& labels, std::uint64_t max_order,
                          const GroupOptions& options) {
  // Factor candidates: every family member of order in [2, max_order / 2].
  const std::uint64_t half = max_order / 2;
  std::vector<CatalogEntry> factors;
  auto consider = [&](const std::string& family, const Params& p) {
    const std::uint64_t o = family_order(family, p);
    if (o < 2 || o > half) return;
    if (family == "semidirect") {
      try {
        validate_semidirect({p[0], p[1], p[2]});
      } catch (const Error&) {
        return;
      }
    }
    factors.push_back(build_member(family, p, options));
  };
  for (std::uint64_t n = 2; n <= half; ++n) consider("cyclic", {n});
  for (std::uint64_t n = 2; 2 * n <= half; ++n) consider("dihedral", {n});
  for (std::uint64_t q = 8; q <= half; q *= 2) consider("quaternion", {q});
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (std::uint64_t k = 2; k <= 6; ++k) consider("elementary", {p, k});
  }
  consider("symmetric", {3});
  consider("symmetric", {4});
  consider("alternating", {4});
  for (std::uint64_t m = 3; m <= half; m += 2) {
    for (std::uint64_t beta = 1; beta <= half; beta += 2) {
      for (std::uint64_t u = 1; u <= 6; ++u) consider("semidirect", {m, beta, u});
    }
  }
  std::vector<bool> is_cyc(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) is_cyc[i] = is_cyclic(factors[i].group);

  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (is_cyc[i]) continue;
    for (std::size_t j = 0; j < factors.size(); ++j) {
      if (i == j) continue;
      const auto& a = factors[i].group;
      const auto& b = factors[j].group;
      if (a.order() * b.order() > max_order || gcd(a.order(), b.order()) != 1) continue;
      if (!is_cyc[j] && !(a.label() < b.label())) continue;
      add_entry(catalog, labels, {direct_product(a, b, options), "coprime-products", std::nullopt});
    }
  }
}

std::vector<std::string> split_terms(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (c == ';' || std::isspace(static_cast<unsigned char>(c))) {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

bool looks_like_file(const std::string& term) {
  return term.ends_with(".json") || term.find('/') != std::string::npos;
}

FiniteGroup parse_factor(const std::string& f, const GroupOptions& options,
                         std::optional<SemidirectParams>& semidirect) {
  static const std::regex simple(R"(^([CDQSA])(\d+)$)");
  static const std::regex elementary(R"(^E(\d+)\^(\d+)$)");
  static const std::regex semi(R"(^C(\d+):C(\d+)$)");
  std::smatch m;
  if (std::regex_match(f, m, simple)) {
    const std::uint64_t v = parse_uint(m[2].str());
    switch (m[1].str()[0]) {
      case 'C': return cyclic(v, options);
      case 'D': return dihedral(v, options);
      case 'Q': return generalized_quaternion(v, options);
      case 'S': return symmetric(v, options);
      case 'A': return alternating(v, options);
    }
  }
  if (std::regex_match(f, m, elementary)) {
    return elementary_abelian(parse_uint(m[1].str()), parse_uint(m[2].str()), options);
  }
  if (std::regex_match(f, m, semi)) {
    const std::uint64_t mm = parse_uint(m[1].str());
    const std::uint64_t alpha = parse_uint(m[2].str());
    if (alpha == 0 || alpha % 2 != 0) {
      throw Error(ErrorKind::parity_violated, "C" + m[1].str() + ":C" + m[2].str() +
                                                  " needs an even acting order");
    }
    const std::uint64_t u = valuation(alpha, 2);
    SemidirectParams params{mm, alpha >> u, u};
    semidirect = params;
    return inverting_semidirect(params, options);
  }
  throw Error(ErrorKind::parse_error, "unrecognised group '" + f + "'");
}

}  // namespace

CatalogSpec default_catalog_spec() {
  CatalogSpec spec;
  auto range = [](std::uint64_t lo, std::uint64_t hi, std::uint64_t step = 1) {
    Params out;
    for (std::uint64_t v = lo; v <= hi; v += step) out.push_back(v);
    return out;
  };
  spec.families = {
      {"cyclic", {range(1, 64)}, 64},
      {"dihedral", {range(2, 32)}, 64},
      {"quaternion", {{8, 16, 32, 64}}, 64},
      {"elementary", {{2, 3, 5, 7}, range(2, 6)}, 64},
      {"symmetric", {{3, 4, 5}}, 0},
      {"alternating", {{4, 5}}, 0},
      {"semidirect", {range(3, 31, 2), range(1, 21, 2), range(1, 5)}, 64},
      {"coprime-products", {{64}}, 64},
  };
  return spec;
}

CatalogSpec parse_catalog_spec(std::string_view text) {
  CatalogSpec spec;
  static const std::regex family_term(R"(^([a-z-]+):([0-9.,/]+)(?:@(\d+))?$)");
  for (const std::string& term : split_terms(text)) {
    std::smatch m;
    if (term == "default") {
      const CatalogSpec d = default_catalog_spec();
      spec.families.insert(spec.families.end(), d.families.begin(), d.families.end());
    } else if (std::regex_match(term, m, family_term)) {
      const std::string family = m[1].str();
      if (std::find(known_families().begin(), known_families().end(), family) ==
          known_families().end()) {
        throw Error(ErrorKind::unknown_family, "unknown family '" + family + "'");
      }
      FamilyRange fr{family, {}, m[3].matched ? parse_uint(m[3].str()) : 0};
      std::string lists = m[2].str();
      std::size_t start = 0;
      while (true) {
        const std::size_t slash = lists.find('/', start);
        fr.parameters.push_back(parse_value_list(lists.substr(start, slash == std::string::npos ? std::string::npos : slash - start)));
        if (slash == std::string::npos) break;
        start = slash + 1;
      }
      if (fr.parameters.size() != arity(family)) {
        throw Error(ErrorKind::parse_error, "family '" + family + "' takes " +
                                                std::to_string(arity(family)) + " parameter list(s)");
      }
      spec.families.push_back(std::move(fr));
    } else if (term.find(':') != std::string::npos && std::regex_match(term, std::regex(R"(^[a-z-]+:.*$)"))) {
      throw Error(ErrorKind::unknown_family, "cannot parse family term '" + term + "'");
    } else if (looks_like_file(term)) {
      spec.ingested.emplace_back(term);
    } else {
      spec.groups.push_back(term);
    }
  }
  return spec;
}

Catalog build_catalog(const CatalogSpec& spec) {
  Catalog catalog;
  std::set<std::string> labels;
  const GroupOptions options{spec.order_cap, spec.paranoid};
  for (const FamilyRange& fr : spec.families) {
    if (std::find(known_families().begin(), known_families().end(), fr.family) ==
        known_families().end()) {
      throw Error(ErrorKind::unknown_family, "unknown family '" + fr.family + "'");
    }
    if (fr.family == "coprime-products") {
      for (std::uint64_t max_order : fr.parameters.at(0)) {
        const std::uint64_t limit = std::min<std::uint64_t>(
            fr.max_order == 0 ? max_order : std::min(max_order, fr.max_order), spec.order_cap);
        add_coprime_products(catalog, labels, limit, options);
      }
      continue;
    }
    if (fr.parameters.size() != arity(fr.family)) {
      throw Error(ErrorKind::parse_error, "family '" + fr.family + "' takes " +
                                              std::to_string(arity(fr.family)) + " parameter list(s)");
    }
    std::vector<Params> combos;
    Params current;
    cartesian(fr.parameters, 0, current, combos);
    for (const Params& p : combos) {
      if (fr.family == "semidirect") {
        try {
          validate_semidirect({p[0], p[1], p[2]});
        } catch (const Error&) {
          continue;  // the grid is coprime-filtered
        }
      }
      const std::uint64_t o = family_order(fr.family, p);
      if (fr.max_order != 0 && o > fr.max_order) continue;
      std::string source = fr.family + ":";
      for (std::size_t i = 0; i < p.size(); ++i) source += (i ? "/" : "") + std::to_string(p[i]);
      try {
        add_entry(catalog, labels, build_member(fr.family, p, options));
      } catch (const Error& e) {
        catalog.errors.push_back({source, std::string(to_string(e.kind())), e.what()});
      }
    }
  }
  for (const std::string& expr : spec.groups) {
    try {
      add_entry(catalog, labels, parse_group_expression(expr, options));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::parse_error) throw;
      catalog.errors.push_back({expr, std::string(to_string(e.kind())), e.what()});
    }
  }
  for (const auto& path : spec.ingested) {
    try {
      add_entry(catalog, labels, {load_group_file(path, options), "ingested", std::nullopt});
    } catch (const Error& e) {
      catalog.errors.push_back({path.string(), std::string(to_string(e.kind())), e.what()});
    }
  }
  return catalog;
}

CatalogEntry parse_group_expression(std::string_view text, const GroupOptions& options) {
  std::vector<std::string> factors;
  std::string current;
  for (char c : text) {
    if (c == 'x') {
      factors.push_back(std::move(current));
      current.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      current.push_back(c);
    }
  }
  factors.push_back(std::move(current));
  if (factors.size() == 1 && factors[0].empty()) {
    throw Error(ErrorKind::parse_error, "empty group expression");
  }
  std::optional<SemidirectParams> semidirect;
  FiniteGroup g = parse_factor(factors[0], options, semidirect);
  for (std::size_t i = 1; i < factors.size(); ++i) {
    std::optional<SemidirectParams> ignored;
    g = direct_product(g, parse_factor(factors[i], options, ignored), options);
  }
  std::string family = factors.size() > 1 ? "product" : "expression";
  if (factors.size() > 1) semidirect.reset();
  return {std::move(g), std::move(family), semidirect};
}

FiniteGroup group_from_json(const nlohmann::json& j, const GroupOptions& options) {
  try {
    if (!j.is_object()) throw Error(ErrorKind::parse_error, "group file must hold a JSON object");
    const std::string label = j.value("label", std::string("ingested"));
    if (j.contains("table")) {
      const auto table = j.at("table").get<std::vector<std::vector<std::int64_t>>>();
      if (j.contains("order") && j.at("order").get<std::uint64_t>() != table.size()) {
        throw Error(ErrorKind::invalid_argument,
                    "declared order " + j.at("order").dump() + " but table has " +
                        std::to_string(table.size()) + " rows");
      }
      return from_cayley_table(table, label, options);
    }
    if (j.contains("generators")) {
      PermutationGenSet gens;
      gens.degree = j.at("degree").get<std::size_t>();
      gens.generators = j.at("generators").get<std::vector<std::vector<std::uint32_t>>>();
      return from_permutations(gens, label, options);
    }
    throw Error(ErrorKind::parse_error, "group file needs either 'table' or 'generators'");
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse_error, e.what());
  }
}

nlohmann::json group_to_json(const FiniteGroup& g) {
  nlohmann::json table = nlohmann::json::array();
  for (Element a = 0; a < g.order(); ++a) {
    auto row = g.row(a);
    table.push_back(std::vector<Element>(row.begin(), row.end()));
  }
  return {{"label", g.label()}, {"order", g.order()}, {"table", std::move(table)}};
}

FiniteGroup load_group_file(const std::filesystem::path& path, const GroupOptions& options) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io_error, "cannot open '" + path.string() + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse_error, path.string() + ": " + e.what());
  }
  return group_from_json(j, options);
}

CatalogEntry resolve_group(std::string_view text, const GroupOptions& options) {
  const std::string s(text);
  std::error_code ec;
  if (looks_like_file(s) || std::filesystem::is_regular_file(s, ec)) {
    return {load_group_file(s, options), "ingested", std::nullopt};
  }
  return parse_group_expression(s, options);
}

}  // namespace orderinv
