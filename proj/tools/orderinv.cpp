#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "orderinv/catalog.hpp"
#include "orderinv/error.hpp"
#include "orderinv/matcher.hpp"
#include "orderinv/numtheory.hpp"
#include "orderinv/order_stats.hpp"
#include "orderinv/report.hpp"
#include "orderinv/structure.hpp"
#include "orderinv/sweep.hpp"
#include "orderinv/verifier.hpp"

using namespace orderinv;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_found = 1;
constexpr int exit_usage = 2;

struct Common {
  std::string format = "json";
  std::string out;
  std::size_t order_cap = default_order_cap;
  bool paranoid = false;

  GroupOptions group_options() const { return {order_cap, paranoid}; }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  cmd->add_option("--out", c.out, "write output here instead of stdout");
  cmd->add_option("--order-cap", c.order_cap, "largest group order accepted");
  cmd->add_flag("--paranoid", c.paranoid, "re-check associativity of built-in groups");
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw Error(ErrorKind::io_error, "cannot write '" + c.out + "'");
  f << text;
}

std::string join(const std::map<std::uint64_t, std::uint64_t>& m) {
  std::string out;
  for (const auto& [k, v] : m) out += (out.empty() ? "" : " ") + std::to_string(k) + ":" + std::to_string(v);
  return out;
}

std::string table_of(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t w = 0;
  for (const auto& [k, v] : rows) w = std::max(w, k.size());
  std::ostringstream out;
  for (const auto& [k, v] : rows) out << k << std::string(w - k.size() + 2, ' ') << v << "\n";
  return out.str();
}

int cmd_compute(const Common& c, const std::string& group, const std::string& r_text,
                const std::string& s_text, std::uint64_t n) {
  const CatalogEntry entry = resolve_group(group, c.group_options());
  const FiniteGroup& g = entry.group;
  if (n == 0) n = g.order();
  if (g.order() % n != 0) {
    throw Error(ErrorKind::parameter_domain_violated,
                std::to_string(n) + " does not divide " + std::to_string(g.order()));
  }
  const ExactScalar r = ExactScalar::parse(r_text);
  const ExactScalar s = ExactScalar::parse(s_text);
  const OrderProfile p = order_profile(g);
  const FrobeniusTable f = frobenius_table(p);
  std::map<std::uint64_t, std::uint64_t> solutions;
  for (const auto& [m, e] : f.entries()) solutions[m] = e.solutions;
  const ExactScalar big_r = r_functional(p, n, r, s);
  const ExactScalar t = t_functional(p, n, r, s);
  const FactoredInteger pg = product_of_orders(p);
  const FactoredInteger pc = product_of_orders(cyclic_order_profile(g.order()));
  const std::uint64_t count = cyclic_subgroup_count(p, n);
  const std::string mode = r.is_integer() && s.is_integer() ? "exact" : "approximate";

  if (c.format == "json") {
    json j = {{"group", g.label()},
              {"order", g.order()},
              {"n", n},
              {"r", scalar_to_json(r)},
              {"s", scalar_to_json(s)},
              {"mode", mode},
              {"R", scalar_to_json(big_r)},
              {"T", scalar_to_json(t)},
              {"P_G", to_json(pg)},
              {"P_Cn", to_json(pc)},
              {"cyclic_subgroups", count},
              {"d(n)", divisor_count(n)},
              {"profile", json::object()},
              {"solutions", json::object()},
              {"cyclic", is_cyclic(g)},
              {"nilpotent", is_nilpotent(g)},
              {"solvable", is_solvable(g)}};
    for (const auto& [d, a] : p.counts()) j["profile"][std::to_string(d)] = a;
    for (const auto& [m, b] : solutions) j["solutions"][std::to_string(m)] = b;
    emit(c, j.dump(2) + "\n");
  } else {
    emit(c, table_of({{"group", g.label()},
                      {"order", std::to_string(g.order())},
                      {"n", std::to_string(n)},
                      {"(r,s)", "(" + r.to_string() + ", " + s.to_string() + ") " + mode},
                      {"R", big_r.to_string()},
                      {"T", t.to_string()},
                      {"P_G", pg.to_string()},
                      {"P_Cn", pc.to_string()},
                      {"cyclic subgroups", std::to_string(count) + " (d(n) = " + std::to_string(divisor_count(n)) + ")"},
                      {"profile", join(p.counts())},
                      {"B(m)", join(solutions)},
                      {"cyclic", is_cyclic(g) ? "yes" : "no"},
                      {"nilpotent", is_nilpotent(g) ? "yes" : "no"},
                      {"solvable", is_solvable(g) ? "yes" : "no"}}));
  }
  return exit_ok;
}

int cmd_verify(const Common& c, const std::string& catalog_text, const std::vector<std::string>& claim_ids,
               const std::string& grid, std::size_t workers) {
  CatalogSpec spec = parse_catalog_spec(catalog_text);
  spec.order_cap = c.order_cap;
  spec.paranoid = c.paranoid;
  const Catalog catalog = build_catalog(spec);
  SweepOptions options;
  options.claims = claim_ids;
  options.grid = parse_grid(grid);
  options.workers = workers;
  const Report report = run_sweep(catalog, options);
  emit(c, c.format == "json" ? render_json(report) : render_table(report));
  if (!c.out.empty()) {
    std::cerr << report.summary.groups << " groups, " << report.summary.verdicts << " verdicts, "
              << report.summary.inconsistent << " inconsistent\n";
  }
  return report.summary.exit_status;
}

int cmd_match(const Common& c, const std::string& group) {
  const CatalogEntry entry = resolve_group(group, c.group_options());
  const OrderProfile p = order_profile(entry.group);
  const DivisibilityMatching m = find_divisibility_matching(p);
  const bool found = m.status == DivisibilityMatching::Status::found;
  const bool checked = found ? verify_matching(p, m) : m.violator && verify_violation(p, *m.violator);
  if (c.format == "json") {
    json j = to_json(m);
    j["group"] = entry.group.label();
    j["solvable"] = is_solvable(entry.group);
    j["verified"] = checked;
    emit(c, j.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << entry.group.label() << " (order " << entry.group.order() << "): "
        << (found ? "matching found" : "no matching") << (checked ? ", verified" : ", NOT verified") << "\n";
    if (found) {
      for (const auto& [d, row] : m.assignment) {
        for (const auto& [e, k] : row) out << "  order " << d << " -> slot " << e << ": " << k << "\n";
      }
    } else if (m.violator) {
      out << "  Hall violation on orders";
      for (std::uint64_t d : m.violator->orders) out << " " << d;
      out << ": demand " << m.violator->demand << " > capacity " << m.violator->capacity << "\n";
    }
    emit(c, out.str());
  }
  return found && checked ? exit_ok : exit_found;
}

int cmd_example(const Common& c, std::uint64_t m, std::uint64_t beta, std::uint64_t u,
                const std::string& group, const std::string& grid_text) {
  SemidirectParams params{m, beta, u};
  if (!group.empty()) {
    const CatalogEntry entry = parse_group_expression(group, c.group_options());
    if (!entry.semidirect) {
      throw Error(ErrorKind::invalid_argument, "'" + group + "' is not of the form Cm:Calpha");
    }
    params = *entry.semidirect;
  }
  Grid grid;
  for (const auto& p : parse_grid(grid_text)) {
    if (p.first.is_integer() && p.second.is_integer()) grid.push_back(p);
  }
  const TheoremVerdict v = check_semidirect_count(params, grid, c.group_options());
  if (c.format == "json") {
    json j = to_json(v);
    j["m"] = params.m;
    j["beta"] = params.beta;
    j["u"] = params.u;
    emit(c, j.dump(2) + "\n");
  } else {
    std::vector<std::pair<std::string, std::string>> rows = {
        {"group", v.group_label},
        {"(m, beta, u)", "(" + std::to_string(params.m) + ", " + std::to_string(params.beta) + ", " +
                             std::to_string(params.u) + ")"},
        {"order", std::to_string(params.order())}};
    for (const auto& [k, val] : v.witness) rows.emplace_back(k, val);
    rows.emplace_back("consistent", v.consistent ? "yes" : "no");
    emit(c, table_of(rows));
  }
  return v.consistent ? exit_ok : exit_found;
}

int cmd_ingest(const Common& c, const std::string& path) {
  const FiniteGroup g = load_group_file(path, c.group_options());
  const OrderProfile p = order_profile(g);
  if (c.format == "json") {
    json j = {{"label", g.label()}, {"order", g.order()}, {"valid", true}, {"profile", json::object()}};
    for (const auto& [d, a] : p.counts()) j["profile"][std::to_string(d)] = a;
    emit(c, j.dump(2) + "\n");
  } else {
    emit(c, table_of({{"label", g.label()}, {"order", std::to_string(g.order())}, {"profile", join(p.counts())}}));
  }
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Order statistics of finite groups and checks of their inequalities"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);

  Common common;
  std::string group;
  std::string r_text = "0";
  std::string s_text = "1";
  std::uint64_t n = 0;
  std::string catalog_text = "default";
  std::vector<std::string> claim_ids;
  std::string grid = "default";
  std::size_t workers = 0;
  std::uint64_t m = 3;
  std::uint64_t beta = 1;
  std::uint64_t u = 1;
  std::string path;

  auto* compute = app.add_subcommand("compute", "R, T, P_G and counts for one group");
  compute->add_option("--group", group, "group expression or JSON file")->required();
  compute->add_option("--r", r_text, "r (integer, p/q or decimal)");
  compute->add_option("--s", s_text, "s (integer, p/q or decimal)");
  compute->add_option("--n", n, "divisor of the order (default: the order)");
  add_common(compute, common);

  auto* verify = app.add_subcommand("verify", "sweep the checks over a catalog");
  verify->add_option("--catalog", catalog_text, "catalog terms, e.g. 'default' or 'cyclic:1..12;S3'");
  verify->add_option("--claims", claim_ids, "claim ids (default: all)")->delimiter(',');
  verify->add_option("--grid", grid, "(r,s) grid: default, int:a..b, r:s,...");
  verify->add_option("--workers", workers, "worker threads (default: ORDERINV_WORKERS or cores)");
  add_common(verify, common);

  auto* match = app.add_subcommand("match", "divisibility matching onto the cyclic group");
  match->add_option("--group", group, "group expression or JSON file")->required();
  add_common(match, common);

  auto* example = app.add_subcommand("example", "inverting semidirect product against its closed forms");
  example->add_option("--m", m, "odd order of the normal cyclic factor");
  example->add_option("--beta", beta, "odd part of the acting order");
  example->add_option("--u", u, "2-adic valuation of the acting order");
  example->add_option("--group", group, "or a label such as C3:C10");
  example->add_option("--grid", grid, "(r,s) grid for the T comparison");
  add_common(example, common);

  auto* ingest = app.add_subcommand("ingest", "validate a Cayley-table or permutation JSON file");
  ingest->add_option("file", path, "group file")->required();
  add_common(ingest, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*compute) return cmd_compute(common, group, r_text, s_text, n);
    if (*verify) return cmd_verify(common, catalog_text, claim_ids, grid, workers);
    if (*match) return cmd_match(common, group);
    if (*example) return cmd_example(common, m, beta, u, group, grid);
    if (*ingest) return cmd_ingest(common, path);
  } catch (const Error& e) {
    std::cerr << "orderinv: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "orderinv: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
