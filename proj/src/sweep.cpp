#include "orderinv/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>

#include "orderinv/error.hpp"
#include "orderinv/numtheory.hpp"

namespace orderinv {

namespace {

bool in_case1_domain(const ExactScalar& r, const ExactScalar& s) {
  return compare(s, r) < 0 && s.sign(0.0) <= 0;
}

bool in_case2_domain(const ExactScalar& r, const ExactScalar& s) {
  return compare(r, s) == 0 && r.sign(0.0) < 0;
}

bool in_case3_domain(const ExactScalar& r, const ExactScalar& s) {
  return compare(r, s - ExactScalar(1)) <= 0 && compare(s, ExactScalar(1)) >= 0;
}

TheoremVerdict matching_verdict(const GroupRecord& rec) {
  TheoremVerdict v;
  v.claim_id = claims::divisibility_matching;
  v.group_label = rec.label;
  v.n = rec.order;
  v.criterion = rec.solvable ? "solvable" : "recorded";
  const bool found = rec.matching->status == DivisibilityMatching::Status::found;
  v.inequality_holds = found && rec.matching_verified;
  v.equality_condition_holds = rec.solvable;
  v.consistent = v.inequality_holds || !rec.solvable;
  if (rec.matching->violator) {
    const auto& h = *rec.matching->violator;
    std::string orders;
    for (std::uint64_t d : h.orders) orders += (orders.empty() ? "" : ",") + std::to_string(d);
    v.witness.emplace_back("hall_orders", orders);
    v.witness.emplace_back("demand", std::to_string(h.demand));
    v.witness.emplace_back("capacity", std::to_string(h.capacity));
  }
  v.witness.emplace_back("status", found ? "found" : "violated");
  v.witness.emplace_back("verified", rec.matching_verified ? "true" : "false");
  return v;
}

void run_claim(const std::string& claim, const CatalogEntry& entry, const GroupAnalysis& a,
               const SweepOptions& options, GroupRecord& rec) {
  const std::uint64_t order = a.group().order();
  const std::vector<std::uint64_t> ns =
      order <= options.divisor_sweep_max_order ? divisors(order) : std::vector<std::uint64_t>{order};
  auto& out = rec.verdicts;
  const std::size_t before = out.size();

  if (claim == claims::frobenius) {
    out.push_back(check_frobenius(a));
  } else if (claim == claims::min_cyclic_subgroups) {
    out.push_back(check_min_cyclic_subgroups(a));
  } else if (claim == claims::order_product) {
    out.push_back(check_product_theorem(a));
  } else if (claim == claims::unique_cyclic) {
    for (std::uint64_t n : ns) {
      for (const auto& [r, s] : options.grid) {
        if (in_case1_domain(r, s)) out.push_back(check_case1(a, n, r, s));
      }
    }
  } else if (claim == claims::nilpotent_unique) {
    for (std::uint64_t n : ns) {
      for (const auto& [r, s] : options.grid) {
        if (in_case2_domain(r, s)) out.push_back(check_case2(a, n, r));
      }
    }
  } else if (claim == claims::cyclic_maximality) {
    for (const auto& [r, s] : options.grid) {
      if (in_case3_domain(r, s)) out.push_back(check_case3(a, r, s));
    }
  } else if (claim == claims::nilpotent_sign) {
    if (a.nilpotent() && !a.cyclic()) {
      for (const auto& [r, s] : options.grid) out.push_back(check_case4(a, r, s));
    }
  } else if (claim == claims::cyclic_count_equivalence) {
    for (std::uint64_t n : divisors(order)) out.push_back(check_cyclic_count_equivalence(a, n));
  } else if (claim == claims::moebius_expansion) {
    for (const auto& [r, s] : options.grid) {
      if (r.is_integer() && s.is_integer()) out.push_back(check_moebius_expansion(a, r, s));
    }
  } else if (claim == claims::balanced_point) {
    out.push_back(check_balanced_point(a));
  } else if (claim == claims::inverting_semidirect) {
    if (entry.semidirect) {
      Grid integer_points;
      for (const auto& p : options.grid) {
        if (p.first.is_integer() && p.second.is_integer()) integer_points.push_back(p);
      }
      out.push_back(check_semidirect_count(a, *entry.semidirect, integer_points));
    }
  } else if (claim == claims::divisibility_matching) {
    rec.matching = find_divisibility_matching(a.profile());
    rec.matching_verified =
        rec.matching->status == DivisibilityMatching::Status::found
            ? verify_matching(a.profile(), *rec.matching)
            : rec.matching->violator && verify_violation(a.profile(), *rec.matching->violator);
    out.push_back(matching_verdict(rec));
  }
  if (out.size() == before) rec.not_applicable.push_back(claim);
}

std::vector<std::string> resolve_claims(const std::vector<std::string>& requested) {
  if (requested.empty()) return claims::all();
  std::vector<std::string> out;
  for (const std::string& c : requested) {
    if (c == "all") return claims::all();
    if (!claims::known(c)) throw Error(ErrorKind::invalid_argument, "unknown claim '" + c + "'");
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  return out;
}

void summarize(Report& report) {
  ReportSummary& s = report.summary;
  s = {};
  s.groups = report.groups.size();
  s.catalog_errors = report.catalog_errors.size();
  for (const GroupRecord& g : report.groups) {
    for (const std::string& e : g.errors) s.anomalies.push_back(g.label + ": " + e);
    for (const TheoremVerdict& v : g.verdicts) {
      ++s.verdicts;
      if (v.mode == Mode::approximate) ++s.approximate;
      if (v.consistent) {
        ++s.consistent;
      } else {
        ++s.inconsistent;
        std::string where = v.claim_id;
        if (v.n) where += " n=" + std::to_string(*v.n);
        if (v.r) where += " r=" + v.r->to_string();
        if (v.s) where += " s=" + v.s->to_string();
        if (v.claim_id != claims::divisibility_matching) {
          s.anomalies.push_back(g.label + ": inconsistent " + where + " (" + to_string(v.mode) + ")");
          if (v.mode == Mode::exact) s.exit_status = 1;
        }
      }
      if (v.claim_id == claims::balanced_point && !g.nilpotent && v.sign_of_t == Sign::zero) {
        s.conjecture_events.push_back(g.label + ": T(1,1) = 0 on a non-nilpotent group");
      }
    }
    if (g.matching) {
      if (g.matching->status == DivisibilityMatching::Status::found) {
        ++s.matchings_found;
      } else if (g.solvable) {
        s.anomalies.push_back(g.label + ": divisibility matching violated on a solvable group");
        s.exit_status = 1;
      } else {
        s.conjecture_events.push_back(g.label + ": divisibility matching violated");
      }
      if (!g.matching_verified) {
        s.anomalies.push_back(g.label + ": matching certificate failed re-verification");
        s.exit_status = 1;
      }
    }
  }
}

}  // namespace

Grid parse_grid(std::string_view text) {
  Grid out;
  auto add = [&](ExactScalar r, ExactScalar s) {
    for (const auto& [a, b] : out) {
      if (a == r && b == s) return;
    }
    out.emplace_back(std::move(r), std::move(s));
  };
  std::string all(text);
  std::size_t start = 0;
  while (true) {
    const std::size_t plus = all.find('+', start);
    const std::string piece = all.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
    if (piece == "default") {
      for (auto& [r, s] : integer_grid()) add(r, s);
    } else if (piece.rfind("int:", 0) == 0) {
      const std::string range = piece.substr(4);
      const std::size_t dots = range.find("..");
      if (dots == std::string::npos) throw Error(ErrorKind::parse_error, "bad grid range '" + piece + "'");
      long lo = 0;
      long hi = 0;
      try {
        lo = std::stol(range.substr(0, dots));
        hi = std::stol(range.substr(dots + 2));
      } catch (const std::exception&) {
        throw Error(ErrorKind::parse_error, "bad grid range '" + piece + "'");
      }
      if (hi < lo || hi - lo > 40) throw Error(ErrorKind::parse_error, "bad grid range '" + piece + "'");
      for (auto& [r, s] : integer_grid(lo, hi)) add(r, s);
    } else {
      std::size_t p = 0;
      while (p <= piece.size()) {
        const std::size_t comma = piece.find(',', p);
        const std::string point = piece.substr(p, comma == std::string::npos ? std::string::npos : comma - p);
        const std::size_t colon = point.find(':');
        if (colon == std::string::npos) throw Error(ErrorKind::parse_error, "bad grid point '" + point + "'");
        add(ExactScalar::parse(point.substr(0, colon)), ExactScalar::parse(point.substr(colon + 1)));
        if (comma == std::string::npos) break;
        p = comma + 1;
      }
    }
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return out;
}

std::size_t default_worker_count() {
  if (const char* env = std::getenv("ORDERINV_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return std::size_t(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

GroupRecord sweep_group(const CatalogEntry& entry, const std::vector<std::string>& claims,
                        const SweepOptions& options) {
  GroupRecord rec;
  const FiniteGroup& g = entry.group;
  rec.label = g.label();
  rec.order = g.order();
  rec.family = entry.family;
  try {
    const GroupAnalysis a(g, AnalysisOptions{options.subgroup_cap});
    rec.profile = a.profile().counts();
    for (const auto& [m, e] : a.frobenius().entries()) rec.solutions[m] = e.solutions;
    rec.cyclic = a.cyclic();
    rec.nilpotent = a.nilpotent();
    rec.solvable = a.solvable();
    rec.cyclic_subgroups = cyclic_subgroup_count(a.profile(), g.order());
    rec.order_product = product_of_orders(a.profile());
    for (const auto& [r, s] : options.grid) {
      rec.values.push_back({r, s, r_functional(a.profile(), g.order(), r, s),
                            t_functional(a.profile(), g.order(), r, s)});
    }
    for (const std::string& claim : claims) {
      try {
        run_claim(claim, entry, a, options, rec);
      } catch (const std::exception& e) {
        rec.errors.push_back(claim + ": " + e.what());
      }
    }
  } catch (const std::exception& e) {
    rec.errors.push_back(e.what());
  }
  std::stable_sort(rec.verdicts.begin(), rec.verdicts.end(),
                   [](const TheoremVerdict& x, const TheoremVerdict& y) { return x.claim_id < y.claim_id; });
  return rec;
}

Report run_sweep(const Catalog& catalog, const SweepOptions& options) {
  Report report;
  report.tool_version = tool_version();
  report.claims = resolve_claims(options.claims);
  report.grid = options.grid;
  report.catalog_errors = catalog.errors;

  const std::size_t count = catalog.entries.size();
  report.groups.resize(count);
  const std::size_t workers =
      std::max<std::size_t>(1, std::min(options.workers ? options.workers : default_worker_count(), count));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      report.groups[i] = sweep_group(catalog.entries[i], report.claims, options);
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  std::stable_sort(report.groups.begin(), report.groups.end(),
                   [](const GroupRecord& x, const GroupRecord& y) { return x.label < y.label; });
  summarize(report);
  return report;
}

}  // namespace orderinv
