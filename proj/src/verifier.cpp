#include "orderinv/verifier.hpp"

#include <algorithm>
#include <cmath>

#include "orderinv/error.hpp"
#include "orderinv/numtheory.hpp"

namespace orderinv {

namespace {

// Strict signs in approximate mode are only trusted beyond this margin.
constexpr double approx_assert_margin = 1e-6;

Mode mode_for(const ExactScalar& r, const ExactScalar& s) {
  return r.is_integer() && s.is_integer() ? Mode::exact : Mode::approximate;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

TheoremVerdict start(const char* claim, const GroupAnalysis& a) {
  TheoremVerdict v;
  v.claim_id = claim;
  v.group_label = a.group().label();
  return v;
}

void require_divisor(const GroupAnalysis& a, std::uint64_t n) {
  if (n == 0 || a.group().order() % n != 0) {
    throw Error(ErrorKind::parameter_domain_violated,
                std::to_string(n) + " does not divide |G| = " + std::to_string(a.group().order()),
                {n});
  }
}

void domain_error(const std::string& claim, const ExactScalar& r, const ExactScalar& s,
                  const std::string& condition) {
  throw Error(ErrorKind::parameter_domain_violated,
              claim + " needs " + condition + ", got (r,s) = (" + r.to_string() + ", " +
                  s.to_string() + ")");
}

// T >= 0 (or <= 0 when `nonpositive`) with T = 0 iff `condition`.
void settle_signed(TheoremVerdict& v, const ExactScalar& t, bool condition, bool nonpositive) {
  v.sign_of_t = sign_of(t);
  v.equality_condition_holds = condition;
  v.witness.emplace_back("T", t.to_string());
  if (v.mode == Mode::exact) {
    const int sg = t.sign();
    v.inequality_holds = nonpositive ? sg <= 0 : sg >= 0;
    v.consistent = v.inequality_holds && ((sg == 0) == condition);
    return;
  }
  const double x = t.to_double();
  v.inequality_holds = nonpositive ? x < approx_assert_margin : x > -approx_assert_margin;
  // Equality is never asserted from a float: only a clearly nonzero T
  // contradicts the structural condition.
  v.consistent = v.inequality_holds && !(condition && std::abs(x) > approx_assert_margin);
}

}  // namespace

namespace claims {

const std::vector<std::string>& all() {
  static const std::vector<std::string> ids = {
      frobenius,         min_cyclic_subgroups, order_product,         unique_cyclic,
      nilpotent_unique,  cyclic_maximality,    nilpotent_sign,        cyclic_count_equivalence,
      moebius_expansion, balanced_point,       inverting_semidirect,  divisibility_matching,
  };
  return ids;
}

bool known(const std::string& id) {
  const auto& ids = all();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

}  // namespace claims

std::string to_string(Sign s) {
  switch (s) {
    case Sign::negative: return "neg";
    case Sign::zero: return "zero";
    case Sign::positive: return "pos";
  }
  return "?";
}

std::string to_string(Mode m) { return m == Mode::exact ? "exact" : "approximate"; }

Sign sign_of(const ExactScalar& v) {
  const int s = v.sign();
  return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero);
}

GroupAnalysis::GroupAnalysis(const FiniteGroup& g, AnalysisOptions options)
    : group_(g),
      options_(options),
      profile_(order_profile(g)),
      frobenius_(frobenius_table(profile_)),
      cyclic_(is_cyclic(g)),
      nilpotent_(is_nilpotent(g)),
      solvable_(is_solvable(g)) {}

const std::vector<Subgroup>* GroupAnalysis::subgroups() const {
  if (group_.order() > options_.subgroup_cap) return nullptr;
  std::call_once(subgroups_once_,
                 [this] { subgroups_ = enumerate_subgroups(group_, options_.subgroup_cap); });
  return &*subgroups_;
}

TheoremVerdict check_case1(const GroupAnalysis& a, std::uint64_t n, const ExactScalar& r,
                           const ExactScalar& s) {
  require_divisor(a, n);
  if (!(compare(s, r) < 0 && s.sign(0.0) <= 0)) {
    domain_error(claims::unique_cyclic, r, s, "s < r and s <= 0");
  }
  TheoremVerdict v = start(claims::unique_cyclic, a);
  v.n = n;
  v.r = r;
  v.s = s;
  v.mode = mode_for(r, s);
  v.criterion = "c_m=1";
  bool condition = true;
  for (std::uint64_t m : divisors(n)) {
    const std::uint64_t c = a.profile().cyclic_subgroups_of_order(m);
    if (c != 1) {
      condition = false;
      v.witness.emplace_back("c_" + std::to_string(m), std::to_string(c));
      break;
    }
  }
  settle_signed(v, t_functional(a.profile(), n, r, s), condition, false);
  return v;
}

TheoremVerdict check_case2(const GroupAnalysis& a, std::uint64_t n, const ExactScalar& r) {
  require_divisor(a, n);
  if (r.sign(0.0) >= 0) domain_error(claims::nilpotent_unique, r, r, "s = r < 0");
  TheoremVerdict v = start(claims::nilpotent_unique, a);
  v.n = n;
  v.r = r;
  v.s = r;
  v.mode = mode_for(r, r);

  // f(k) = 1 for every unitary divisor k of n.
  bool by_frobenius = true;
  for (std::uint64_t k : divisors(n)) {
    if (gcd(k, n / k) != 1) continue;
    if (a.frobenius().quotient(k) != 1) {
      by_frobenius = false;
      v.witness.emplace_back("f(" + std::to_string(k) + ")",
                             std::to_string(a.frobenius().quotient(k)));
      break;
    }
  }
  v.criterion = "unitary-f";

  std::optional<bool> by_structure;
  if (n == a.group().order()) {
    by_structure = a.nilpotent();
    v.criterion += "+nilpotency";
  } else if (const auto* subs = a.subgroups()) {
    const auto u = unique_subgroup_of_order(*subs, n);
    v.witness.emplace_back("subgroups_of_order_n", std::to_string(u.count));
    by_structure = u.kind == SubgroupUniqueness::Kind::unique &&
                   is_nilpotent(a.group(), *u.subgroup);
    v.criterion += "+subgroups";
  }

  settle_signed(v, t_functional(a.profile(), n, r, r), by_frobenius, false);
  if (by_structure && *by_structure != by_frobenius) {
    v.consistent = false;
    v.witness.emplace_back("routes_disagree", yes_no(*by_structure) + " vs " + yes_no(by_frobenius));
  }
  return v;
}

TheoremVerdict check_case3(const GroupAnalysis& a, const ExactScalar& r, const ExactScalar& s) {
  if (!(compare(r, s - ExactScalar(1)) <= 0 && compare(s, ExactScalar(1)) >= 0)) {
    domain_error(claims::cyclic_maximality, r, s, "r <= s - 1 and s >= 1");
  }
  TheoremVerdict v = start(claims::cyclic_maximality, a);
  v.n = a.group().order();
  v.r = r;
  v.s = s;
  v.mode = mode_for(r, s);
  v.criterion = "cyclic";
  settle_signed(v, t_functional(a.profile(), a.group().order(), r, s), a.cyclic(), true);
  return v;
}

TheoremVerdict check_case4(const GroupAnalysis& a, const ExactScalar& r, const ExactScalar& s) {
  if (!a.nilpotent() || a.cyclic()) {
    throw Error(ErrorKind::precondition_violated,
                "sign rule needs a nilpotent non-cyclic group, '" + a.group().label() + "' is " +
                    (a.cyclic() ? "cyclic" : "not nilpotent"));
  }
  TheoremVerdict v = start(claims::nilpotent_sign, a);
  v.n = a.group().order();
  v.r = r;
  v.s = s;
  v.mode = mode_for(r, s);
  v.criterion = "sign(r-s)";
  const ExactScalar t = t_functional(a.profile(), a.group().order(), r, s);
  const int expected = (r - s).sign(0.0);
  v.sign_of_t = sign_of(t);
  v.witness.emplace_back("T", t.to_string());
  v.equality_condition_holds = expected == 0;
  if (v.mode == Mode::exact) {
    v.inequality_holds = t.sign() == expected;
  } else {
    const int observed = t.sign(approx_assert_margin);
    v.inequality_holds = observed == 0 || observed == expected;
  }
  v.consistent = v.inequality_holds;
  return v;
}

TheoremVerdict check_min_cyclic_subgroups(const GroupAnalysis& a) {
  TheoremVerdict v = start(claims::min_cyclic_subgroups, a);
  const std::uint64_t n = a.group().order();
  v.n = n;
  v.criterion = "cyclic";
  const std::uint64_t count = cyclic_subgroup_count(a.profile(), n);
  const std::uint64_t d = divisor_count(n);
  v.sign_of_t = count > d ? Sign::positive : (count == d ? Sign::zero : Sign::negative);
  v.inequality_holds = count >= d;
  v.equality_condition_holds = a.cyclic();
  v.consistent = v.inequality_holds && ((count == d) == a.cyclic());
  v.witness.emplace_back("cyclic_subgroups", std::to_string(count));
  v.witness.emplace_back("d(n)", std::to_string(d));
  return v;
}

TheoremVerdict check_cyclic_count_equivalence(const GroupAnalysis& a, std::uint64_t n) {
  require_divisor(a, n);
  TheoremVerdict v = start(claims::cyclic_count_equivalence, a);
  v.n = n;
  v.criterion = "B(m)=m | count=d(n) | cyclic-span";
  const auto divs = divisors(n);
  const bool exact_solutions = std::all_of(divs.begin(), divs.end(), [&](std::uint64_t m) {
    return a.frobenius().solutions(m) == m;
  });
  const std::uint64_t count = cyclic_subgroup_count(a.profile(), n);
  const std::uint64_t d = divisor_count(n);
  const bool minimal_count = count == d;

  std::vector<Element> gens;
  for (Element x = 0; x < a.group().order(); ++x) {
    if (n % a.group().element_order(x) == 0) gens.push_back(x);
  }
  const Subgroup span = generated_subgroup(a.group(), gens);
  const bool has_generator = std::any_of(span.elements.begin(), span.elements.end(), [&](Element x) {
    return a.group().element_order(x) == span.order();
  });
  const bool cyclic_span = span.order() == n && has_generator;

  v.sign_of_t = count > d ? Sign::positive : (count == d ? Sign::zero : Sign::negative);
  v.inequality_holds = count >= d;
  v.equality_condition_holds = cyclic_span;
  v.consistent = v.inequality_holds && exact_solutions == minimal_count &&
                 minimal_count == cyclic_span;
  v.witness.emplace_back("B(m)=m", yes_no(exact_solutions));
  v.witness.emplace_back("cyclic_subgroups", std::to_string(count));
  v.witness.emplace_back("d(n)", std::to_string(d));
  v.witness.emplace_back("span_order", std::to_string(span.order()));
  v.witness.emplace_back("span_cyclic", yes_no(has_generator));
  return v;
}

TheoremVerdict check_product_theorem(const GroupAnalysis& a) {
  TheoremVerdict v = start(claims::order_product, a);
  const std::uint64_t n = a.group().order();
  v.n = n;
  v.criterion = "cyclic";
  const FactoredInteger pg = product_of_orders(a.profile());
  const FactoredInteger direct = product_of_orders_direct(a.profile());
  const FactoredInteger pc = product_of_orders(cyclic_order_profile(n));
  const bool dominated = pg.divides(pc);
  const bool equal = pg == pc;
  if (equal) {
    v.sign_of_t = Sign::zero;
  } else if (dominated) {
    v.sign_of_t = Sign::negative;
  } else {
    v.sign_of_t = pg.log() > pc.log() ? Sign::positive : Sign::negative;
  }
  v.inequality_holds = dominated;
  v.equality_condition_holds = a.cyclic();
  v.consistent = dominated && pg == direct && (equal == a.cyclic());
  v.witness.emplace_back("P_G", pg.to_string());
  v.witness.emplace_back("P_Cn", pc.to_string());
  if (!(pg == direct)) v.witness.emplace_back("P_G_direct", direct.to_string());
  return v;
}

TheoremVerdict check_frobenius(const GroupAnalysis& a) {
  TheoremVerdict v = start(claims::frobenius, a);
  v.n = a.group().order();
  v.criterion = "m|B(m)";
  bool all = true;
  std::uint64_t max_f = 0;
  for (const auto& [m, b] : solution_counts(a.profile())) {
    if (b % m != 0) {
      all = false;
      v.witness.emplace_back("B(" + std::to_string(m) + ")", std::to_string(b));
    } else {
      max_f = std::max(max_f, b / m);
    }
  }
  v.inequality_holds = all;
  v.equality_condition_holds = all;
  v.consistent = all;
  v.witness.emplace_back("max_f", std::to_string(max_f));
  return v;
}

TheoremVerdict check_moebius_expansion(const GroupAnalysis& a, const ExactScalar& r,
                                       const ExactScalar& s) {
  TheoremVerdict v = start(claims::moebius_expansion, a);
  const std::uint64_t n = a.group().order();
  v.n = n;
  v.r = r;
  v.s = s;
  v.criterion = "sum_k g_{k,n/k} B(k)";
  const ExactScalar direct = r_functional(a.profile(), n, r, s);
  const ExactScalar expanded = g_expansion(a.profile(), n, r, s);
  const bool same = direct == expanded;
  v.sign_of_t = sign_of(direct - expanded);
  v.inequality_holds = same;
  v.equality_condition_holds = same;
  v.consistent = same;
  v.witness.emplace_back("direct", direct.to_string());
  v.witness.emplace_back("expanded", expanded.to_string());
  return v;
}

TheoremVerdict check_balanced_point(const GroupAnalysis& a) {
  TheoremVerdict v = start(claims::balanced_point, a);
  v.n = a.group().order();
  v.r = ExactScalar(1);
  v.s = ExactScalar(1);
  v.criterion = a.nilpotent() ? "nilpotent" : "recorded";
  const ExactScalar t = t_functional(a.profile(), a.group().order(), 1, 1);
  v.sign_of_t = sign_of(t);
  v.inequality_holds = t.sign() <= 0;
  v.equality_condition_holds = a.nilpotent();
  v.consistent = a.nilpotent() ? t.sign() == 0 : true;
  v.witness.emplace_back("T", t.to_string());
  v.witness.emplace_back("asserted", yes_no(a.nilpotent()));
  return v;
}

std::uint64_t semidirect_cyclic_count_formula(const SemidirectParams& params) {
  return divisor_count(params.order()) +
         divisor_count(params.beta) * (params.m - divisor_count(params.m));
}

ExactScalar semidirect_t_closed_form(const SemidirectParams& params, const ExactScalar& r,
                                     const ExactScalar& s) {
  const std::uint64_t two_u = std::uint64_t{1} << params.u;
  return order_weight(two_u, r - ExactScalar(1), s) *
         (ExactScalar(params.m) - divisor_weight_sum(params.m, r, s)) *
         divisor_weight_sum(params.beta, r, s);
}

TheoremVerdict check_semidirect_count(
    const GroupAnalysis& a, const SemidirectParams& params,
    const std::vector<std::pair<ExactScalar, ExactScalar>>& grid) {
  validate_semidirect(params);
  if (a.group().order() != params.order()) {
    throw Error(ErrorKind::invalid_argument, "group order does not match the semidirect parameters");
  }
  TheoremVerdict v = start(claims::inverting_semidirect, a);
  v.n = a.group().order();
  v.criterion = "brute-force count + closed form T";
  const std::uint64_t brute = cyclic_subgroups(a.group()).size();
  const std::uint64_t from_profile = cyclic_subgroup_count(a.profile(), a.group().order());
  const std::uint64_t formula = semidirect_cyclic_count_formula(params);
  std::size_t mismatches = 0;
  bool any_approx = false;
  for (const auto& [r, s] : grid) {
    const ExactScalar t = t_functional(a.profile(), a.group().order(), r, s);
    const ExactScalar closed = semidirect_t_closed_form(params, r, s);
    if (mode_for(r, s) == Mode::approximate) {
      any_approx = true;
      const double scale = std::max(1.0, std::abs(closed.to_double()));
      if (std::abs(t.to_double() - closed.to_double()) > approx_margin * scale) ++mismatches;
    } else if (!(t == closed)) {
      ++mismatches;
      if (mismatches == 1) {
        v.witness.emplace_back("first_mismatch", "(" + r.to_string() + "," + s.to_string() +
                                                     "): " + t.to_string() + " vs " +
                                                     closed.to_string());
      }
    }
  }
  v.mode = any_approx ? Mode::approximate : Mode::exact;
  v.sign_of_t = brute > formula ? Sign::positive : (brute == formula ? Sign::zero : Sign::negative);
  v.inequality_holds = brute == formula && brute == from_profile;
  v.equality_condition_holds = mismatches == 0;
  v.consistent = v.inequality_holds && v.equality_condition_holds;
  v.witness.emplace_back("cyclic_subgroups", std::to_string(brute));
  v.witness.emplace_back("formula", std::to_string(formula));
  v.witness.emplace_back("grid_points", std::to_string(grid.size()));
  v.witness.emplace_back("grid_mismatches", std::to_string(mismatches));
  return v;
}

TheoremVerdict check_semidirect_count(
    const SemidirectParams& params,
    const std::vector<std::pair<ExactScalar, ExactScalar>>& grid, const GroupOptions& options) {
  const FiniteGroup g = inverting_semidirect(params, options);
  const GroupAnalysis a(g);
  return check_semidirect_count(a, params, grid);
}

std::vector<std::pair<ExactScalar, ExactScalar>> integer_grid(long lo, long hi) {
  std::vector<std::pair<ExactScalar, ExactScalar>> grid;
  for (long r = lo; r <= hi; ++r) {
    for (long s = lo; s <= hi; ++s) grid.emplace_back(ExactScalar(r), ExactScalar(s));
  }
  return grid;
}

}  // namespace orderinv
