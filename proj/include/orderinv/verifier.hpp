#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orderinv/exact_scalar.hpp"
#include "orderinv/group.hpp"
#include "orderinv/order_stats.hpp"
#include "orderinv/structure.hpp"

namespace orderinv {

/// Claim identifiers used in verdicts, reports and on the command line.
namespace claims {
inline constexpr const char* frobenius = "frobenius-divisibility";
inline constexpr const char* min_cyclic_subgroups = "cyclic-subgroup-minimum";
inline constexpr const char* order_product = "order-product-maximum";
inline constexpr const char* unique_cyclic = "unique-cyclic-subgroups";
inline constexpr const char* nilpotent_unique = "nilpotent-unique-subgroup";
inline constexpr const char* cyclic_maximality = "cyclic-maximality";
inline constexpr const char* nilpotent_sign = "nilpotent-sign";
inline constexpr const char* cyclic_count_equivalence = "cyclic-count-equivalence";
inline constexpr const char* moebius_expansion = "moebius-expansion";
inline constexpr const char* balanced_point = "balanced-point";
inline constexpr const char* inverting_semidirect = "inverting-semidirect";
inline constexpr const char* divisibility_matching = "divisibility-matching";

const std::vector<std::string>& all();
bool known(const std::string& id);
}  // namespace claims

enum class Sign { negative, zero, positive };
enum class Mode { exact, approximate };

std::string to_string(Sign s);
std::string to_string(Mode m);
Sign sign_of(const ExactScalar& v);

struct TheoremVerdict {
  std::string claim_id;
  std::string group_label;
  std::optional<std::uint64_t> n;
  std::optional<ExactScalar> r;
  std::optional<ExactScalar> s;
  Sign sign_of_t = Sign::zero;
  bool inequality_holds = false;
  bool equality_condition_holds = false;
  /// Analytic side and structural side agree the way the claim says.
  bool consistent = false;
  Mode mode = Mode::exact;
  /// Which equality criterion was evaluated, e.g. "unitary-f+subgroups".
  std::string criterion;
  std::vector<std::pair<std::string, std::string>> witness;

  friend bool operator==(const TheoremVerdict&, const TheoremVerdict&) = default;
};

struct AnalysisOptions {
  std::size_t subgroup_cap = default_subgroup_cap;
};

/// Everything the checks read about one group, computed once. Subgroups are
/// enumerated on first use and only when the group is within the cap.
class GroupAnalysis {
 public:
  /// Keeps a reference to `g`, which must outlive the analysis.
  explicit GroupAnalysis(const FiniteGroup& g, AnalysisOptions options = {});
  GroupAnalysis(FiniteGroup&&, AnalysisOptions = {}) = delete;
  GroupAnalysis(const GroupAnalysis&) = delete;
  GroupAnalysis& operator=(const GroupAnalysis&) = delete;

  const FiniteGroup& group() const { return group_; }
  const OrderProfile& profile() const { return profile_; }
  const FrobeniusTable& frobenius() const { return frobenius_; }
  bool cyclic() const { return cyclic_; }
  bool nilpotent() const { return nilpotent_; }
  bool solvable() const { return solvable_; }

  /// nullptr when the group is above the subgroup enumeration cap.
  const std::vector<Subgroup>* subgroups() const;

 private:
  const FiniteGroup& group_;
  AnalysisOptions options_;
  OrderProfile profile_;
  FrobeniusTable frobenius_;
  bool cyclic_;
  bool nilpotent_;
  bool solvable_;
  mutable std::once_flag subgroups_once_;
  mutable std::optional<std::vector<Subgroup>> subgroups_;
};

/// s < r and s <= 0: T_{G,n}(r,s) >= 0, zero exactly when c_m = 1 for all m | n.
TheoremVerdict check_case1(const GroupAnalysis& a, std::uint64_t n, const ExactScalar& r,
                           const ExactScalar& s);
/// s = r < 0: T_{G,n}(r,r) >= 0, zero exactly when G has a unique subgroup of
/// order n and it is nilpotent. Both the unitary-divisor criterion and (when
/// within the cap) subgroup enumeration are evaluated and must agree.
TheoremVerdict check_case2(const GroupAnalysis& a, std::uint64_t n, const ExactScalar& r);
/// r <= s - 1 and s >= 1: T_G(r,s) <= 0, zero exactly when G is cyclic.
TheoremVerdict check_case3(const GroupAnalysis& a, const ExactScalar& r, const ExactScalar& s);
/// G nilpotent and not cyclic: sign T_G(r,s) = sign(r - s).
TheoremVerdict check_case4(const GroupAnalysis& a, const ExactScalar& r, const ExactScalar& s);

TheoremVerdict check_min_cyclic_subgroups(const GroupAnalysis& a);
TheoremVerdict check_cyclic_count_equivalence(const GroupAnalysis& a, std::uint64_t n);
TheoremVerdict check_product_theorem(const GroupAnalysis& a);
TheoremVerdict check_frobenius(const GroupAnalysis& a);
/// sum_{k|n} g_{k,n/k} B(k) against the direct divisor sum, integer (r,s).
TheoremVerdict check_moebius_expansion(const GroupAnalysis& a, const ExactScalar& r,
                                       const ExactScalar& s);
/// T_G(1,1) vanishes for nilpotent groups; recorded without assertion otherwise.
TheoremVerdict check_balanced_point(const GroupAnalysis& a);

/// Builds the inverting semidirect product, counts its cyclic subgroups by
/// brute force against d(|G|) + d(beta)(m - d(m)), and compares T_G(r,s) with
/// 2^{us} / phi(2^u)^{r-1} (m - sigma(m)) sigma(beta) on `grid`.
TheoremVerdict check_semidirect_count(
    const SemidirectParams& params,
    const std::vector<std::pair<ExactScalar, ExactScalar>>& grid,
    const GroupOptions& options = {});

/// Same comparison on an already analysed group built from `params`.
TheoremVerdict check_semidirect_count(
    const GroupAnalysis& a, const SemidirectParams& params,
    const std::vector<std::pair<ExactScalar, ExactScalar>>& grid);

/// Closed form of T_G(r,s) for the inverting semidirect product.
ExactScalar semidirect_t_closed_form(const SemidirectParams& params, const ExactScalar& r,
                                     const ExactScalar& s);
std::uint64_t semidirect_cyclic_count_formula(const SemidirectParams& params);

/// Integer grid [lo, hi]^2.
std::vector<std::pair<ExactScalar, ExactScalar>> integer_grid(long lo = -3, long hi = 3);

}  // namespace orderinv
