#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orderinv/catalog.hpp"
#include "orderinv/report.hpp"

namespace orderinv {

using Grid = std::vector<std::pair<ExactScalar, ExactScalar>>;

struct SweepOptions {
  /// Claim ids to run; empty means all of them.
  std::vector<std::string> claims;
  Grid grid = integer_grid();
  /// 0 picks ORDERINV_WORKERS or the hardware concurrency.
  std::size_t workers = 0;
  /// Groups up to this order are checked at every divisor n of |G|.
  std::uint64_t divisor_sweep_max_order = 48;
  std::size_t subgroup_cap = default_subgroup_cap;
};

/// "default" ([-3,3]^2), "int:a..b" (integer square), or explicit points
/// "r:s,r:s" with rational or decimal coordinates; pieces joined by '+'.
/// Duplicate points are dropped, order of first appearance is kept.
Grid parse_grid(std::string_view text);

/// Worker count from ORDERINV_WORKERS when set, else the hardware count.
std::size_t default_worker_count();

/// Every requested claim on every catalog group at every applicable grid
/// point. Groups are analysed in parallel and merged by label, so the
/// report does not depend on the worker count. Throws InvalidArgument for
/// an unknown claim id.
Report run_sweep(const Catalog& catalog, const SweepOptions& options = {});

/// Analyses one group (the unit of work of run_sweep).
GroupRecord sweep_group(const CatalogEntry& entry, const std::vector<std::string>& claims,
                        const SweepOptions& options);

}  // namespace orderinv
