#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "orderinv/order_stats.hpp"

namespace orderinv {

/// Outcome of searching for a bijection G -> C_n with o(x) | o(f(x)),
/// worked out on order classes rather than single elements.
struct DivisibilityMatching {
  enum class Status { found, violated };

  /// Divisors D whose elements need more slots than the divisibility edges
  /// out of D can offer.
  struct HallViolation {
    std::vector<std::uint64_t> orders;
    std::uint64_t demand = 0;    // sum of A(d) over D
    std::uint64_t capacity = 0;  // sum of phi(e) over e reachable from D
    friend bool operator==(const HallViolation&, const HallViolation&) = default;
  };

  Status status = Status::violated;
  std::uint64_t group_order = 0;
  /// assignment[d][e]: number of elements of order d sent to slots of order e.
  std::map<std::uint64_t, std::map<std::uint64_t, std::uint64_t>> assignment;
  std::optional<HallViolation> violator;

  friend bool operator==(const DivisibilityMatching&, const DivisibilityMatching&) = default;
};

/// Max flow from order classes (supply A(d)) to cyclic slots (capacity
/// phi(e)) along edges d | e, with breadth-first augmenting paths. On
/// failure the source side of the minimum cut, pruned to an inclusion-minimal
/// deficient set, is returned as the certificate.
DivisibilityMatching find_divisibility_matching(const OrderProfile& p);

/// Re-checks a found matching from scratch: row sums equal A(d), column sums
/// equal phi(e), and every used edge satisfies d | e.
bool verify_matching(const OrderProfile& p, const DivisibilityMatching& m);

/// Checks that a violation certificate really is deficient.
bool verify_violation(const OrderProfile& p, const DivisibilityMatching::HallViolation& v);

}  // namespace orderinv
