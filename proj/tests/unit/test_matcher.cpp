#include <doctest.h>

#include <optional>
#include <random>

#include "oracles.hpp"
#include "orderinv/matcher.hpp"

using namespace orderinv;

namespace {

/// Random profile passing the constructor checks (keys divide n, A(1) = 1,
/// phi(d) | A(d)); not necessarily the profile of a group.
std::optional<OrderProfile> random_profile(std::uint64_t n, std::mt19937_64& rng) {
  OrderProfile::Counts counts{{1, 1}};
  std::uint64_t left = n - 1;
  auto divs = oracle::divisors(n);
  std::shuffle(divs.begin(), divs.end(), rng);
  for (std::uint64_t d : divs) {
    if (d == 1) continue;
    const std::uint64_t phi = oracle::totient(d);
    std::uniform_int_distribution<std::uint64_t> pick(0, left / phi);
    const std::uint64_t k = pick(rng);
    if (k > 0) counts[d] = k * phi;
    left -= k * phi;
  }
  if (left != 0) {
    if (n % 2 != 0) return std::nullopt;
    counts[2] += left;
  }
  return OrderProfile(n, counts);
}

std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>> classes(const OrderProfile& p) {
  std::vector<std::uint64_t> orders, supply;
  for (const auto& [d, a] : p.counts()) {
    orders.push_back(d);
    supply.push_back(a);
  }
  return {orders, supply};
}

}  // namespace

TEST_SUITE("matcher") {
  TEST_CASE("S3 matching") {
    const auto p = order_profile(symmetric(3));
    const auto m = find_divisibility_matching(p);
    REQUIRE(m.status == DivisibilityMatching::Status::found);
    CHECK(m.group_order == 6);
    CHECK(verify_matching(p, m));
    // Order-3 elements must land on the two generators of order 6 or the
    // two of order 3; the three involutions take the rest.
    std::uint64_t total = 0;
    for (const auto& [d, row] : m.assignment) {
      for (const auto& [e, c] : row) {
        CHECK(e % d == 0);
        total += c;
      }
    }
    CHECK(total == 6);
    CHECK_FALSE(m.violator);
  }

  TEST_CASE("real groups all match") {
    for (const auto& g : {cyclic(12), dihedral(6), generalized_quaternion(16), elementary_abelian(2, 4), symmetric(4),
                          alternating(4), alternating(5), symmetric(5), inverting_semidirect({5, 3, 2})}) {
      const auto p = order_profile(g);
      const auto m = find_divisibility_matching(p);
      CAPTURE(g.label());
      REQUIRE(m.status == DivisibilityMatching::Status::found);
      REQUIRE(verify_matching(p, m));
    }
  }

  TEST_CASE("deficient profile yields a certificate") {
    const OrderProfile bad(6, {{1, 1}, {2, 5}});
    const auto m = find_divisibility_matching(bad);
    REQUIRE(m.status == DivisibilityMatching::Status::violated);
    REQUIRE(m.violator);
    CHECK(m.violator->orders == std::vector<std::uint64_t>{2});
    CHECK(m.violator->demand == 5);
    CHECK(m.violator->capacity == 3);
    CHECK(verify_violation(bad, *m.violator));
    CHECK_FALSE(verify_matching(bad, m));
  }

  TEST_CASE("flow agrees with Hall's condition on random profiles") {
    std::mt19937_64 rng(2024);
    int found = 0, violated = 0;
    for (int trial = 0; trial < 3000; ++trial) {
      const std::uint64_t n = std::uniform_int_distribution<std::uint64_t>(2, 48)(rng);
      const auto p = random_profile(n, rng);
      if (!p) continue;
      const auto [orders, supply] = classes(*p);
      const bool hall = oracle::hall_condition(orders, supply, n);
      const auto m = find_divisibility_matching(*p);
      CAPTURE(n);
      REQUIRE((m.status == DivisibilityMatching::Status::found) == hall);
      if (hall) {
        ++found;
        REQUIRE(verify_matching(*p, m));
      } else {
        ++violated;
        REQUIRE(m.violator);
        REQUIRE(verify_violation(*p, *m.violator));
        // Inclusion-minimal: dropping any order class removes the deficiency.
        if (m.violator->orders.size() > 1) {
          for (std::size_t i = 0; i < m.violator->orders.size(); ++i) {
            auto smaller = *m.violator;
            smaller.orders.erase(smaller.orders.begin() + static_cast<std::ptrdiff_t>(i));
            smaller.demand = 0;
            std::set<std::uint64_t> reach;
            for (std::uint64_t d : smaller.orders) {
              smaller.demand += p->count(d);
              for (std::uint64_t e : oracle::divisors(n)) {
                if (e % d == 0) reach.insert(e);
              }
            }
            smaller.capacity = 0;
            for (std::uint64_t e : reach) smaller.capacity += oracle::totient(e);
            REQUIRE(smaller.demand <= smaller.capacity);
          }
        }
      }
    }
    CHECK(found > 100);
    CHECK(violated > 100);
  }

  TEST_CASE("corrupted certificates are rejected") {
    const auto p = order_profile(dihedral(4));
    auto m = find_divisibility_matching(p);
    REQUIRE(verify_matching(p, m));

    auto moved = m;
    auto& row = moved.assignment.begin()->second;
    row.begin()->second += 1;
    CHECK_FALSE(verify_matching(p, moved));

    // Send an involution to the identity slot.
    auto bad_edge = m;
    bad_edge.assignment[1].clear();
    bad_edge.assignment[2][1] = 1;
    bad_edge.assignment[1][2] = 1;
    bad_edge.assignment[2][2] -= bad_edge.assignment[2][2] > 0 ? 1 : 0;
    CHECK_FALSE(verify_matching(p, bad_edge));

    auto wrong_status = m;
    wrong_status.status = DivisibilityMatching::Status::violated;
    CHECK_FALSE(verify_matching(p, wrong_status));

    const DivisibilityMatching::HallViolation fake{{2}, 5, 3};
    CHECK_FALSE(verify_violation(p, fake));
    CHECK_FALSE(verify_violation(OrderProfile(6, {{1, 1}, {2, 5}}), {{2}, 5, 1}));
  }
}
