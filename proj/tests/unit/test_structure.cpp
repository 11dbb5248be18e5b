#include <doctest.h>

#include "oracles.hpp"
#include "orderinv/error.hpp"
#include "orderinv/structure.hpp"

using namespace orderinv;

namespace {

std::vector<FiniteGroup> sample_groups() {
  return {cyclic(1),
          cyclic(8),
          cyclic(15),
          dihedral(3),
          dihedral(4),
          dihedral(5),
          dihedral(6),
          generalized_quaternion(8),
          generalized_quaternion(16),
          elementary_abelian(2, 3),
          symmetric(3),
          symmetric(4),
          alternating(4),
          inverting_semidirect({3, 1, 2}),
          inverting_semidirect({3, 5, 1}),
          direct_product(generalized_quaternion(8), cyclic(3)),
          direct_product(symmetric(3), cyclic(5)),
          direct_product(cyclic(2), cyclic(4))};
}

std::set<std::vector<Element>> as_set(const std::vector<Subgroup>& subs) {
  std::set<std::vector<Element>> out;
  for (const auto& h : subs) out.insert(h.elements);
  return out;
}

}  // namespace

TEST_SUITE("structure") {
  TEST_CASE("cyclicity") {
    CHECK(is_cyclic(cyclic(1)));
    CHECK(is_cyclic(cyclic(30)));
    CHECK(is_cyclic(direct_product(cyclic(4), cyclic(3))));
    CHECK_FALSE(is_cyclic(direct_product(cyclic(2), cyclic(2))));
    CHECK_FALSE(is_cyclic(symmetric(3)));
    CHECK_FALSE(is_cyclic(generalized_quaternion(8)));
  }

  TEST_CASE("nilpotency and solvability against series oracles") {
    CHECK(is_nilpotent(generalized_quaternion(8)));
    CHECK(is_nilpotent(dihedral(4)));
    CHECK_FALSE(is_nilpotent(symmetric(3)));
    CHECK_FALSE(is_nilpotent(dihedral(6)));
    CHECK(is_solvable(symmetric(4)));
    CHECK_FALSE(is_solvable(alternating(5)));
    CHECK_FALSE(is_solvable(symmetric(5)));
    for (const auto& g : sample_groups()) {
      CAPTURE(g.label());
      REQUIRE(is_nilpotent(g) == oracle::nilpotent(g));
      REQUIRE(is_solvable(g) == oracle::solvable(g));
    }
    CHECK(oracle::solvable(alternating(5)) == false);
  }

  TEST_CASE("nilpotency of a subgroup") {
    const auto s4 = symmetric(4);
    const auto subs = enumerate_subgroups(s4);
    for (const auto& h : subs) {
      // Subgroups of S4 of order 1, 2, 3, 4 and 8 are nilpotent; 6, 12, 24 are not.
      const bool want = h.order() != 6 && h.order() != 12 && h.order() != 24;
      CAPTURE(h.order());
      REQUIRE(is_nilpotent(s4, h) == want);
    }
  }

  TEST_CASE("generated subgroups") {
    const auto s3 = symmetric(3);
    for (Element a = 0; a < s3.order(); ++a) {
      for (Element b = 0; b < s3.order(); ++b) {
        const std::vector<Element> gens{a, b};
        REQUIRE(generated_subgroup(s3, gens).elements == oracle::closure(s3, gens));
      }
    }
    CHECK(whole_group(s3).order() == 6);
    CHECK(generated_subgroup(s3, std::vector<Element>{}).order() == 1);
    CHECK(whole_group(s3).contains(5));
  }

  TEST_CASE("cyclic subgroups against enumeration") {
    for (const auto& g : sample_groups()) {
      REQUIRE(as_set(cyclic_subgroups(g)) == oracle::cyclic_subgroups(g));
    }
  }

  TEST_CASE("subgroup lattices") {
    CHECK(enumerate_subgroups(symmetric(3)).size() == 6);
    CHECK(enumerate_subgroups(elementary_abelian(2, 2)).size() == 5);
    CHECK(enumerate_subgroups(generalized_quaternion(8)).size() == 6);
    CHECK(enumerate_subgroups(dihedral(4)).size() == 10);
    CHECK(enumerate_subgroups(alternating(4)).size() == 10);
    CHECK(enumerate_subgroups(symmetric(4)).size() == 30);
    for (std::uint64_t n = 1; n <= 40; ++n) {
      REQUIRE(enumerate_subgroups(cyclic(n)).size() == oracle::divisors(n).size());
    }
    for (const auto& g : sample_groups()) {
      if (g.order() > 24) continue;
      CAPTURE(g.label());
      const auto subs = enumerate_subgroups(g);
      REQUIRE(as_set(subs) == oracle::subgroups(g));
      REQUIRE(std::is_sorted(subs.begin(), subs.end(), [](const Subgroup& a, const Subgroup& b) {
        return std::pair(a.order(), a.elements) < std::pair(b.order(), b.elements);
      }));
    }
    CHECK_THROWS_AS(enumerate_subgroups(symmetric(4), 10), Error);
  }

  TEST_CASE("unique subgroups of a given order") {
    const auto s3 = symmetric(3);
    const auto three = unique_subgroup_of_order(s3, 3);
    CHECK(three.kind == SubgroupUniqueness::Kind::unique);
    REQUIRE(three.subgroup);
    CHECK(three.subgroup->order() == 3);
    const auto two = unique_subgroup_of_order(s3, 2);
    CHECK(two.kind == SubgroupUniqueness::Kind::multiple);
    CHECK(two.count == 3);
    CHECK(unique_subgroup_of_order(s3, 4).kind == SubgroupUniqueness::Kind::none);
    CHECK(unique_subgroup_of_order(generalized_quaternion(8), 2).kind == SubgroupUniqueness::Kind::unique);
    CHECK(unique_subgroup_of_order(generalized_quaternion(8), 4).count == 3);
    CHECK(unique_subgroup_of_order(alternating(4), 4).kind == SubgroupUniqueness::Kind::unique);
    CHECK(unique_subgroup_of_order(alternating(4), 6).kind == SubgroupUniqueness::Kind::none);
    const auto subs = enumerate_subgroups(dihedral(4));
    CHECK(unique_subgroup_of_order(subs, 4).count == 3);
  }
}
