#include <doctest.h>

#include <filesystem>
#include <map>

#include "orderinv/catalog.hpp"
#include "orderinv/error.hpp"
#include "orderinv/order_stats.hpp"
#include "orderinv/structure.hpp"

using namespace orderinv;

namespace {

const std::filesystem::path data_dir = ORDERINV_TEST_DATA;

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::invalid_argument;
}

}  // namespace

TEST_SUITE("catalog") {
  TEST_CASE("default catalog") {
    const Catalog c = build_catalog(default_catalog_spec());
    CHECK(c.errors.empty());
    CHECK(c.entries.size() >= 150);
    std::map<std::string, int> per_family;
    std::set<std::string> labels;
    for (const auto& e : c.entries) {
      ++per_family[e.family];
      REQUIRE(labels.insert(e.group.label()).second);
      if (e.family != "symmetric" && e.family != "alternating") REQUIRE(e.group.order() <= 64);
      if (e.semidirect) {
        REQUIRE(e.family == "semidirect");
        REQUIRE(e.group.order() == e.semidirect->order());
      }
    }
    CHECK(per_family["cyclic"] == 64);
    CHECK(per_family["quaternion"] == 4);
    CHECK(per_family["symmetric"] == 3);
    CHECK(per_family["alternating"] == 2);
    CHECK(per_family["semidirect"] > 20);
    CHECK(per_family["coprime-products"] > 20);
    for (const char* label : {"S3", "S5", "A4", "A5", "Q8", "Q64", "D32", "E2^6", "C3:C4", "C3:C10", "C64"}) {
      CAPTURE(label);
      CHECK(labels.count(label) == 1);
    }
    // D1 is C2 and E p^1 is C_p, so neither is listed.
    CHECK(labels.count("D1") == 0);
  }

  TEST_CASE("coprime products pair a non-cyclic factor with a coprime one") {
    const Catalog c = build_catalog(parse_catalog_spec("coprime-products:24"));
    CHECK(c.errors.empty());
    std::set<std::string> labels;
    for (const auto& e : c.entries) {
      labels.insert(e.group.label());
      REQUIRE(e.group.order() <= 24);
      REQUIRE_FALSE(is_cyclic(e.group));
    }
    CHECK(labels.count("D2xC3") == 1);
    CHECK(labels.count("S3xC2") == 0);
    CHECK(labels.count("Q8xC3") == 1);
    CHECK(labels.count("A4xC2") == 0);
  }

  TEST_CASE("spec parsing") {
    const auto spec = parse_catalog_spec("cyclic:1..4,9 dihedral:3@10; elementary:2,3/2..3 S3 tests/x.json");
    REQUIRE(spec.families.size() == 3);
    CHECK(spec.families[0].parameters == std::vector<std::vector<std::uint64_t>>{{1, 2, 3, 4, 9}});
    CHECK(spec.families[1].max_order == 10);
    CHECK(spec.families[2].parameters.size() == 2);
    CHECK(spec.groups == std::vector<std::string>{"S3"});
    CHECK(spec.ingested.size() == 1);
    CHECK(kind_of([] { parse_catalog_spec("bogus:3"); }) == ErrorKind::unknown_family);
    CHECK(kind_of([] { parse_catalog_spec("elementary:2"); }) == ErrorKind::parse_error);
    CHECK(kind_of([] { parse_catalog_spec("cyclic:a..b"); }) == ErrorKind::unknown_family);

    const Catalog c = build_catalog(parse_catalog_spec("cyclic:1..4,9 dihedral:3@10"));
    CHECK(c.entries.size() == 6);
    const Catalog d = build_catalog(parse_catalog_spec("dihedral:3..10@10"));
    CHECK(d.entries.size() == 3);
  }

  TEST_CASE("semidirect grids skip invalid parameters") {
    const Catalog c = build_catalog(parse_catalog_spec("semidirect:3,5/1,3,5/1,2"));
    CHECK(c.errors.empty());
    CHECK(c.entries.size() == 8);
    for (const auto& e : c.entries) {
      REQUIRE(e.semidirect);
      REQUIRE(std::gcd(e.semidirect->m, e.semidirect->beta) == 1);
    }
  }

  TEST_CASE("group expressions") {
    CHECK(parse_group_expression("S3").group.order() == 6);
    CHECK(parse_group_expression("Q8xC3").group.label() == "Q8xC3");
    CHECK(parse_group_expression("Q8xC3").family == "product");
    CHECK(parse_group_expression("E2^3").group.order() == 8);
    const auto sd = parse_group_expression("C3:C20");
    REQUIRE(sd.semidirect);
    CHECK(*sd.semidirect == SemidirectParams{3, 5, 2});
    CHECK(sd.group.order() == 60);
    CHECK(order_profile(parse_group_expression("D3").group) == order_profile(parse_group_expression("S3").group));
    CHECK(kind_of([] { parse_group_expression(""); }) == ErrorKind::parse_error);
    CHECK(kind_of([] { parse_group_expression("Z5"); }) == ErrorKind::parse_error);
    CHECK(kind_of([] { parse_group_expression("C3:C5"); }) == ErrorKind::parity_violated);
    CHECK(kind_of([] { parse_group_expression("C3:C6"); }) == ErrorKind::coprimality_violated);
    CHECK(kind_of([] { parse_group_expression("S9", {1000, false}); }) == ErrorKind::order_cap_exceeded);
  }

  TEST_CASE("json ingestion") {
    const auto s3 = load_group_file(data_dir / "s3_cayley.json");
    CHECK(s3.label() == "S3-table");
    CHECK(order_profile(s3) == order_profile(symmetric(3)));
    CHECK_FALSE(is_nilpotent(s3));
    const auto a5 = load_group_file(data_dir / "a5_perm.json");
    CHECK(a5.order() == 60);
    CHECK_FALSE(is_solvable(a5));
    CHECK(kind_of([] { load_group_file(data_dir / "loop5_nonassoc.json"); }) == ErrorKind::not_associative);
    CHECK(kind_of([] { load_group_file(data_dir / "truncated.json"); }) == ErrorKind::parse_error);
    CHECK(kind_of([] { load_group_file(data_dir / "missing.json"); }) == ErrorKind::io_error);
    CHECK(kind_of([] { group_from_json(nlohmann::json{{"order", 3}, {"table", {{0, 1}, {1, 0}}}}); }) ==
          ErrorKind::invalid_argument);
    CHECK(kind_of([] { group_from_json(nlohmann::json{{"table", "nope"}}); }) == ErrorKind::parse_error);
    CHECK(kind_of([] { group_from_json(nlohmann::json::array()); }) == ErrorKind::parse_error);

    const auto q8 = generalized_quaternion(8);
    const auto back = group_from_json(group_to_json(q8));
    CHECK(back.label() == "Q8");
    for (Element a = 0; a < 8; ++a) {
      for (Element b = 0; b < 8; ++b) REQUIRE(back.mul(a, b) == q8.mul(a, b));
    }
  }

  TEST_CASE("bad files are collected, not fatal") {
    CatalogSpec spec = parse_catalog_spec("S3 C4");
    spec.ingested = {data_dir / "loop5_nonassoc.json", data_dir / "truncated.json", data_dir / "a5_perm.json"};
    const Catalog c = build_catalog(spec);
    CHECK(c.entries.size() == 3);
    REQUIRE(c.errors.size() == 2);
    CHECK(c.errors[0].kind == "NotAssociative");
    CHECK(c.errors[1].kind == "ParseError");

    const Catalog dup = build_catalog(parse_catalog_spec("S3 S3 cyclic:3 C3"));
    CHECK(dup.entries.size() == 2);
  }

  TEST_CASE("resolve_group") {
    CHECK(resolve_group("A4").group.order() == 12);
    CHECK(resolve_group((data_dir / "s3_cayley.json").string()).group.order() == 6);
    CHECK(kind_of([] { resolve_group("nowhere/g.json"); }) == ErrorKind::io_error);
  }
}
