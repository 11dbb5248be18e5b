#include <doctest.h>

#include <cstdlib>
#include <filesystem>

#include "orderinv/error.hpp"
#include "orderinv/report.hpp"
#include "orderinv/sweep.hpp"

using namespace orderinv;

namespace {

const std::filesystem::path data_dir = ORDERINV_TEST_DATA;

Catalog small_catalog() {
  CatalogSpec spec = parse_catalog_spec("cyclic:1..12 dihedral:3..6 Q8 S4 A5 C3:C20 Q8xC3");
  spec.ingested = {data_dir / "loop5_nonassoc.json"};
  return build_catalog(spec);
}

const GroupRecord& record(const Report& r, const std::string& label) {
  for (const auto& g : r.groups) {
    if (g.label == label) return g;
  }
  FAIL("no record for " << label);
  return r.groups.front();
}

std::size_t count_claim(const GroupRecord& g, const std::string& claim) {
  std::size_t n = 0;
  for (const auto& v : g.verdicts) n += v.claim_id == claim;
  return n;
}

}  // namespace

TEST_SUITE("report_sweep") {
  TEST_CASE("grid parsing") {
    CHECK(parse_grid("default").size() == 49);
    CHECK(parse_grid("int:0..1").size() == 4);
    const Grid g = parse_grid("1/2:-1+0.5:-1+int:0..0");
    REQUIRE(g.size() == 2);
    CHECK(g[0].first == ExactScalar::ratio(1, 2));
    CHECK(g[0].second == ExactScalar(-1));
    CHECK(g[1].first == ExactScalar(0));
    CHECK_THROWS_AS(parse_grid("int:3..1"), Error);
    CHECK_THROWS_AS(parse_grid("1:2:3"), Error);
  }

  TEST_CASE("scalar and factored serialization") {
    CHECK(scalar_to_json(ExactScalar(21)) == "21/1");
    CHECK(scalar_to_json(ExactScalar::ratio(-3, 4)) == "-3/4");
    CHECK(scalar_to_json(ExactScalar::approx(0.25)).is_number());
    CHECK(scalar_from_json("5/6") == ExactScalar::ratio(5, 6));
    CHECK(scalar_from_json(nlohmann::json(0.1)) == ExactScalar::approx(0.1));
    const FactoredInteger f = FactoredInteger::of(648);
    CHECK(to_json(f) == nlohmann::json{{"2", "3"}, {"3", "4"}});
    CHECK(factored_from_json(to_json(f)) == f);
  }

  TEST_CASE("sweep over a small catalog") {
    const Catalog c = small_catalog();
    REQUIRE(c.errors.size() == 1);
    SweepOptions options;
    options.workers = 2;
    const Report r = run_sweep(c, options);
    CHECK(r.summary.groups == c.entries.size());
    CHECK(r.summary.inconsistent == 0);
    CHECK(r.summary.anomalies.empty());
    CHECK(r.summary.exit_status == 0);
    CHECK(r.summary.catalog_errors == 1);
    CHECK(r.catalog_errors.front().kind == "NotAssociative");
    CHECK(std::is_sorted(r.groups.begin(), r.groups.end(),
                         [](const GroupRecord& a, const GroupRecord& b) { return a.label < b.label; }));

    const auto& s4 = record(r, "S4");
    CHECK(s4.solvable);
    CHECK_FALSE(s4.nilpotent);
    REQUIRE(s4.matching);
    CHECK(s4.matching_verified);
    CHECK(count_claim(s4, claims::nilpotent_sign) == 0);
    CHECK(std::find(s4.not_applicable.begin(), s4.not_applicable.end(), claims::nilpotent_sign) !=
          s4.not_applicable.end());
    CHECK(std::find(s4.not_applicable.begin(), s4.not_applicable.end(), claims::inverting_semidirect) !=
          s4.not_applicable.end());

    const auto& q8 = record(r, "Q8");
    CHECK(count_claim(q8, claims::nilpotent_sign) == 49);
    // n runs over the four divisors of 8 at the 18 integer points with s < r, s <= 0.
    CHECK(count_claim(q8, claims::unique_cyclic) == 4 * 18);
    CHECK(count_claim(q8, claims::cyclic_count_equivalence) == 4);

    const auto& sd = record(r, "C3:C20");
    CHECK(count_claim(sd, claims::inverting_semidirect) == 1);

    const auto& a5 = record(r, "A5");
    CHECK_FALSE(a5.solvable);
    REQUIRE(a5.matching);
    CHECK(a5.matching->status == DivisibilityMatching::Status::found);

    const auto& s3 = record(r, "D3");
    CHECK(s3.cyclic_subgroups == 5);
    CHECK(s3.order_product.to_string() == "2^3*3^2");
    bool saw_point = false;
    for (const auto& v : s3.values) {
      if (v.r == ExactScalar(0) && v.s == ExactScalar(1)) {
        saw_point = true;
        CHECK(v.R == ExactScalar(13));
        CHECK(v.T == ExactScalar(-8));
      }
    }
    CHECK(saw_point);
  }

  TEST_CASE("report json round trip") {
    SweepOptions options;
    options.workers = 1;
    options.grid = parse_grid("int:-1..1+1/2:3/2");
    const Report r = run_sweep(small_catalog(), options);
    CHECK(r.summary.approximate > 0);
    const std::string text = render_json(r);
    CHECK(text.back() == '\n');
    const Report back = report_from_json(nlohmann::json::parse(text));
    CHECK(back == r);
    CHECK(render_json(back) == text);

    auto j = nlohmann::json::parse(text);
    j["schema_version"] = 99;
    CHECK_THROWS_AS(report_from_json(j), Error);
  }

  TEST_CASE("reports do not depend on the worker count") {
    const Catalog c = small_catalog();
    SweepOptions one;
    one.workers = 1;
    SweepOptions four;
    four.workers = 4;
    CHECK(render_json(run_sweep(c, one)) == render_json(run_sweep(c, four)));
  }

  TEST_CASE("claim selection") {
    SweepOptions options;
    options.workers = 1;
    options.claims = {claims::frobenius, claims::order_product};
    const Report r = run_sweep(small_catalog(), options);
    for (const auto& g : r.groups) {
      for (const auto& v : g.verdicts) {
        REQUIRE((v.claim_id == claims::frobenius || v.claim_id == claims::order_product));
      }
      REQUIRE_FALSE(g.matching);
    }
    options.claims = {"no-such-claim"};
    CHECK_THROWS_AS(run_sweep(small_catalog(), options), Error);
  }

  TEST_CASE("table rendering") {
    SweepOptions options;
    options.workers = 1;
    options.claims = {claims::frobenius};
    const std::string table = render_table(run_sweep(small_catalog(), options));
    CHECK(table.find("Q8xC3") != std::string::npos);
    CHECK(table.find("NotAssociative") != std::string::npos);
  }

  TEST_CASE("worker count from the environment") {
    ::setenv("ORDERINV_WORKERS", "3", 1);
    CHECK(default_worker_count() == 3);
    ::unsetenv("ORDERINV_WORKERS");
    CHECK(default_worker_count() >= 1);
  }
}
