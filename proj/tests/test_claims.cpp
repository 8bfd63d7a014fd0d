#include <doctest.h>

#include "softtop/claims.hpp"
#include "softtop/io.hpp"

using namespace softtop;

TEST_CASE("every asserted claim passes at bound 3; CN5 reports findings") {
  auto reports = verify_all(3);
  REQUIRE(reports.size() == claim_catalog().size());
  for (const auto& r : reports) {
    CAPTURE(r.claim_id);
    CHECK(r.instances > 0);
    if (r.claim_id == "CN5") {
      CHECK(r.observe);
      CHECK(r.findings.size() == 3);
    } else {
      CHECK(r.verdict == Verdict::pass);
      CHECK_FALSE(r.witness);
    }
  }
}

TEST_CASE("report format") {
  auto r = verify_claim("CN1", 2);
  CHECK(format_report(r) == "claim=CN1 bound=2 verdict=PASS witness=-\n  instances: 9\n");
}

TEST_CASE("the literal split theorem fails on the discrete two-point space") {
  auto r = verify_claim("CN5", 2);
  REQUIRE(r.witness);
  CHECK(format_witness(*r.witness) ==
        "ground Z=a,b E=e1 | T [{e1:{}}, {e1:{a}}, {e1:{b}}, {e1:{a,b}}] | Y {e1:{a}}");
  CHECK(replay_witness("CN5", *r.witness));
  CHECK(r.verdict == Verdict::counterexample);
  CHECK(r.observe);
}

TEST_CASE("witness round trip and replay") {
  const std::string text =
      "ground Z=a,b E=e1 | T [{e1:{}}, {e1:{a,b}}] | Y {e1:{a}} | f p=1,0 q=0";
  Witness w = parse_witness(text);
  CHECK(format_witness(w) == text);
  CHECK(w.map->elem_map() == std::vector<std::size_t>{1, 0});
  CHECK_FALSE(replay_witness("FUN1", w));
  CHECK_FALSE(replay_witness("DUAL1", w));
  CHECK_FALSE(replay_witness("CN4", w));
  // Indiscrete two-point space: neither open, both halves connected.
  CHECK_FALSE(replay_witness("CN5", w));
  CHECK_THROWS_AS(parse_witness("ground Z=a E=e1 | Q nonsense"), InputError);
  CHECK_THROWS_AS(replay_witness("XX9", w), InputError);
}

TEST_CASE("bounds") {
  CHECK_THROWS_AS(verify_claim("CN1", 5), CapacityError);
  CHECK_THROWS_AS(verify_claim("CN1", 0), InputError);
}

TEST_CASE("reports do not depend on the worker count") {
  for (const char* id : {"LAT1", "MC3", "CN3", "CN5"}) {
    CAPTURE(id);
    const auto serial = format_report(verify_claim(id, 3, {1}));
    CHECK(format_report(verify_claim(id, 3, {2})) == serial);
    CHECK(format_report(verify_claim(id, 3, {4})) == serial);
  }
}
