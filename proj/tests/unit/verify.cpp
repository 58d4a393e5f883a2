#include <doctest.h>

#include <set>

#include <nlohmann/json.hpp>

#include "stairgf/paperdata.hpp"
#include "stairgf/verify.hpp"

using namespace stairgf;

TEST_SUITE("verify") {
  TEST_CASE("catalog ids are unique") {
    std::set<std::string> ids;
    for (const auto& c : check_catalog()) {
      CHECK(ids.insert(c.id).second);
      CHECK_FALSE(c.statement.empty());
    }
    CHECK(ids.size() == 30);
  }

  TEST_CASE("single checks") {
    CHECK(run_check("R1", 40).passed());
    CheckReport m4 = run_check("M4", 40);
    CHECK(m4.passed());
    CHECK_FALSE(m4.witness.has_value());
    CHECK_THROWS_AS(run_check("nonexistent", 10), UnknownNameError);
    CHECK_THROWS_AS(run_check("R1", 0), DomainError);
  }

  TEST_CASE("machine record is one json object") {
    CheckReport r = run_check("O5", 20);
    std::string line = r.to_machine();
    CHECK(line.find('\n') == std::string::npos);
    auto j = nlohmann::json::parse(line);
    CHECK(j["id"] == "O5");
    CHECK(j["status"] == "pass");
    CHECK(j["order_checked"] == 20);
  }

  TEST_CASE("low order run") {
    for (const auto& r : run_all(5)) {
      CHECK_MESSAGE(r.passed(), r.to_text());
      if (r.id[0] == 'R') CHECK(r.order_checked == 5);
    }
  }

  TEST_CASE("a corrupted fixture fails exactly its dependent checks") {
    Fixture f = get_fixture("P_P_series");
    const LaurentSeries& s = f.series();
    std::vector<Rational> c = s.coeffs();
    c[0] += 1;  // x^8: 1 -> 2
    f.payload = LaurentSeries(s.valuation(), c, s.trunc());
    override_fixture(f);
    std::set<std::string> failed;
    for (const auto& r : run_all(20)) {
      if (r.passed()) continue;
      failed.insert(r.id);
      REQUIRE(r.witness.has_value());
    }
    clear_fixture_overrides();
    std::string got;
    for (const auto& id : failed) got += id + " ";
    const std::set<std::string> expected{"R2", "R3", "R4", "S2"};
    CHECK_MESSAGE(failed == expected, got);
    CheckReport s2 = run_check("S2", 20);
    CHECK(s2.passed());
  }

  TEST_CASE("failure witness names the first bad coefficient") {
    Fixture f = get_fixture("Sol2_series");
    std::vector<Rational> c = f.series().coeffs();
    c[3] = c[3] * 2;
    f.payload = LaurentSeries(f.series().valuation(), c, f.series().trunc());
    override_fixture(f);
    CheckReport r = run_check("O2", 20);
    clear_fixture_overrides();
    REQUIRE_FALSE(r.passed());
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->exponent == f.series().valuation() + 3);
  }
}
