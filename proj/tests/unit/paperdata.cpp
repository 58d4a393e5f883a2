#include <doctest.h>

#include <string>

#include "stairgf/paperdata.hpp"

using namespace stairgf;

TEST_SUITE("paperdata") {
  TEST_CASE("embedded file parses and its checksum holds") {
    const auto& all = all_fixtures();
    CHECK(all.size() >= 50);
    for (const auto& f : all) CHECK_FALSE(f.anchor.empty());
  }

  TEST_CASE("records round-trip byte for byte") {
    std::string text(embedded_fixture_text());
    size_t pos = 0;
    int records = 0;
    while (pos < text.size()) {
      size_t end = text.find('\n', pos);
      if (end == std::string::npos) end = text.size();
      std::string line = text.substr(pos, end - pos);
      pos = end + 1;
      if (line.empty() || line[0] == '#') continue;
      CHECK(serialize(parse_fixture(line)) == line);
      ++records;
    }
    CHECK(records == static_cast<int>(all_fixtures().size()));
  }

  TEST_CASE("checksum detects a changed record") {
    std::string text(embedded_fixture_text());
    auto at = text.find("6874");
    REQUIRE(at != std::string::npos);
    text[at] = '7';
    CHECK_THROWS_AS(parse_fixture_file(text), Error);
  }

  TEST_CASE("double entry rejects a coefficient typo") {
    CHECK_THROWS_AS(parse_fixture("p | polynomial | a | var=x;coeffs=1,2;at1=3;at2=6"), Error);
    CHECK_NOTHROW(parse_fixture("p | polynomial | a | var=x;coeffs=1,2;at1=3;at2=5"));
  }

  TEST_CASE("polynomial degrees equal their subscripts") {
    int seen = 0;
    for (const auto& f : all_fixtures()) {
      if (f.kind != FixtureKind::Polynomial) continue;
      std::string digits;
      for (char c : f.name)
        if (std::isdigit(static_cast<unsigned char>(c))) digits += c;
      REQUIRE_FALSE(digits.empty());
      CHECK_MESSAGE(f.polynomial().degree() == std::stoi(digits), f.name);
      ++seen;
    }
    CHECK(seen == 19);
  }

  TEST_CASE("p6 coefficients") {
    Polynomial expected({-2, 6, 60, -230, 660, -2913, 6874});
    CHECK(get_fixture("p6").polynomial() == expected);
  }

  TEST_CASE("published series fixtures") {
    const auto& pp = get_fixture("P_P_series").series();
    CHECK(pp.valuation() == 8);
    std::vector<Rational> want{1, 12, 94, 604, 3463, 18440, 93274};
    for (int n = 0; n < 7; ++n) CHECK(pp.coeff(8 + n) == want[static_cast<size_t>(n)]);

    const auto& y = get_fixture("Y_of_X");
    CHECK(y.var == "X");
    CHECK(y.series().valuation() == 5);
    CHECK(y.series().coeff(5) == 1);
    CHECK(y.series().coeff(6) == 20);
    CHECK(y.series().coeff(7) == 350);
  }

  TEST_CASE("operator orders") {
    const char* names[] = {"N3", "N2", "N1", "V2", "V2bar", "T2", "A1", "B1", "C1", "D1"};
    const int orders[] = {3, 2, 1, 2, 2, 2, 1, 1, 1, 1};
    for (int i = 0; i < 10; ++i) CHECK_MESSAGE(get_fixture(names[i]).op().order() == orders[i], names[i]);
  }

  TEST_CASE("singular factors of N2") {
    DiffOp n2 = get_fixture("N2").op();
    Polynomial den = n2.coeff(0).den();
    Polynomial quartic = Polynomial({1, -4}).pow(2);
    Polynomial cubic_factor({1, 1, 7});
    CHECK((den % Polynomial({Rational(1, 16), Rational(-1, 2), 1})).is_zero());
    CHECK((den % quartic.monic()).is_zero());
    CHECK((den % cubic_factor.monic()).is_zero());
    CHECK((den % get_fixture("p6").polynomial().monic()).is_zero());
  }

  TEST_CASE("unknown names list near matches") {
    try {
      get_fixture("p_6");
      FAIL("expected an error");
    } catch (const UnknownNameError& e) {
      CHECK(std::string(e.what()).find("p6") != std::string::npos);
    }
  }

  TEST_CASE("wrong kind accessors throw") {
    CHECK_THROWS_AS(get_fixture("p6").series(), Error);
    CHECK_THROWS_AS(get_fixture("N1").curve(), Error);
  }
}
