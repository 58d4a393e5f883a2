#include <doctest.h>

#include <set>

#include "stairgf/polygons.hpp"

using namespace stairgf;

namespace {

Integer catalan(int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(2 * k), static_cast<unsigned long>(k));
  return r / (k + 1);
}

LatticePolygon unit_square() { return {{{0, 0}, {1, 0}, {1, 1}, {0, 1}}}; }

}  // namespace

TEST_SUITE("polygons") {
  TEST_CASE("lattice polygon basics") {
    LatticePolygon sq = unit_square();
    CHECK(sq.is_valid());
    CHECK(sq.perimeter() == 4);
    CHECK_FALSE(sq.contains_strictly({0, 0}));
    LatticePolygon big{{{0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 2}, {0, 1}}};
    CHECK(big.is_valid());
    CHECK(big.contains_strictly({1, 1}));
    CHECK_FALSE(big.contains_strictly({0, 1}));
    CHECK_FALSE(big.contains_strictly({3, 1}));
    LatticePolygon broken{{{0, 0}, {2, 0}, {2, 1}, {0, 1}}};
    CHECK_FALSE(broken.is_valid());
    LatticePolygon t = big.translated(5, -3);
    CHECK(t.is_valid());
    CHECK(t.contains_strictly({6, -2}));
  }

  TEST_CASE("staircase polygons are valid and counted by Catalan numbers") {
    for (int n = 2; n <= 9; ++n) {
      auto polys = staircase_polygons(n);
      CHECK(static_cast<long>(polys.size()) == catalan(n - 1).get_si());
      std::set<std::vector<Point>> shapes;
      for (const auto& p : polys) {
        CHECK(p.is_valid());
        CHECK(p.perimeter() == 2 * n);
        shapes.insert(p.cycle);
      }
      CHECK(shapes.size() == polys.size());
    }
  }

  TEST_CASE("staircase counts") {
    CountTable t = enumerate_staircase(12);
    CHECK(t[2] == 1);
    CHECK(t[3] == 2);
    CHECK(t[5] == 14);
    for (int n = 2; n <= 12; ++n) CHECK(t[n] == catalan(n - 1));
  }

  TEST_CASE("counts do not depend on the origin or on parallelism") {
    EnumOptions shifted;
    shifted.origin = {7, -4};
    CHECK(enumerate_staircase(9, shifted) == enumerate_staircase(9));
    EnumOptions par = shifted;
    par.parallel = true;
    CHECK(enumerate_punctured(10, par) == enumerate_punctured(10));
    CHECK(enumerate_three_choice(6, {}, par) == enumerate_three_choice(6));
  }

  TEST_CASE("punctured counts") {
    CountTable t = enumerate_punctured(11);
    CHECK(t[8] == 1);
    CHECK(t[9] == 12);
    CHECK(t[10] == 94);
    CHECK(t[11] == 604);
    for (int n = 1; n < 8; ++n) CHECK((!t.contains(n) || t[n] == 0));
  }

  TEST_CASE("three-choice counts") {
    CountTable t = enumerate_three_choice(7);
    CHECK(t[2] == 4);
    CHECK(t[3] == 12);
    CHECK(t[4] == 42);
    CHECK(t[7] == 2108);
    // Distinct shapes with the closing turn checked reduce to staircase polygons.
    CountTable strict = enumerate_three_choice(7, ThreeChoiceConvention::parse("polygons-strict"));
    for (int n = 2; n <= 7; ++n) CHECK(strict[n] == catalan(n - 1));
  }

  TEST_CASE("conventions round-trip through their names") {
    for (const auto& c : ThreeChoiceConvention::all()) {
      ThreeChoiceConvention p = ThreeChoiceConvention::parse(c.name());
      CHECK(p.name() == c.name());
      CHECK(p.objects == c.objects);
      CHECK(p.closing_turn_checked == c.closing_turn_checked);
    }
    CHECK_THROWS(ThreeChoiceConvention::parse("clockwise"));
  }

  TEST_CASE("limits") {
    CHECK_THROWS_AS(enumerate_staircase(kMaxStaircase + 1), DomainError);
    CHECK_THROWS_AS(enumerate_punctured(kMaxPunctured + 1), DomainError);
    CHECK_THROWS_AS(enumerate_three_choice(kMaxThreeChoice + 1), DomainError);
  }
}
