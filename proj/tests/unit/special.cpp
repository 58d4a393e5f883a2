#include <doctest.h>

#include "stairgf/special.hpp"

using namespace stairgf;

namespace {

LaurentSeries z(int n) { return LaurentSeries::monomial(1, 1, n); }

// Direct term ratio, independent of the library's hypergeometric code.
Rational hyp_term(const std::vector<Rational>& up, const std::vector<Rational>& lo, int n) {
  Rational t = 1;
  for (int k = 0; k < n; ++k) {
    Rational r = 1;
    for (const auto& a : up) r *= a + k;
    for (const auto& b : lo) r /= b + k;
    t *= r / (k + 1);
  }
  return t;
}

}  // namespace

TEST_SUITE("special") {
  TEST_CASE("hypergeometric coefficients") {
    LaurentSeries f = hyp_series({{Rational(1, 3), Rational(2, 3)}, {1}}, 10);
    CHECK(f.coeff(1) == Rational(2, 9));
    for (int n = 0; n < 10; ++n) CHECK(f.coeff(n) == hyp_term({Rational(1, 3), Rational(2, 3)}, {1}, n));
    CHECK_THROWS_AS(hyp_series({{1}, {-2}}, 5), DomainError);
  }

  TEST_CASE("hypergeometric at the zero series is 1") {
    LaurentSeries one = hyp2f1(Rational(1, 8), Rational(3, 8), 1, LaurentSeries::zero(12));
    CHECK(one == LaurentSeries::constant(1, 12));
  }

  TEST_CASE("Clausen identity to order 30") {
    LaurentSeries f = hyp2f1(Rational(1, 8), Rational(3, 8), 1, z(30));
    LaurentSeries g = hyp_series({{Rational(1, 4), Rational(1, 2), Rational(3, 4)}, {1, 1}}, 30);
    CHECK_FALSE(first_mismatch(f * f, g).has_value());
  }

  TEST_CASE("Heun local solution") {
    HeunParams p{Rational(-1, 4), Rational(1, 16), Rational(3, 8), Rational(5, 8), 1, Rational(1, 2)};
    LaurentSeries h = heun_series(p, 12);
    CHECK(h.coeff(0) == 1);
    CHECK(h.coeff(1) == p.q / (p.a * p.gamma));
    CHECK(h.coeff(1) == Rational(-1, 4));
    CHECK(h.compose(LaurentSeries::zero(12)) == LaurentSeries::constant(1, 12));
    HeunParams bad = p;
    bad.gamma = -2;
    CHECK_THROWS_AS(heun_series(bad, 8), DomainError);
  }

  TEST_CASE("Heun reduces to 2F1 when epsilon = 0 and q = a alpha beta") {
    HeunParams p{2, Rational(3, 2), Rational(1, 2), Rational(3, 2), 1, 2};
    REQUIRE(p.epsilon() == 0);
    LaurentSeries h = heun_series(p, 15);
    LaurentSeries f = hyp_series({{Rational(1, 2), Rational(3, 2)}, {1}}, 15);
    CHECK_FALSE(first_mismatch(h, f).has_value());
  }

  TEST_CASE("Sol(V2) from its Heun form") {
    LaurentSeries s = build_named("SolV2_heun", 10).series;
    CHECK(s.coeff(1) == 1);
    CHECK(s.coeff(3) == -5);
    CHECK(s.coeff(5) == Rational(-95, 2));
    CHECK(s.coeff(7) == Rational(-655, 2));
  }

  TEST_CASE("catalog examples") {
    LaurentSeries n2 = build_named("Sol2_closed", 10).series;
    const std::vector<long> n2c{1, 7, 28, 122, 500};
    for (int i = 0; i < 5; ++i) CHECK(n2.coeff(i) == n2c[static_cast<size_t>(i)]);
    LaurentSeries pi = build_named("P_I", 10).series;
    CHECK(pi.valuation() == 4);
    const std::vector<long> pic{1, 6, 29, 130, 561};
    for (int i = 0; i < 5; ++i) CHECK(pi.coeff(4 + i) == pic[static_cast<size_t>(i)]);
    LaurentSeries v = build_named("SolV2_plusU", 10).series;
    CHECK(v.coeff(5) == Rational(-95, 2));
    CHECK(build_named("P_S", 8).series.coeff(5) == 14);
  }

  TEST_CASE("catalog is listable and every entry builds") {
    for (const auto& e : named_catalog()) {
      NamedSeries s = build_named(e.name, 20);
      CHECK_MESSAGE(s.series.trunc() >= 20, e.name);
      CHECK_FALSE(s.provenance.empty());
    }
    CHECK_THROWS_AS(build_named("P_Q", 10), UnknownNameError);
  }

  TEST_CASE("memoized builds are consistent across orders") {
    LaurentSeries a = build_named("Sol3", 15).series, b = build_named("Sol3", 30).series;
    CHECK_FALSE(first_mismatch(a, b).has_value());
    CHECK(b.trunc() >= 30);
  }

  TEST_CASE("nested integral") {
    LaurentSeries s = nested_integral_PI_trans(20);
    CHECK(s.coeff(0) == -11);
    CHECK(s.coeff(1) == 34);
    CHECK_FALSE(first_mismatch(s, build_named("P_I_trans", 20).series).has_value());
    NestedIntegralConstants k;
    k.inner = 1;
    CHECK_THROWS_AS(nested_integral_PI_trans(10, k), LogObstructionError);
  }

  TEST_CASE("U series") {
    LaurentSeries u = u_series(20);
    LaurentSeries d = LaurentSeries::from_polynomial(Polynomial({1, 0, -12, 0, -64}), 20);
    CHECK(u * u == d);
    CHECK(u.coeff(0) == 1);
    LaurentSeries ux = u_series_in_X(10);
    CHECK(ux.substitute_monomial(1, 2).truncated(20) == u);
  }
}
