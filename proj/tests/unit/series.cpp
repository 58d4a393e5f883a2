#include <doctest.h>

#include <random>

#include "stairgf/series.hpp"

using namespace stairgf;

namespace {

constexpr int N = 30;

LaurentSeries poly(std::initializer_list<Rational> c, int trunc = N) { return LaurentSeries(0, c, trunc); }

// Generalized binomial coefficient binom(e, n).
Rational binom(const Rational& e, int n) {
  Rational r = 1;
  for (int k = 0; k < n; ++k) r = r * (e - k) / (k + 1);
  return r;
}

LaurentSeries random_unit(std::mt19937& rng, int trunc) {
  std::uniform_int_distribution<int> c(-5, 5), q(1, 3);
  std::vector<Rational> v(static_cast<size_t>(trunc));
  v[0] = 1;
  for (int i = 1; i < trunc; ++i) v[static_cast<size_t>(i)] = make_rational(c(rng), q(rng));
  return LaurentSeries(0, v, trunc);
}

}  // namespace

TEST_SUITE("series") {
  TEST_CASE("staircase closed form gives Catalan numbers") {
    LaurentSeries root = poly({1, -4}).pow(Rational(1, 2));
    LaurentSeries ps = (poly({1, -2}) - root) * Rational(1, 2);
    CHECK(ps.valuation() == 2);
    CHECK(ps.coeff(2) == 1);
    CHECK(ps.coeff(3) == 2);
    CHECK(ps.coeff(4) == 5);
    CHECK(ps.coeff(5) == 14);
  }

  TEST_CASE("square root against the binomial series") {
    LaurentSeries s = poly({1, -4}).pow(Rational(1, 2));
    for (int n = 0; n < N; ++n) CHECK(s.coeff(n) == binom(Rational(1, 2), n) * pow(Rational(-4), n));
    CHECK(s * s == poly({1, -4}));
    CHECK((s * s).trunc() == N);
  }

  TEST_CASE("geometric series and precision tracking") {
    LaurentSeries g = poly({1, -1}).inverse();
    for (int n = 0; n < N; ++n) CHECK(g.coeff(n) == 1);
    CHECK_THROWS_AS(g.coeff(N), PrecisionError);
    LaurentSeries x2 = LaurentSeries::monomial(1, 2, 100);
    CHECK((g * x2).trunc() == N + 2);
    LaurentSeries inv = x2.inverse();
    CHECK(inv.valuation() == -2);
    CHECK_THROWS_AS(LaurentSeries::zero(10).inverse(), DomainError);
  }

  TEST_CASE("laurent expansion of a rational function") {
    Polynomial X = Polynomial::x();
    LaurentSeries f = LaurentSeries::from_ratfunc(RatFunc(Polynomial(1), X * X * (1 - X)), 10);
    CHECK(f.valuation() == -2);
    CHECK(f.trunc() == 10);
    for (int n = -2; n < 10; ++n) CHECK(f.coeff(n) == 1);
  }

  TEST_CASE("integration") {
    CHECK(poly({1, -4}).integrate() == poly({0, 1, -2}, N + 1));
    LaurentSeries xm2 = LaurentSeries::monomial(1, -2, 5);
    CHECK(xm2.integrate() == LaurentSeries::monomial(-1, -1, 6));
    try {
      (void)LaurentSeries::monomial(1, -1, 5).integrate();
      FAIL("expected obstruction");
    } catch (const LogObstructionError& e) {
      CHECK(e.residue() == 1);
    }
  }

  TEST_CASE("composition") {
    LaurentSeries z = LaurentSeries::monomial(1, 1, N);
    LaurentSeries inner = poly({0, 1, 3, -2});
    CHECK(z.compose(inner) == inner);
    LaurentSeries geo = poly({1, -1}).inverse();
    LaurentSeries r = geo.compose(z);
    for (int n = 0; n < N; ++n) CHECK(r.coeff(n) == 1);
    CHECK_THROWS_WITH_AS(geo.compose(poly({1, 1})), "pullback must vanish at origin", DomainError);
    LaurentSeries x3 = LaurentSeries::monomial(1, 3, 200);
    CHECK(geo.compose(x3).trunc() == 3 * N);
  }

  TEST_CASE("powers") {
    LaurentSeries x2 = LaurentSeries::monomial(1, 2, 12);
    CHECK(x2.pow(Rational(1, 2)) == LaurentSeries::monomial(1, 1, 11));
    CHECK_THROWS_AS(LaurentSeries::monomial(1, 1, 12).pow(Rational(1, 2)), DomainError);
    CHECK_THROWS_AS(poly({-1, 1}).pow(Rational(1, 2)), DomainError);
    CHECK(poly({4, 1}).pow(Rational(1, 2)).coeff(0) == 2);
    CHECK(poly({1, 1}).pow(-1) == poly({1, 1}).inverse());
    CHECK(poly({1, 1}).pow(3) == poly({1, 3, 3, 1}));
  }

  TEST_CASE("power round trips on random units") {
    std::mt19937 rng(17);
    for (int i = 0; i < 20; ++i) {
      LaurentSeries f = random_unit(rng, 20);
      for (int a : {2, 3, 4}) {
        CHECK(f.pow(a).pow(Rational(1, a)) == f);
        CHECK(f.pow(Rational(1, a)).pow(a) == f);
      }
    }
  }

  TEST_CASE("derivative inverts integration") {
    std::mt19937 rng(19);
    for (int i = 0; i < 10; ++i) {
      LaurentSeries f = random_unit(rng, 20);
      CHECK(f.integrate().derivative() == f);
    }
  }

  TEST_CASE("composition is associative") {
    std::mt19937 rng(23);
    for (int i = 0; i < 10; ++i) {
      LaurentSeries f = random_unit(rng, 30);
      LaurentSeries g = random_unit(rng, 30).shifted(1).truncated(30);
      LaurentSeries h = random_unit(rng, 30).shifted(1).truncated(30);
      CHECK(f.compose(g).compose(h) == f.compose(g.compose(h)));
    }
  }

  TEST_CASE("print formats") {
    LaurentSeries s(8, {1, 12, 94, 604}, 12);
    CHECK(s.to_string() == "x^8 + 12*x^9 + 94*x^10 + 604*x^11 + O(x^12)");
    LaurentSeries t(0, {1, Rational(-1, 2), 0, 3}, 5);
    CHECK(t.to_string() == "1 - 1/2*x + 3*x^3 + O(x^5)");
    CHECK(t.to_machine() == R"({"valuation":0,"trunc":5,"coeffs":["1","-1/2","0","3","0"]})");
  }

  TEST_CASE("log series derivative") {
    // d/dx (x log x) = log x + 1.
    LogSeries f({LaurentSeries::zero(10), LaurentSeries::monomial(1, 1, 10)});
    LogSeries df = f.derivative();
    CHECK(df.log_degree() == 1);
    CHECK(df.part(0) == LaurentSeries::constant(1, 9));
    CHECK(df.part(1) == LaurentSeries::constant(1, 9));
  }

  TEST_CASE("bivariate staircase equation") {
    BivarSeries p = bivar_newton_solve(16);
    CHECK(p.coeff(1, 1) == 1);
    CHECK(p.coeff(2, 1) == 1);
    CHECK(p.coeff(1, 0) == 0);
    BivarSeries x(16), y(16);
    x.set(1, 0, 1);
    y.set(0, 1, 1);
    CHECK((p - (p + x) * (p + y)).terms().empty());
    LaurentSeries diag = p.diagonal();
    CHECK(diag.coeff(2) == 1);
    CHECK(diag.coeff(3) == 2);
    CHECK(diag.coeff(4) == 5);
    CHECK(diag.coeff(5) == 14);
  }
}
