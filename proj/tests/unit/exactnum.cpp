#include <doctest.h>

#include <random>

#include "stairgf/quadext.hpp"

using namespace stairgf;

namespace {

Polynomial X = Polynomial::x();
Polynomial D = Polynomial{1, 0, -12, 0, -64};

Polynomial random_poly(std::mt19937& rng, int deg) {
  std::uniform_int_distribution<int> c(-9, 9), q(1, 4);
  std::vector<Rational> v;
  for (int i = 0; i <= deg; ++i) v.push_back(make_rational(c(rng), q(rng)));
  return Polynomial(v);
}

RatFunc random_ratfunc(std::mt19937& rng) {
  Polynomial d;
  while (d.is_zero()) d = random_poly(rng, 2);
  return RatFunc(random_poly(rng, 3), d);
}

// Res_U(p, q) for p linear in U: lc(p)^deg q * q(root of p), computed in Q(x).
RatFunc substitution_resultant(const UPolynomial& p, const UPolynomial& q) {
  RatFunc root = RatFunc(-p[0]) / RatFunc(p[1]);
  RatFunc acc;
  for (auto it = q.rbegin(); it != q.rend(); ++it) acc = acc * root + RatFunc(*it);
  return acc * RatFunc(p[1].pow(static_cast<unsigned>(q.size() - 1)));
}

}  // namespace

TEST_SUITE("exactnum") {
  TEST_CASE("rational parsing and printing") {
    CHECK(to_string(parse_rational("-6/4")) == "-3/2");
    CHECK(to_string(parse_rational("12")) == "12");
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
    CHECK_THROWS_AS(parse_rational("abc"), DomainError);
    Rational r;
    CHECK(exact_root(Rational(16, 81), 4, r));
    CHECK(r == Rational(2, 3));
    CHECK_FALSE(exact_root(Rational(5), 2, r));
    CHECK(exact_root(Rational(-27, 8), 3, r));
    CHECK(r == Rational(-3, 2));
  }

  TEST_CASE("polynomial basics") {
    Polynomial p = Polynomial{-2, 6, 60, -230, 660, -2913, 6874};
    CHECK(p.degree() == 6);
    CHECK(p(1) == 4455);
    CHECK(Polynomial().degree() == Polynomial::kZeroDegree);
    CHECK(p.to_string() == "6874*x^6 - 2913*x^5 + 660*x^4 - 230*x^3 + 60*x^2 + 6*x - 2");
    CHECK((X * X - 1).compose(X + 1) == X * X + 2 * X);
    CHECK(X.pow(3).derivative() == 3 * X * X);
    auto [q, r] = divmod(X.pow(3) + 1, X + 2);
    CHECK(q * (X + 2) + r == X.pow(3) + 1);
    CHECK(r.degree() < 1);
  }

  TEST_CASE("gcd is monic and divides both") {
    std::mt19937 rng(7);
    for (int i = 0; i < 30; ++i) {
      Polynomial g = random_poly(rng, 2), a = random_poly(rng, 4) * g, b = random_poly(rng, 3) * g;
      Polynomial h = gcd(a, b);
      CHECK(h.lc() == 1);
      CHECK((a % h).is_zero());
      CHECK((b % h).is_zero());
      CHECK((h % g.monic()).is_zero());
    }
    CHECK(gcd(Polynomial(), Polynomial()).is_zero());
    CHECK(gcd(X * X - 1, X * X + 1) == Polynomial(1));
  }

  TEST_CASE("ratfunc canonical form and field axioms") {
    RatFunc f((X * X - 1) * 3, (X - 1) * 6);
    CHECK(f.num() == (X + 1) / Rational(2));
    CHECK(f.den() == Polynomial(1));
    std::mt19937 rng(11);
    for (int i = 0; i < 20; ++i) {
      RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng), c = random_ratfunc(rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(RatFunc(a.num(), a.den()) == a);
      if (!b.is_zero()) CHECK((a / b) * b == a);
      CHECK(a.den().lc() == 1);
    }
  }

  TEST_CASE("ratfunc derivative and composition") {
    RatFunc f(Polynomial(1), Polynomial(1) - X);
    CHECK(f.derivative() == f * f);
    CHECK(f.compose(RatFunc(X * 2)) == RatFunc(Polynomial(1), Polynomial(1) - 2 * X));
    CHECK_THROWS_AS(f(1), DomainError);
  }

  TEST_CASE("quadext arithmetic") {
    QuadExt u = QuadExt::U(D);
    QuadExt p = QuadExt(RatFunc(1 - 4 * X * X)) - u;
    QuadExt q = QuadExt(RatFunc(1 - 4 * X * X)) + u;
    QuadExt prod = p * q;
    CHECK(prod.b().is_zero());
    CHECK(prod.a() == RatFunc(4 * X * X * (1 + 20 * X * X)));
    CHECK((u * u) == QuadExt(RatFunc(D)));
    CHECK((p / q) * q == p);
    QuadExt other = QuadExt::U(Polynomial{1, 1});
    CHECK_THROWS_AS(u + other, DomainError);
    CHECK_THROWS_AS(p / QuadExt(RatFunc()), DomainError);
  }

  TEST_CASE("quadext norm is multiplicative") {
    std::mt19937 rng(3);
    for (int i = 0; i < 20; ++i) {
      QuadExt a(random_ratfunc(rng), random_ratfunc(rng), D), b(random_ratfunc(rng), random_ratfunc(rng), D);
      CHECK((a * b).norm() == a.norm() * b.norm());
    }
  }

  TEST_CASE("quadext derivative of U") {
    QuadExt u = QuadExt::U(D);
    // (U^2)' = d' computed two ways.
    QuadExt lhs = (u * u).derivative();
    QuadExt rhs = u.derivative() * u * QuadExt(2);
    CHECK(lhs == rhs);
    CHECK(lhs == QuadExt(RatFunc(D.derivative())));
  }

  TEST_CASE("resultant examples") {
    UPolynomial d = {D, Polynomial(), Polynomial(-1)};
    UPolynomial p1 = {1 - 4 * X * X, Polynomial(-1)};
    UPolynomial p2 = {13 - 28 * X * X, Polynomial(-12)};
    CHECK(poly_resultant(p1, d) == -4 * X * X * (1 + 20 * X * X));
    CHECK(poly_resultant(p2, d) == -25 * (1 + 20 * X * X).pow(2));
    CHECK(RatFunc(poly_resultant(p1, d)) == substitution_resultant(p1, d));
    CHECK(poly_resultant({Polynomial(), Polynomial(1)}, {Polynomial(), Polynomial(1)}).is_zero());
    CHECK_THROWS_WITH_AS(poly_resultant({}, {}), "undefined resultant", DomainError);
  }

  TEST_CASE("resultant oracle and planted common roots") {
    std::mt19937 rng(5);
    for (int i = 0; i < 15; ++i) {
      UPolynomial lin = {random_poly(rng, 2), random_poly(rng, 1)};
      if (lin[1].is_zero()) continue;
      UPolynomial q = {random_poly(rng, 2), random_poly(rng, 2), random_poly(rng, 1), random_poly(rng, 2)};
      CHECK(RatFunc(poly_resultant(lin, q)) == substitution_resultant(lin, q));
      CHECK(RatFunc(poly_resultant(q, lin)) == substitution_resultant(lin, q) * RatFunc(-1).pow(3));
    }
    // (U - x)(U + 1) and (U - x)(U^2 + x) share the root U = x.
    UPolynomial a = {-X, 1 - X, Polynomial(1)};
    UPolynomial b = {-X * X, X, -X, Polynomial(1)};
    CHECK(poly_resultant(a, b).is_zero());
    UPolynomial c = {X, Polynomial(), Polynomial(1)};
    CHECK_FALSE(poly_resultant(a, c).is_zero());
  }
}
