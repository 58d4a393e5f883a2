#include <doctest.h>

#include <random>

#include "stairgf/diffop.hpp"
#include "stairgf/paperdata.hpp"

using namespace stairgf;

namespace {

RatFunc x() { return RatFunc::x(); }

Rational scale_to(const LaurentSeries& s, const LaurentSeries& target) {
  return target.leading() / s.leading();
}

}  // namespace

TEST_SUITE("diffop") {
  TEST_CASE("first order read-off") {
    DiffOp n1 = get_fixture("N1").op();
    auto r = apply(n1, LaurentSeries::from_polynomial(Polynomial({1, -4}), 30));
    CHECK(r.is_zero());
    CHECK(r.trunc() >= 28);
  }

  TEST_CASE("derivative of x squared") {
    auto r = apply(DiffOp::dx(), LaurentSeries::monomial(1, 2, 20));
    CHECK(r == LaurentSeries::monomial(2, 1, 19));
  }

  TEST_CASE("Leibniz rule and identity") {
    DiffOp X = DiffOp::multiplier(x());
    CHECK(DiffOp::dx() * X == X * DiffOp::dx() + DiffOp::identity());
    DiffOp n2 = get_fixture("N2").op();
    CHECK(n2 * DiffOp::identity() == n2);
    CHECK(DiffOp::identity() * n2 == n2);
    CHECK_FALSE(check_intertwiner(DiffOp::dx(), X, X, DiffOp::dx()));
  }

  TEST_CASE("normalization is idempotent and scale invariant") {
    DiffOp n3 = get_fixture("N3").op();
    DiffOp a = normalized(n3);
    CHECK(normalized(a) == a);
    DiffOp scaled = DiffOp::multiplier(RatFunc(Polynomial({3, 0, -2}), Polynomial({1, 5}))) * n3;
    CHECK(normalized(scaled) == a);
  }

  TEST_CASE("apply of a product is composed application") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> small(-3, 3);
    auto rand_poly = [&](int deg) {
      std::vector<Rational> c;
      for (int i = 0; i <= deg; ++i) c.push_back(small(rng));
      return Polynomial(c);
    };
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<RatFunc> a, b;
      for (int i = 0; i < 3; ++i) a.push_back(RatFunc(rand_poly(2), Polynomial({1, small(rng)})));
      for (int i = 0; i < 2; ++i) b.push_back(RatFunc(rand_poly(2)));
      a.back() = RatFunc(1);
      b.back() = RatFunc(Polynomial({1, 1}));
      DiffOp L(a), M(b);
      std::vector<Rational> fc;
      for (int i = 0; i < 25; ++i) fc.push_back(small(rng));
      fc[0] = 1;
      LaurentSeries f(0, fc, 25);
      CHECK(apply(L * M, f) == apply(L, apply(M, f)));
    }
  }

  TEST_CASE("published annihilations") {
    DiffOp n1 = get_fixture("N1").op(), n2 = get_fixture("N2").op(), n3 = get_fixture("N3").op();
    auto sol2 = get_fixture("Sol2_series").series();
    auto r2 = apply(n2 * n1, sol2);
    CHECK(r2.is_zero());
    auto sol3 = get_fixture("Sol3_series").series();
    CHECK(apply(n3 * n2 * n1, sol3).is_zero());
    CHECK(apply(n2, get_fixture("SolN2_series").series()).is_zero());
    CHECK(apply(get_fixture("V2").op(), get_fixture("SolV2_series").series()).is_zero());
  }

  TEST_CASE("indicial exponents") {
    auto v2 = indicial_exponents(get_fixture("V2").op(), Rational(0));
    CHECK(v2.exponents == std::vector<Rational>{1, 1});
    auto n1 = indicial_exponents(get_fixture("N1").op(), Rational(1, 4));
    CHECK(n1.exponents == std::vector<Rational>{1});
    DiffOp bessel0({RatFunc(0), RatFunc(1), x()});
    auto b = indicial_exponents(bessel0, Rational(0));
    CHECK(b.exponents == std::vector<Rational>{0, 0});
    DiffOp irregular({RatFunc(1), RatFunc(Polynomial::monomial(1, 2))});
    CHECK_THROWS_AS(indicial_exponents(irregular, Rational(0)), DomainError);
  }

  TEST_CASE("N2 at the square-root singularity") {
    auto d = indicial_exponents(get_fixture("N2").op(), Rational(1, 4));
    CHECK(d.exponents == std::vector<Rational>{Rational(-3, 2), Rational(-3, 2)});
    CHECK(d.irrational.empty());
  }

  TEST_CASE("Frobenius basis of x D^2 + D") {
    DiffOp L({RatFunc(0), RatFunc(1), x()});
    auto basis = frobenius_basis(L, 10);
    REQUIRE(basis.size() == 2);
    CHECK(basis[0].log_degree() == 0);
    CHECK(basis[0].part(0) == LaurentSeries::constant(1, 10));
    CHECK(basis[1].log_degree() == 1);
    CHECK(basis[1].part(1) == LaurentSeries::constant(1, 10));
    for (const auto& s : basis) CHECK(apply(L, s).is_zero());
  }

  TEST_CASE("Frobenius basis of N2 N1 carries Sol2") {
    DiffOp L = get_fixture("N2").op() * get_fixture("N1").op();
    auto basis = frobenius_basis(L, 12);
    REQUIRE(basis.size() == 3);
    int logs = 0;
    for (const auto& s : basis) {
      CHECK(apply(L, s).is_zero());
      if (s.log_degree() == 1) {
        ++logs;
        auto top = s.part(1);
        auto sol2 = get_fixture("Sol2_series").series();
        CHECK(top * scale_to(top, sol2) == sol2);
      }
    }
    CHECK(logs == 1);
  }

  TEST_CASE("Frobenius basis of N3 N2 N1") {
    DiffOp L = get_fixture("N3").op() * get_fixture("N2").op() * get_fixture("N1").op();
    auto basis = frobenius_basis(L, 12);
    REQUIRE(basis.size() == 6);
    std::vector<int> degrees;
    for (const auto& s : basis) degrees.push_back(s.log_degree());
    std::sort(degrees.begin(), degrees.end());
    CHECK(degrees == std::vector<int>{0, 0, 0, 1, 1, 2});
    for (const auto& s : basis) {
      CHECK(apply(L, s).is_zero());
      if (s.log_degree() == 2) {
        auto top = s.part(2);
        auto sol3 = get_fixture("Sol3_series").series();
        CHECK(top * scale_to(top, sol3) == sol3);
      }
    }
  }

  TEST_CASE("intertwiners over the quadratic extension") {
    Polynomial d({1, 0, -12, 0, -64});
    auto q = [&](const char* n) { return to_quad(get_fixture(n).op(), d); };
    CHECK(check_intertwiner(q("V2"), q("A1"), q("B1"), q("V2bar")));
    CHECK(check_intertwiner(q("C1"), q("V2"), q("V2bar"), q("D1")));
  }
}
