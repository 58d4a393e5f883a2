#include "stairgf/special.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "stairgf/diffop.hpp"
#include "stairgf/paperdata.hpp"

namespace stairgf {

LaurentSeries hyp_series(const HypParams& p, int order) {
  if (order < 1) throw DomainError("hypergeometric series needs order >= 1");
  for (const auto& b : p.lower)
    if (is_integer(b) && b <= 0) throw DomainError("lower parameter " + to_string(b) + " is a nonpositive integer");
  std::vector<Rational> c(static_cast<size_t>(order));
  c[0] = 1;
  for (int n = 0; n + 1 < order; ++n) {
    Rational r = 1;
    for (const auto& a : p.upper) r *= a + n;
    for (const auto& b : p.lower) r /= b + n;
    r /= n + 1;
    c[static_cast<size_t>(n + 1)] = c[static_cast<size_t>(n)] * r;
  }
  return LaurentSeries(0, std::move(c), order);
}

LaurentSeries heun_series(const HeunParams& p, int order) {
  if (order < 1) throw DomainError("Heun series needs order >= 1");
  if (p.a == 0) throw DomainError("Heun singular point a must be nonzero");
  if (is_integer(p.gamma) && p.gamma <= 0) throw DomainError("gamma = " + to_string(p.gamma) + " is a nonpositive integer");
  const Rational eps = p.epsilon();
  std::vector<Rational> c(static_cast<size_t>(order));
  c[0] = 1;
  for (int j = 0; j + 1 < order; ++j) {
    Rational rhs = (Rational(j) * ((j - 1 + p.gamma) * (1 + p.a) + p.a * p.delta + eps) + p.q) * c[static_cast<size_t>(j)];
    if (j >= 1) rhs -= (j - 1 + p.alpha) * (j - 1 + p.beta) * c[static_cast<size_t>(j - 1)];
    c[static_cast<size_t>(j + 1)] = rhs / (p.a * (j + 1) * (j + p.gamma));
  }
  return LaurentSeries(0, std::move(c), order);
}

LaurentSeries hyp2f1(const Rational& a, const Rational& b, const Rational& c, const LaurentSeries& z) {
  int v = z.is_zero() ? z.trunc() : z.valuation();
  if (v < 1) throw DomainError("pullback must vanish at origin");
  int need = z.trunc() / v + 2;
  return hyp_series({{a, b}, {c}}, need).compose(z);
}

LaurentSeries u_series(int order) {
  return LaurentSeries::from_polynomial(Polynomial({1, 0, -12, 0, -64}), order).pow(Rational(1, 2));
}

LaurentSeries u_series_in_X(int order) {
  return LaurentSeries::from_polynomial(Polynomial({1, -12, -64}), order).pow(Rational(1, 2));
}

namespace {

using Builder = std::function<LaurentSeries(int)>;

LaurentSeries poly(std::initializer_list<Rational> c, int n) { return LaurentSeries::from_polynomial(Polynomial(c), n); }
LaurentSeries rat(const RatFunc& f, int n) { return LaurentSeries::from_ratfunc(f, n); }
LaurentSeries X(int n) { return LaurentSeries::monomial(1, 1, n); }

LaurentSeries checked(const LaurentSeries& s, int n, std::string_view name) {
  if (s.trunc() < n)
    throw PrecisionError("internal precision loss building " + std::string(name) + ": O(x^" + std::to_string(s.trunc()) +
                         ") < O(x^" + std::to_string(n) + ")");
  return s.truncated(n);
}

LaurentSeries top_log_part(const DiffOp& L, int n) {
  auto basis = frobenius_basis(L, n);
  int best = -1;
  for (const auto& s : basis) best = std::max(best, s.log_degree());
  for (const auto& s : basis)
    if (s.log_degree() == best) {
      LaurentSeries top = s.part(static_cast<size_t>(best));
      return top * (Rational(1) / top.leading());
    }
  throw DomainError("empty Frobenius basis");
}

// 4096 x^10 / (1 - 4x^2 + sign*U)^4
LaurentSeries v2_pullback(int sign, int n) {
  LaurentSeries u = u_series(n + 12) * Rational(sign);
  LaurentSeries den = (poly({1, 0, -4}, n + 12) + u).pow(-4);
  return LaurentSeries::monomial(4096, 10, n + 12) * den;
}

LaurentSeries sol_v2(int sign, int n) {
  const int w = n + 4;
  LaurentSeries u = u_series(w);
  LaurentSeries num = poly({13, 0, -28}, w) - Rational(12 * sign) * u;
  Rational scale = sign > 0 ? Rational(1) : Rational(1, 25);
  LaurentSeries pre = (num * rat(RatFunc(Polynomial(scale), Polynomial({1, 0, 20}).pow(2)), w)).pow(Rational(1, 4));
  return X(w) * u * pre * hyp2f1(Rational(1, 8), Rational(3, 8), 1, v2_pullback(sign, w));
}

LaurentSeries h_cubic(int n) {
  return hyp2f1(Rational(1, 3), Rational(2, 3), 1, rat(RatFunc(Polynomial::monomial(27, 3), Polynomial({1, -1}).pow(3)), n));
}

LaurentSeries sol2_closed(int n) {
  const int w = n + 3;
  LaurentSeries h = h_cubic(w);
  LaurentSeries s = poly({1, -1}, w) * poly({1, -4}, w) * poly({1, 0, 45, 44}, w) * h.derivative() +
                    poly({0, 18, -54, -234}, w) * h;
  LaurentSeries pre = rat(RatFunc(Polynomial({1, 1, 7}), Polynomial({0, 18}) * Polynomial({1, -1}).pow(2)), w) *
                      poly({1, -4}, w).pow(Rational(-3, 2));
  return pre * s;
}

LaurentSeries sol2_contiguous(int n) {
  const int w = n + 1;
  LaurentSeries z = rat(RatFunc(Polynomial::monomial(27, 3), Polynomial({1, -1}).pow(3)), w);
  LaurentSeries f2 = hyp2f1(Rational(1, 3), Rational(2, 3), 2, z);
  LaurentSeries f1 = hyp2f1(Rational(1, 3), Rational(2, 3), 1, z);
  LaurentSeries body = poly({0, 1, 0, 45, 44}, w) * f2 + poly({1, 1, 7}, w) * poly({1, -3, -13}, w) * f1;
  return rat(RatFunc(Polynomial(1), Polynomial({1, -1}).pow(2)), w) * poly({1, -4}, w).pow(Rational(-3, 2)) * body;
}

LaurentSeries p_s(int n) { return (poly({1, -2}, n) - poly({1, -4}, n).pow(Rational(1, 2))) * Rational(1, 2); }

LaurentSeries p_i_alg(int n) {
  LaurentSeries s = poly({1, -4}, n);
  return LaurentSeries::constant(Rational(135, 8), n) + s * Rational(59, 4) + s * s * Rational(15, 8) -
         s.pow(Rational(-1, 2)) * Rational(85, 16) - s.pow(Rational(1, 2)) * Rational(105, 8) -
         s.pow(Rational(3, 2)) * Rational(65, 16);
}

LaurentSeries sol2(int n) {
  const DiffOp L = get_fixture("N2").op() * get_fixture("N1").op();
  return top_log_part(L, n);
}

LaurentSeries sol3(int n) {
  const DiffOp L = get_fixture("N3").op() * get_fixture("N2").op() * get_fixture("N1").op();
  return top_log_part(L, n);
}

LaurentSeries p_i_trans(int n) { return sol2(n) * Rational(-19, 2) + sol3(n) * Rational(-3, 2); }

LaurentSeries p_i(int n) { return (p_i_alg(n) + p_i_trans(n)) * Rational(1, 60); }

// (1/2) P_T - P_I = x / sqrt(1 - 4x) - x
LaurentSeries p_t(int n) {
  return (p_i(n) + X(n) * poly({1, -4}, n).pow(Rational(-1, 2)) - X(n)) * Rational(2);
}

// P_I + P_P = -(x^2/2) P_S' + x^3/(1 - 4x)
LaurentSeries p_p(int n) {
  return -p_i(n) - LaurentSeries::monomial(Rational(1, 2), 2, n) * p_s(n + 1).derivative() +
         rat(RatFunc(Polynomial::monomial(1, 3), Polynomial({1, -4})), n);
}

LaurentSeries sol_v2_heun(int n) {
  HeunParams hp{Rational(-1, 4), Rational(1, 16), Rational(3, 8), Rational(5, 8), 1, Rational(1, 2)};
  LaurentSeries heun = heun_series(hp, n / 2 + 2).substitute_monomial(-4, 2);
  return X(n) * u_series(n) * heun;
}

LaurentSeries sol_n3(int n) {
  const int w = n + 8;
  LaurentSeries s = sol_v2(1, w);
  return apply(get_fixture("T2").op(), s * s);
}

LaurentSeries w_n2(int n) { return rat(get_fixture("W_N2").ratfunc(), n); }

// 2F1([1/3,2/3],[1],27x^3/(1-x)^3) through the 1/12, 5/12 reduction.
LaurentSeries q54_rhs(int n) {
  const int w = n + 2;
  Polynomial q2({1, -8, 43});
  Polynomial num = Polynomial::monomial(1728, 3) * Polynomial({1, -4}).pow(3) * Polynomial({1, 1, 7}).pow(3);
  Polynomial den = Polynomial({1, -1}).pow(3) * Polynomial({1, 5}).pow(3) * q2.pow(3);
  LaurentSeries pre = (poly({1, -1}, w).pow(3) * rat(RatFunc(Polynomial(1), Polynomial({1, 5}) * q2), w)).pow(Rational(1, 4));
  return pre * hyp2f1(Rational(1, 12), Rational(5, 12), 1, rat(RatFunc(num, den), w));
}

struct Entry {
  std::string description;
  std::string provenance;
  Builder build;
};

const std::map<std::string, Entry, std::less<>>& entries() {
  static const std::map<std::string, Entry, std::less<>> table = {
      {"P_S", {"staircase polygons by half-perimeter", "(1 - 2x - sqrt(1 - 4x))/2", p_s}},
      {"P_T", {"three-choice polygons", "2 (P_I + x/sqrt(1-4x) - x)", p_t}},
      {"P_I", {"imperfect staircase polygons", "(P_I_alg + P_I_trans)/60", p_i}},
      {"P_P", {"punctured staircase polygons", "-P_I - (x^2/2) P_S' + x^3/(1-4x)", p_p}},
      {"P_I_alg", {"algebraic part of 60 P_I", "binomial expansions in sqrt(1-4x)", p_i_alg}},
      {"P_I_trans", {"transcendental part of 60 P_I", "-19/2 Sol2 - 3/2 Sol3", p_i_trans}},
      {"Sol2", {"top log series of N2 N1 at 0, constant term 1", "Frobenius basis of N2 N1", sol2}},
      {"Sol3", {"top log series of N3 N2 N1 at 0, constant term 1", "Frobenius basis of N3 N2 N1", sol3}},
      {"H_cubic", {"2F1([1/3,2/3],[1],27x^3/(1-x)^3)", "hypergeometric series under a cubic pullback", h_cubic}},
      {"Sol2_closed", {"solution of N2 from the cubic pullback", "prefactor times H' and H combination", sol2_closed}},
      {"Sol2_contiguous", {"solution of N2 from two contiguous 2F1", "[1/3,2/3],[2] and [1/3,2/3],[1]", sol2_contiguous}},
      {"SolV2_plusU", {"solution of V2, + branch of U", "x U (..)^(1/4) 2F1([1/8,3/8],[1],4096x^10/(1-4x^2+U)^4)",
                       [](int n) { return sol_v2(1, n); }}},
      {"SolV2_minusU", {"solution of V2, - branch of U, rescaled by -5^(-1/2)",
                        "x U (../25)^(1/4) 2F1([1/8,3/8],[1],4096x^10/(1-4x^2-U)^4)", [](int n) { return sol_v2(-1, n); }}},
      {"SolV2_heun", {"solution of V2 as a Heun function", "x U Heun(-1/4,1/16,3/8,5/8,1,1/2;-4x^2)", sol_v2_heun}},
      {"SolN3", {"solution of N3", "T2(SolV2_plusU^2)", sol_n3}},
      {"W_N2", {"wronskian of N2", "rational function", w_n2}},
      {"U", {"sqrt((1-16x^2)(1+4x^2)) with U(0) = 1", "binomial square root", u_series}},
      {"expand1_plusU", {"2F1([1/8,3/8],[1],4096x^10/(1-4x^2+U)^4)", "hypergeometric series under the + pullback",
                         [](int n) { return hyp2f1(Rational(1, 8), Rational(3, 8), 1, v2_pullback(1, n)); }}},
      {"expand1_minusU", {"2F1([1/8,3/8],[1],4096x^10/(1-4x^2-U)^4)", "hypergeometric series under the - pullback",
                          [](int n) { return hyp2f1(Rational(1, 8), Rational(3, 8), 1, v2_pullback(-1, n)); }}},
      {"Q54_lhs", {"H_cubic, the left side of the 1/12,5/12 reduction", "same as H_cubic", h_cubic}},
      {"Q54_rhs", {"H_cubic through 2F1([1/12,5/12],[1],P2)", "algebraic prefactor times the reduced 2F1", q54_rhs}},
      {"PI_trans_nested", {"P_I_trans from the nested integral formula", "iterated antiderivatives",
                           [](int n) { return nested_integral_PI_trans(n); }}},
  };
  return table;
}

std::shared_mutex memo_mutex;
std::map<std::pair<std::string, int>, LaurentSeries> memo;

}  // namespace

const std::vector<CatalogEntry>& named_catalog() {
  static const std::vector<CatalogEntry> list = [] {
    std::vector<CatalogEntry> out;
    for (const auto& [name, e] : entries()) out.push_back({name, e.description});
    return out;
  }();
  return list;
}

NamedSeries build_named(std::string_view name, int order) {
  const auto& table = entries();
  auto it = table.find(name);
  if (it == table.end()) {
    std::string msg = "unknown series '" + std::string(name) + "'; available:";
    for (const auto& [n, e] : table) msg += " " + n;
    throw UnknownNameError(msg);
  }
  if (order < 1) throw DomainError("order must be at least 1");
  const std::pair<std::string, int> key{it->first, order};
  {
    std::shared_lock lock(memo_mutex);
    auto m = memo.find(key);
    if (m != memo.end()) return {it->first, m->second, it->second.provenance};
  }
  LaurentSeries s = checked(it->second.build(order), order, name);
  {
    std::unique_lock lock(memo_mutex);
    memo.emplace(key, s);
  }
  return {it->first, s, it->second.provenance};
}

LaurentSeries nested_integral_PI_trans(int order, const NestedIntegralConstants& k) {
  const int w = order + 6;
  LaurentSeries s1 = poly({1, -4}, w);
  LaurentSeries s2 = build_named("Sol2_closed", w).series;
  LaurentSeries s3 = build_named("SolN3", w).series;
  s3 *= k.source / s3.leading();
  LaurentSeries wr = w_n2(w);
  LaurentSeries i1 = (s2 * s3 / wr).integrate() + LaurentSeries::constant(k.inner, w);
  LaurentSeries i2 = (wr / (s2 * s2) * i1).integrate();
  LaurentSeries i3 = (s2 / s1 * (LaurentSeries::constant(k.middle, w) + i2 * k.scale)).integrate();
  return checked(s1 * (LaurentSeries::constant(k.outer, w) + i3), order, "PI_trans_nested");
}

}  // namespace stairgf
