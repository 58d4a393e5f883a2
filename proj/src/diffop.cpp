#include "stairgf/diffop.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>

namespace stairgf {

namespace {

Polynomial lcm(const Polynomial& a, const Polynomial& b) { return exact_div(a * b, gcd(a, b)); }

// Polynomial coefficients of the operator after clearing all denominators.
std::vector<Polynomial> cleared(const DiffOp& L) {
  Polynomial den = 1;
  for (const auto& c : L.coeffs()) den = lcm(den, c.den());
  std::vector<Polynomial> out;
  for (const auto& c : L.coeffs()) out.push_back(c.num() * exact_div(den, c.den()));
  return out;
}

// theta(theta-1)...(theta-i+1).
Polynomial falling(int i) {
  Polynomial r = 1;
  for (int k = 0; k < i; ++k) r *= Polynomial{Rational(-k), Rational(1)};
  return r;
}

// Coefficients of p(at + t) in t.
std::vector<Rational> taylor(const Polynomial& p, const Rational& at) {
  std::vector<Rational> c(p.coeffs().begin(), p.coeffs().end());
  const size_t n = c.size();
  for (size_t i = 0; i + 1 < n; ++i)
    for (size_t j = n - 1; j > i; --j) c[j - 1] += at * c[j];
  return c;
}

// Rational approximation with bounded denominator by continued fractions.
Rational approximate(long double v, long max_den) {
  long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  long double x = v;
  for (int it = 0; it < 40; ++it) {
    long double fl = std::floor(x);
    if (std::fabs(fl) > 1e15L) break;
    long a = static_cast<long>(fl);
    long h2 = a * h1 + h0, k2 = a * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    long double frac = x - fl;
    if (frac < 1e-12L) break;
    x = 1 / frac;
  }
  return k1 == 0 ? Rational(0) : Rational(h1, k1);
}

std::vector<std::complex<long double>> numeric_roots(const Polynomial& p) {
  const int n = p.degree();
  std::vector<std::complex<long double>> a(static_cast<size_t>(n + 1));
  for (int i = 0; i <= n; ++i) a[static_cast<size_t>(i)] = Rational(p.coeff(i) / p.lc()).get_d();
  std::vector<std::complex<long double>> z(static_cast<size_t>(n));
  std::complex<long double> seed(0.4L, 0.9L);
  for (int i = 0; i < n; ++i) z[static_cast<size_t>(i)] = std::pow(seed, i);
  for (int it = 0; it < 500; ++it) {
    long double delta = 0;
    for (int i = 0; i < n; ++i) {
      std::complex<long double> num = 1, den = 1, zi = z[static_cast<size_t>(i)];
      num = a[static_cast<size_t>(n)];
      for (int k = n - 1; k >= 0; --k) num = num * zi + a[static_cast<size_t>(k)];
      for (int j = 0; j < n; ++j)
        if (j != i) den *= zi - z[static_cast<size_t>(j)];
      auto step = num / den;
      z[static_cast<size_t>(i)] -= step;
      delta = std::max(delta, std::abs(step));
    }
    if (delta < 1e-18L) break;
  }
  return z;
}

// Splits p into its rational roots (with multiplicity, ascending) and a cofactor without any.
std::pair<std::vector<Rational>, Polynomial> rational_roots(Polynomial p) {
  std::vector<Rational> roots;
  while (!p.is_zero() && p.degree() > 0 && p.coeff(0) == 0) {
    roots.emplace_back(0);
    p = p.shifted(-1);
  }
  bool found = true;
  while (found && p.degree() > 0) {
    found = false;
    for (const auto& z : numeric_roots(p)) {
      if (std::fabs(z.imag()) > 1e-6L) continue;
      Rational r = approximate(z.real(), 1000000);
      if (p(r) == 0) {
        roots.push_back(r);
        p = exact_div(p, Polynomial{-r, Rational(1)});
        found = true;
        break;
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return {roots, p};
}

// Factors of the cofactor left without rational roots (kept whole, made monic).
std::vector<Polynomial> irreducible_rest(const Polynomial& p) {
  if (p.degree() <= 0) return {};
  return {p.monic()};
}

}  // namespace

DiffOp normalized(const DiffOp& L) {
  if (L.is_zero()) return L;
  std::vector<Polynomial> polys = cleared(L);
  Polynomial g;
  for (const auto& p : polys) g = gcd(g, p);
  for (auto& p : polys) p = exact_div(p, g);
  std::vector<Rational> all;
  for (const auto& p : polys)
    for (const auto& c : p.coeffs()) all.push_back(c);
  std::vector<Integer> ints = Polynomial(all).primitive_integer();
  // Scale factor mapping rational coefficients to the primitive integer ones.
  Rational scale = Rational(ints.back()) / all.back();
  if (polys.back().lc() * scale < 0) scale = -scale;
  std::vector<RatFunc> out;
  for (auto& p : polys) out.emplace_back(p * scale);
  return DiffOp(std::move(out));
}

QDiffOp normalized(const QDiffOp& L) {
  if (L.is_zero()) return L;
  QuadExt top = L.coeffs().back();
  std::vector<QuadExt> out;
  for (const auto& c : L.coeffs()) out.push_back(c / top);
  return QDiffOp(std::move(out));
}

QDiffOp to_quad(const DiffOp& L, const Polynomial& d) {
  std::vector<QuadExt> out;
  for (const auto& c : L.coeffs()) out.emplace_back(c, RatFunc(), d);
  return QDiffOp(std::move(out));
}

bool check_intertwiner(const QDiffOp& lhsA, const QDiffOp& lhsB, const QDiffOp& rhsA, const QDiffOp& rhsB) {
  return lhsA * lhsB == rhsA * rhsB;
}

bool check_intertwiner(const DiffOp& lhsA, const DiffOp& lhsB, const DiffOp& rhsA, const DiffOp& rhsB) {
  return lhsA * lhsB == rhsA * rhsB;
}

namespace {

// Expansion of r to the precision needed to multiply against g without losing more than g's window.
LaurentSeries times_coefficient(const RatFunc& r, const LaurentSeries& g) {
  int w = r.num().valuation() - r.den().valuation();
  int need = g.trunc() - g.valuation() + w;
  return LaurentSeries::from_ratfunc(r, need) * g;
}

}  // namespace

LaurentSeries apply(const DiffOp& L, const LaurentSeries& f) {
  if (L.is_zero()) return LaurentSeries::zero(f.trunc());
  std::optional<LaurentSeries> acc;
  LaurentSeries g = f;
  for (int i = 0; i <= L.order(); ++i) {
    if (i > 0) g = g.derivative();
    const RatFunc& r = L.coeffs()[static_cast<size_t>(i)];
    if (r.is_zero()) continue;
    LaurentSeries term = times_coefficient(r, g);
    acc = acc ? *acc + term : term;
  }
  return *acc;
}

LogSeries apply(const DiffOp& L, const LogSeries& f) {
  std::vector<LaurentSeries> parts;
  LogSeries g = f;
  std::optional<LogSeries> acc;
  for (int i = 0; i <= L.order(); ++i) {
    if (i > 0) g = g.derivative();
    const RatFunc& r = L.coeffs()[static_cast<size_t>(i)];
    if (r.is_zero()) continue;
    std::vector<LaurentSeries> tp;
    for (const auto& p : g.parts()) tp.push_back(times_coefficient(r, p));
    LogSeries term(std::move(tp));
    acc = acc ? *acc + term : term;
  }
  if (!acc) return f * LaurentSeries::zero(f.trunc());
  return *acc;
}

DiffOp localize(const DiffOp& L, const std::optional<Rational>& point) {
  Polynomial t = Polynomial::x();
  if (point) {
    if (*point == 0) return L;
    RatFunc inner(t + Polynomial(*point));
    std::vector<RatFunc> out;
    for (const auto& c : L.coeffs()) out.push_back(c.compose(inner));
    return DiffOp(std::move(out));
  }
  RatFunc inv(Polynomial(1), t);
  DiffOp dx = DiffOp({RatFunc(), RatFunc(t * t * Rational(-1))});
  DiffOp power = DiffOp::identity(), acc;
  for (int i = 0; i <= L.order(); ++i) {
    if (i > 0) power = dx * power;
    acc = acc + DiffOp::multiplier(L.coeffs()[static_cast<size_t>(i)].compose(inv)) * power;
  }
  return acc;
}

IndicialData indicial_exponents(const DiffOp& L, const std::optional<Rational>& point) {
  if (L.is_zero()) throw DomainError("indicial equation of the zero operator");
  DiffOp local = localize(L, point);
  std::vector<Polynomial> a = cleared(local);
  const int n = local.order();
  int m = 0;
  bool first = true;
  for (int i = 0; i <= n; ++i) {
    if (a[static_cast<size_t>(i)].is_zero()) continue;
    int s = a[static_cast<size_t>(i)].valuation() - i;
    if (first || s < m) m = s;
    first = false;
  }
  if (a[static_cast<size_t>(n)].valuation() - n != m) throw DomainError("irregular singular point");
  Polynomial ind;
  for (int i = 0; i <= n; ++i) {
    const Polynomial& ai = a[static_cast<size_t>(i)];
    if (ai.is_zero() || ai.valuation() - i != m) continue;
    ind += falling(i) * ai.coeff(ai.valuation());
  }
  ind = ind.monic();
  auto [roots, rest] = rational_roots(ind);
  return IndicialData{point, ind, roots, irreducible_rest(rest)};
}

std::vector<LogSeries> frobenius_basis(const DiffOp& L, int order) {
  if (L.is_zero()) throw DomainError("Frobenius basis of the zero operator");
  const int ord = L.order();
  std::vector<Polynomial> a = cleared(L);
  int s = 0;
  for (int i = 0; i <= ord; ++i)
    if (!a[static_cast<size_t>(i)].is_zero()) s = std::max(s, i - a[static_cast<size_t>(i)].valuation());
  // x^s * L = sum_k x^k P_k(theta).
  std::vector<Polynomial> P;
  for (int i = 0; i <= ord; ++i) {
    const Polynomial& ai = a[static_cast<size_t>(i)];
    if (ai.is_zero()) continue;
    Polynomial b = ai.shifted(s - i);
    Polynomial fi = falling(i);
    for (int k = 0; k <= b.degree(); ++k) {
      if (static_cast<int>(P.size()) <= k) P.resize(static_cast<size_t>(k + 1));
      if (b.coeff(k) != 0) P[static_cast<size_t>(k)] += fi * b.coeff(k);
    }
  }
  if (P[0].degree() != ord) throw DomainError("x = 0 is not a regular singular point");
  auto [roots, rest] = rational_roots(P[0]);
  if (rest.degree() > 0) throw DomainError("indicial equation at 0 has irrational roots");
  for (const auto& r : roots)
    if (!is_integer(r)) throw DomainError("non-integer indicial exponent at 0");
  std::map<long, int> mult;
  for (const auto& r : roots) ++mult[r.get_num().get_si()];
  const long rho = mult.begin()->first;
  const int kmax = ord;  // log components 0..kmax
  const int nmax = static_cast<int>(order - rho);  // exponents rho + n < order
  using Vec = std::vector<Rational>;

  auto solve_from = [&](long n0, int f) {
    std::vector<Vec> C(static_cast<size_t>(std::max(nmax, 0)), Vec(static_cast<size_t>(kmax + 1)));
    if (n0 >= nmax) return C;
    C[static_cast<size_t>(n0)][static_cast<size_t>(f)] = 1;
    for (long n = n0 + 1; n < nmax; ++n) {
      Vec rhs(static_cast<size_t>(kmax + 1));
      const Rational lambda = rho + n;
      for (long k = 1; k < static_cast<long>(P.size()) && n - k >= n0; ++k) {
        if (P[static_cast<size_t>(k)].is_zero()) continue;
        const Vec& prev = C[static_cast<size_t>(n - k)];
        std::vector<Rational> t = taylor(P[static_cast<size_t>(k)], lambda - k);
        for (int j = 0; j <= kmax; ++j)
          for (int r = 0; r < static_cast<int>(t.size()) && j + r <= kmax; ++r)
            if (t[static_cast<size_t>(r)] != 0) rhs[static_cast<size_t>(j)] -= t[static_cast<size_t>(r)] * prev[static_cast<size_t>(j + r)];
      }
      std::vector<Rational> t0 = taylor(P[0], lambda);
      int mu = 0;
      while (t0[static_cast<size_t>(mu)] == 0) ++mu;
      Vec& c = C[static_cast<size_t>(n)];
      for (int j = kmax; j >= 0; --j) {
        Rational acc = rhs[static_cast<size_t>(j)];
        for (int r = mu + 1; r < static_cast<int>(t0.size()) && j + r <= kmax; ++r)
          acc -= t0[static_cast<size_t>(r)] * c[static_cast<size_t>(j + r)];
        if (j + mu > kmax) {
          if (acc != 0) throw Error("Frobenius recursion exceeded the log-degree bound");
          continue;
        }
        c[static_cast<size_t>(j + mu)] = acc / t0[static_cast<size_t>(mu)];
      }
    }
    return C;
  };

  std::vector<LogSeries> basis;
  for (const auto& [root, mu] : mult) {
    for (int f = 0; f < mu; ++f) {
      auto C = solve_from(root - rho, f);
      std::vector<LaurentSeries> parts;
      Rational fact = 1;
      for (int k = 0; k <= kmax; ++k) {
        if (k > 0) fact *= k;
        Vec coeffs;
        for (const auto& cn : C) coeffs.push_back(cn[static_cast<size_t>(k)] / fact);
        parts.emplace_back(static_cast<int>(rho), std::move(coeffs), order);
      }
      LogSeries ls(std::move(parts));
      int deg = std::max(ls.log_degree(), 0);
      std::vector<LaurentSeries> kept(ls.parts().begin(), ls.parts().begin() + deg + 1);
      basis.emplace_back(std::move(kept));
    }
  }

  // Log reduction: combine elements whose top log parts are dependent.
  auto top = [](const LogSeries& e) { return e.part(static_cast<size_t>(std::max(e.log_degree(), 0))); };
  auto combine = [](const LogSeries& e, const LogSeries& g, const Rational& c) {
    LogSeries r = e + g * (-c);
    int deg = std::max(r.log_degree(), 0);
    return LogSeries(std::vector<LaurentSeries>(r.parts().begin(), r.parts().begin() + deg + 1));
  };
  bool changed = true;
  while (changed) {
    changed = false;
    int maxdeg = 0;
    for (const auto& e : basis) maxdeg = std::max(maxdeg, e.log_degree());
    for (int k = maxdeg; k >= 1 && !changed; --k) {
      std::vector<size_t> group;
      for (size_t i = 0; i < basis.size(); ++i)
        if (basis[i].log_degree() == k) group.push_back(i);
      std::vector<std::pair<size_t, int>> pivots;  // element, pivot exponent
      for (size_t gi : group) {
        for (const auto& [pe, pexp] : pivots) {
          Rational c = top(basis[gi]).coeff(pexp);
          if (c != 0) basis[gi] = combine(basis[gi], basis[pe], c / top(basis[pe]).coeff(pexp));
        }
        if (basis[gi].log_degree() < k) {
          changed = true;
          break;
        }
        pivots.emplace_back(gi, top(basis[gi]).valuation());
      }
    }
  }
  for (auto& e : basis) e = e * (1 / top(e).leading());
  auto exponent = [](const LogSeries& e) {
    int v = e.trunc();
    for (const auto& p : e.parts()) v = std::min(v, p.valuation());
    return v;
  };
  std::stable_sort(basis.begin(), basis.end(), [&](const LogSeries& x, const LogSeries& y) {
    return std::pair(exponent(x), x.log_degree()) < std::pair(exponent(y), y.log_degree());
  });
  return basis;
}

}  // namespace stairgf
