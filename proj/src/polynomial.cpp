#include "stairgf/polynomial.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <sstream>

namespace stairgf {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

Polynomial Polynomial::monomial(const Rational& c, int k) {
  if (k < 0) throw DomainError("negative monomial exponent");
  if (c == 0) return {};
  std::vector<Rational> v(static_cast<size_t>(k) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& Polynomial::lc() const {
  if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<size_t>(i)];
}

int Polynomial::valuation() const {
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return static_cast<int>(i);
  return 0;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

namespace {

// Common denominator and integer numerators of a coefficient list.
Integer integer_form(std::span<const Rational> c, std::vector<Integer>& out) {
  Integer den = 1;
  for (const auto& q : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  out.resize(c.size());
  for (size_t i = 0; i < c.size(); ++i) {
    Integer t = den / c[i].get_den();
    out[i] = c[i].get_num() * t;
  }
  return den;
}

}  // namespace

std::vector<Rational> convolve(std::span<const Rational> a, std::span<const Rational> b, size_t len) {
  if (a.empty() || b.empty()) return {};
  const size_t n = a.size(), m = b.size();
  size_t full = n + m - 1;
  if (len == 0 || len > full) len = full;
  std::vector<Rational> r(len);
  if (n * m <= 16) {
    for (size_t i = 0; i < n && i < len; ++i)
      for (size_t j = 0; j < m && i + j < len; ++j) r[i + j] += a[i] * b[j];
    return r;
  }
  std::vector<Integer> ai, bi;
  Integer da = integer_form(a, ai);
  Integer db = integer_form(b, bi);
  std::vector<Integer> ri(len);
  for (size_t i = 0; i < n && i < len; ++i) {
    if (ai[i] == 0) continue;
    for (size_t j = 0; j < m && i + j < len; ++j)
      mpz_addmul(ri[i + j].get_mpz_t(), ai[i].get_mpz_t(), bi[j].get_mpz_t());
  }
  Integer den = da * db;
  for (size_t k = 0; k < len; ++k) {
    mpz_set(r[k].get_num_mpz_t(), ri[k].get_mpz_t());
    mpz_set(r[k].get_den_mpz_t(), den.get_mpz_t());
    r[k].canonicalize();
  }
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  return Polynomial(convolve(a.coeffs_, b.coeffs_));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Polynomial& Polynomial::operator/=(const Rational& s) {
  if (s == 0) throw DomainError("polynomial divided by zero");
  for (auto& c : coeffs_) c /= s;
  return *this;
}

Rational Polynomial::operator()(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Polynomial Polynomial::compose(const Polynomial& inner) const {
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + Polynomial(*it);
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> r(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) r[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Polynomial(std::move(r));
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result(1), base = *this;
  while (k) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k) base *= base;
  }
  return result;
}

Polynomial Polynomial::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  if (k > 0) {
    std::vector<Rational> r(static_cast<size_t>(k));
    r.insert(r.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(r));
  }
  if (valuation() < -k) throw DomainError("polynomial not divisible by the requested power of x");
  return Polynomial(std::vector<Rational>(coeffs_.begin() - k, coeffs_.end()));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  return *this / lc();
}

std::vector<Integer> Polynomial::primitive_integer() const {
  std::vector<Integer> out;
  integer_form(coeffs_, out);
  Integer g = 0;
  for (const auto& c : out) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) return out;
  if (!out.empty() && out.back() < 0) g = -g;
  for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return out;
}

Polynomial Polynomial::from_integers(std::span<const Integer> coeffs) {
  std::vector<Rational> r;
  r.reserve(coeffs.size());
  for (const auto& c : coeffs) r.emplace_back(c);
  return Polynomial(std::move(r));
}

std::string Polynomial::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<size_t>(i)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << stairgf::to_string(mag);
      continue;
    }
    if (mag != 1) os << stairgf::to_string(mag) << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  const Rational inv_lc = Rational(1) / b.lc();
  std::vector<Rational> quo(static_cast<size_t>(a.degree() - db + 1));
  Rational t;
  for (int k = a.degree() - db; k >= 0; --k) {
    const Rational& top = rem[static_cast<size_t>(k + db)];
    if (top == 0) continue;
    Rational q = top * inv_lc;
    quo[static_cast<size_t>(k)] = q;
    for (int j = 0; j <= db; ++j) {
      t = q * b.coeffs()[static_cast<size_t>(j)];
      rem[static_cast<size_t>(k + j)] -= t;
    }
  }
  rem.resize(static_cast<size_t>(db));
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw DomainError("inexact polynomial division");
  return q;
}

Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1U) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1U;
  }
  return r;
}

std::vector<u64> reduce_mod(const std::vector<Integer>& c, u64 p) {
  std::vector<u64> r(c.size());
  for (size_t i = 0; i < c.size(); ++i) r[i] = mpz_fdiv_ui(c[i].get_mpz_t(), p);
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

// Degree of gcd over F_p.
int gcd_degree_mod(std::vector<u64> a, std::vector<u64> b, u64 p) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    u64 inv = powmod(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
      u64 q = mulmod(a.back(), inv, p);
      size_t off = a.size() - b.size();
      for (size_t j = 0; j < b.size(); ++j) {
        u64 t = mulmod(q, b[j], p);
        a[off + j] = (a[off + j] + p - t) % p;
      }
      while (!a.empty() && a.back() == 0) a.pop_back();
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

void make_primitive(std::vector<Integer>& c) {
  Integer g = 0;
  for (const auto& v : c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g == 0) return;
  for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// Pseudo-remainder of a by b over Z (up to a unit factor), made primitive.
std::vector<Integer> prem_primitive(std::vector<Integer> a, const std::vector<Integer>& b) {
  const size_t nb = b.size();
  const Integer& lb = b.back();
  Integer top;
  while (a.size() >= nb) {
    top = a.back();
    size_t off = a.size() - nb;
    for (auto& v : a) v *= lb;
    for (size_t j = 0; j < nb; ++j) mpz_submul(a[off + j].get_mpz_t(), top.get_mpz_t(), b[j].get_mpz_t());
    while (!a.empty() && a.back() == 0) a.pop_back();
    make_primitive(a);
  }
  return a;
}

constexpr std::array<u64, 3> kPrimes = {4611686018427387847ULL, 4611686018427387817ULL,
                                        4611686018427387787ULL};

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  std::vector<Integer> A = a.primitive_integer(), B = b.primitive_integer();
  for (u64 p : kPrimes) {
    if (mpz_fdiv_ui(A.back().get_mpz_t(), p) == 0 || mpz_fdiv_ui(B.back().get_mpz_t(), p) == 0) continue;
    if (gcd_degree_mod(reduce_mod(A, p), reduce_mod(B, p), p) == 0) return Polynomial(1);
    break;
  }
  if (A.size() < B.size()) std::swap(A, B);
  while (!B.empty()) {
    std::vector<Integer> R = prem_primitive(A, B);
    A = std::move(B);
    B = std::move(R);
  }
  return Polynomial::from_integers(A).monic();
}

}  // namespace stairgf
