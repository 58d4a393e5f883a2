#include "stairgf/series.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace stairgf {

LaurentSeries::LaurentSeries(int valuation, std::vector<Rational> coeffs, int trunc)
    : val_(valuation), c_(std::move(coeffs)), trunc_(trunc) {
  if (val_ + static_cast<int>(c_.size()) > trunc_) c_.resize(static_cast<size_t>(std::max(0, trunc_ - val_)));
  if (val_ + static_cast<int>(c_.size()) < trunc_) c_.resize(static_cast<size_t>(trunc_ - val_));
  normalize();
}

void LaurentSeries::normalize() {
  size_t k = 0;
  while (k < c_.size() && c_[k] == 0) ++k;
  if (k == c_.size()) {
    c_.clear();
    val_ = trunc_;
    return;
  }
  if (k > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(k));
    val_ += static_cast<int>(k);
  }
}

LaurentSeries LaurentSeries::constant(const Rational& c, int trunc) { return monomial(c, 0, trunc); }

LaurentSeries LaurentSeries::monomial(const Rational& c, int k, int trunc) {
  if (k >= trunc || c == 0) return zero(trunc);
  std::vector<Rational> v(static_cast<size_t>(trunc - k));
  v[0] = c;
  return LaurentSeries(k, std::move(v), trunc);
}

LaurentSeries LaurentSeries::from_polynomial(const Polynomial& p, int trunc) {
  std::vector<Rational> v(p.coeffs().begin(), p.coeffs().end());
  if (trunc <= 0) return zero(trunc);
  return LaurentSeries(0, std::move(v), trunc);
}

LaurentSeries LaurentSeries::from_ratfunc(const RatFunc& f, int trunc) {
  if (f.is_polynomial()) return from_polynomial(f.num(), trunc);
  int v = f.den().valuation();
  Polynomial den = f.den().shifted(-v);
  // num / den computed to x^(trunc + v) then shifted down by v.
  int len = trunc + v;
  if (len <= 0) return zero(trunc);
  LaurentSeries n = from_polynomial(f.num(), len);
  LaurentSeries d = from_polynomial(den, len);
  return (n / d).shifted(-v);
}

Rational LaurentSeries::coeff(int n) const {
  if (n >= trunc_) throw PrecisionError("coefficient of x^" + std::to_string(n) + " is beyond the truncation O(x^" +
                                        std::to_string(trunc_) + ")");
  if (n < val_) return 0;
  return c_[static_cast<size_t>(n - val_)];
}

const Rational& LaurentSeries::leading() const {
  if (c_.empty()) throw PrecisionError("series is zero up to O(x^" + std::to_string(trunc_) + ")");
  return c_.front();
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& rhs) {
  int t = std::min(trunc_, rhs.trunc_);
  int v = std::min(val_, rhs.val_);
  if (v >= t) return *this = zero(t);
  std::vector<Rational> r(static_cast<size_t>(t - v));
  for (int n = std::max(v, val_); n < t && n - val_ < static_cast<int>(c_.size()); ++n)
    r[static_cast<size_t>(n - v)] = c_[static_cast<size_t>(n - val_)];
  for (int n = std::max(v, rhs.val_); n < t && n - rhs.val_ < static_cast<int>(rhs.c_.size()); ++n)
    r[static_cast<size_t>(n - v)] += rhs.c_[static_cast<size_t>(n - rhs.val_)];
  return *this = LaurentSeries(v, std::move(r), t);
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& rhs) { return *this += -rhs; }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  int t = std::min(a.trunc_ + b.val_, b.trunc_ + a.val_);
  int v = a.val_ + b.val_;
  if (a.is_zero() || b.is_zero() || v >= t) return LaurentSeries::zero(t);
  return LaurentSeries(v, convolve(a.c_, b.c_, static_cast<size_t>(t - v)), t);
}

LaurentSeries& LaurentSeries::operator*=(const LaurentSeries& rhs) { return *this = *this * rhs; }

LaurentSeries& LaurentSeries::operator*=(const Rational& s) {
  if (s == 0) return *this = zero(trunc_);
  for (auto& c : c_) c *= s;
  return *this;
}

LaurentSeries LaurentSeries::inverse() const {
  if (c_.empty())
    throw DomainError("division by a series that is zero up to O(x^" + std::to_string(trunc_) + ")");
  const size_t n = c_.size();
  std::vector<Rational> w(n);
  Rational inv0 = 1 / c_[0];
  w[0] = inv0;
  Rational acc;
  for (size_t k = 1; k < n; ++k) {
    acc = 0;
    for (size_t j = 1; j <= k; ++j) acc += c_[j] * w[k - j];
    w[k] = -acc * inv0;
  }
  return LaurentSeries(-val_, std::move(w), trunc_ - 2 * val_);
}

LaurentSeries& LaurentSeries::operator/=(const LaurentSeries& rhs) { return *this = *this * rhs.inverse(); }

bool operator==(const LaurentSeries& a, const LaurentSeries& b) { return !first_mismatch(a, b).has_value(); }

std::optional<int> first_mismatch(const LaurentSeries& a, const LaurentSeries& b) {
  int t = std::min(a.trunc(), b.trunc());
  for (int n = std::min(a.valuation(), b.valuation()); n < t; ++n)
    if (a.coeff(n) != b.coeff(n)) return n;
  return std::nullopt;
}

LaurentSeries LaurentSeries::derivative() const {
  if (is_zero()) return zero(trunc_ - 1);
  std::vector<Rational> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * (val_ + static_cast<long>(i));
  return LaurentSeries(val_ - 1, std::move(r), trunc_ - 1);
}

LogObstructionError::LogObstructionError(const Rational& residue)
    : DomainError("logarithmic obstruction: residue " + stairgf::to_string(residue)), residue_(residue) {}

LaurentSeries LaurentSeries::integrate() const {
  if (is_zero()) return zero(trunc_ + 1);
  std::vector<Rational> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) {
    long e = val_ + static_cast<long>(i);
    if (e == -1) {
      if (c_[i] != 0) throw LogObstructionError(c_[i]);
      continue;
    }
    r[i] = c_[i] / (e + 1);
  }
  return LaurentSeries(val_ + 1, std::move(r), trunc_ + 1);
}

LaurentSeries LaurentSeries::shifted(int k) const {
  LaurentSeries r = *this;
  r.val_ += k;
  r.trunc_ += k;
  return r;
}

LaurentSeries LaurentSeries::truncated(int n) const {
  if (n >= trunc_) return *this;
  return LaurentSeries(val_, c_, n);
}

LaurentSeries LaurentSeries::substitute_monomial(const Rational& c, int k) const {
  if (k < 1) throw DomainError("monomial substitution needs a positive exponent");
  std::vector<Rational> r(c_.size() * static_cast<size_t>(k));
  Rational cp = stairgf::pow(c, val_);
  for (size_t i = 0; i < c_.size(); ++i) {
    r[i * static_cast<size_t>(k)] = c_[i] * cp;
    cp *= c;
  }
  // Exponents between k*(trunc-1) and k*trunc are still determined (zero).
  return LaurentSeries(val_ * k, std::move(r), trunc_ * k);
}

LaurentSeries LaurentSeries::compose(const LaurentSeries& inner) const {
  if (val_ < 0) throw DomainError("composition of a series with a pole");
  if (!inner.is_zero() && inner.val_ < 1) throw DomainError("pullback must vanish at origin");
  const int vi = inner.val_;  // equals inner.trunc when inner is zero
  if (vi < 1) throw DomainError("pullback must vanish at origin");
  int kmin = trunc_;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0 && val_ + static_cast<int>(i) >= 1) {
      kmin = val_ + static_cast<int>(i);
      break;
    }
  long t = static_cast<long>(vi) * trunc_;
  if (kmin < trunc_) t = std::min(t, static_cast<long>(inner.trunc_) + static_cast<long>(kmin - 1) * vi);
  const int tr = static_cast<int>(t);
  LaurentSeries acc = constant(coeff(0), tr);
  if (inner.is_zero()) return acc;
  LaurentSeries power = inner.truncated(tr);
  for (int k = 1; k < trunc_ && static_cast<long>(k) * vi < tr; ++k) {
    if (k > 1) power = (power * inner).truncated(tr);
    Rational ck = coeff(k);
    if (ck != 0) acc += power * ck;
  }
  return acc.truncated(tr);
}

LaurentSeries LaurentSeries::pow(const Rational& e) const {
  if (is_zero()) {
    if (e > 0 && is_integer(e)) {
      // 0^e stays zero; precision scales with e.
      return zero(static_cast<int>(trunc_ * e.get_num().get_si()));
    }
    throw DomainError("power of a series that is zero up to O(x^" + std::to_string(trunc_) + ")");
  }
  const Rational& c = c_[0];
  Rational ve = Rational(val_) * e;
  if (!is_integer(ve)) throw DomainError("fractional exponent of x (Puiseux series are not supported)");
  Rational ce;
  if (is_integer(e)) {
    ce = stairgf::pow(c, e.get_num().get_si());
  } else {
    if (c <= 0) throw DomainError("non-integer power of a series with nonpositive leading coefficient");
    Rational root;
    if (!exact_root(c, e.get_den().get_ui(), root))
      throw DomainError("leading coefficient " + stairgf::to_string(c) + " has no rational root of order " +
                        stairgf::to_string(Integer(e.get_den())));
    ce = stairgf::pow(root, e.get_num().get_si());
  }
  const size_t n = c_.size();
  std::vector<Rational> u(n), w(n);
  for (size_t i = 0; i < n; ++i) u[i] = c_[i] / c;
  w[0] = 1;
  Rational acc, ep1 = e + 1, tmp;
  for (size_t m = 1; m < n; ++m) {
    acc = 0;
    for (size_t k = 1; k <= m; ++k) {
      if (u[k] == 0) continue;
      tmp = ep1 * static_cast<long>(k) - static_cast<long>(m);
      acc += tmp * u[k] * w[m - k];
    }
    w[m] = acc / static_cast<long>(m) ;
  }
  for (auto& x : w) x *= ce;
  int v = static_cast<int>(ve.get_num().get_si());
  return LaurentSeries(v, std::move(w), v + static_cast<int>(n));
}

namespace {

void render_term(std::ostringstream& os, const Rational& c, int k, std::string_view var, bool first) {
  Rational mag = abs(c);
  if (first) {
    if (c < 0) os << "-";
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  if (k == 0) {
    os << to_string(mag);
    return;
  }
  if (mag != 1) os << to_string(mag) << "*";
  os << var;
  if (k != 1) os << "^" << k;
}

}  // namespace

std::string LaurentSeries::to_string(std::string_view var) const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    render_term(os, c_[i], val_ + static_cast<int>(i), var, first);
    first = false;
  }
  if (!first) os << " + ";
  os << "O(" << var;
  if (trunc_ != 1) os << "^" << trunc_;
  os << ")";
  return os.str();
}

std::string LaurentSeries::to_machine() const {
  nlohmann::ordered_json j;
  j["valuation"] = val_;
  j["trunc"] = trunc_;
  auto arr = nlohmann::json::array();
  for (const auto& c : c_) arr.push_back(stairgf::to_string(c));
  j["coeffs"] = arr;
  return j.dump();
}

LogSeries::LogSeries(std::vector<LaurentSeries> parts) : parts_(std::move(parts)) {}

int LogSeries::log_degree() const {
  for (int k = static_cast<int>(parts_.size()) - 1; k >= 0; --k)
    if (!parts_[static_cast<size_t>(k)].is_zero()) return k;
  return -1;
}

int LogSeries::trunc() const {
  int t = std::numeric_limits<int>::max();
  for (const auto& p : parts_) t = std::min(t, p.trunc());
  return t;
}

LogSeries& LogSeries::operator+=(const LogSeries& rhs) {
  size_t n = std::max(parts_.size(), rhs.parts_.size());
  std::vector<LaurentSeries> r(n);
  for (size_t k = 0; k < n; ++k) {
    if (k < parts_.size() && k < rhs.parts_.size())
      r[k] = parts_[k] + rhs.parts_[k];
    else if (k < parts_.size())
      r[k] = parts_[k];
    else
      r[k] = rhs.parts_[k];
  }
  parts_ = std::move(r);
  return *this;
}

LogSeries& LogSeries::operator*=(const LaurentSeries& s) {
  for (auto& p : parts_) p *= s;
  return *this;
}

LogSeries operator*(LogSeries a, const Rational& s) {
  for (auto& p : a.parts_) p *= s;
  return a;
}

LogSeries LogSeries::derivative() const {
  std::vector<LaurentSeries> r(parts_.size());
  for (size_t k = 0; k < parts_.size(); ++k) r[k] = parts_[k].derivative();
  for (size_t k = 1; k < parts_.size(); ++k)
    r[k - 1] += parts_[k].shifted(-1) * Rational(static_cast<long>(k));
  return LogSeries(std::move(r));
}

std::string LogSeries::to_string(std::string_view var) const {
  std::string out;
  for (size_t k = 0; k < parts_.size(); ++k) {
    if (k) out += " + ";
    out += "(" + parts_[k].to_string(var) + ")";
    if (k == 1) out += "*log(" + std::string(var) + ")";
    if (k > 1) out += "*log(" + std::string(var) + ")^" + std::to_string(k);
  }
  return out;
}

Rational BivarSeries::coeff(int i, int j) const {
  if (i + j >= trunc_) throw PrecisionError("bivariate coefficient beyond total-degree truncation");
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

void BivarSeries::set(int i, int j, const Rational& c) {
  if (i < 0 || j < 0) throw DomainError("negative exponent in bivariate series");
  if (i + j >= trunc_) return;
  if (c == 0)
    terms_.erase({i, j});
  else
    terms_[{i, j}] = c;
}

BivarSeries operator+(const BivarSeries& a, const BivarSeries& b) {
  BivarSeries r(std::min(a.trunc_, b.trunc_));
  for (const auto& [k, c] : a.terms_) r.set(k.first, k.second, c);
  for (const auto& [k, c] : b.terms_) r.set(k.first, k.second, r.terms_.count(k) ? r.terms_[k] + c : c);
  return r;
}

BivarSeries operator-(const BivarSeries& a, const BivarSeries& b) {
  BivarSeries nb(b.trunc_);
  for (const auto& [k, c] : b.terms_) nb.set(k.first, k.second, -c);
  return a + nb;
}

BivarSeries operator*(const BivarSeries& a, const BivarSeries& b) {
  // Both operands are power series, so total-degree truncation is the smaller one.
  BivarSeries r(std::min(a.trunc_, b.trunc_));
  std::map<std::pair<int, int>, Rational> acc;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      int i = ka.first + kb.first, j = ka.second + kb.second;
      if (i + j >= r.trunc_) continue;
      acc[{i, j}] += ca * cb;
    }
  for (const auto& [k, c] : acc) r.set(k.first, k.second, c);
  return r;
}

LaurentSeries BivarSeries::diagonal() const {
  std::vector<Rational> v(static_cast<size_t>(trunc_));
  for (const auto& [k, c] : terms_) v[static_cast<size_t>(k.first + k.second)] += c;
  return LaurentSeries(0, std::move(v), trunc_);
}

BivarSeries bivar_newton_solve(int trunc_total) {
  if (trunc_total < 1) throw DomainError("bivariate truncation must be positive");
  BivarSeries x(trunc_total), y(trunc_total), p(trunc_total);
  x.set(1, 0, 1);
  y.set(0, 1, 1);
  p.set(1, 1, 1);
  // Each pass fixes at least one more total degree.
  for (int it = 0; it <= trunc_total; ++it) {
    BivarSeries next = (p + x) * (p + y);
    if (next == p) return p;
    p = std::move(next);
  }
  throw Error("bivariate fixed-point iteration did not converge");
}

}  // namespace stairgf
