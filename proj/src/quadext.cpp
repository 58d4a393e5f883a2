#include "stairgf/quadext.hpp"

#include <algorithm>

namespace stairgf {

QuadExt::QuadExt(RatFunc a, RatFunc b, Polynomial d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (d_.is_zero() && !b_.is_zero()) throw DomainError("quadratic extension needs a nonzero modulus");
}

void QuadExt::unify(const QuadExt& rhs) {
  if (!rhs.has_modulus()) return;
  if (!has_modulus()) {
    d_ = rhs.d_;
    return;
  }
  if (!(d_ == rhs.d_)) throw DomainError("quadratic extension modulus mismatch");
}

RatFunc QuadExt::norm() const {
  if (b_.is_zero()) return a_ * a_;
  return a_ * a_ - b_ * b_ * RatFunc(d_);
}

QuadExt& QuadExt::operator+=(const QuadExt& rhs) {
  unify(rhs);
  a_ += rhs.a_;
  b_ += rhs.b_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& rhs) {
  unify(rhs);
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& rhs) {
  unify(rhs);
  if (rhs.b_.is_zero()) {
    a_ *= rhs.a_;
    b_ *= rhs.a_;
    return *this;
  }
  if (b_.is_zero()) {
    b_ = a_ * rhs.b_;
    a_ *= rhs.a_;
    return *this;
  }
  RatFunc na = a_ * rhs.a_ + b_ * rhs.b_ * RatFunc(d_);
  RatFunc nb = a_ * rhs.b_ + b_ * rhs.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& rhs) {
  unify(rhs);
  RatFunc n = rhs.norm();
  if (n.is_zero()) throw DomainError("division by an element of zero norm");
  *this *= rhs.conjugate();
  a_ /= n;
  b_ /= n;
  return *this;
}

bool operator==(const QuadExt& a, const QuadExt& b) {
  if (!(a.a_ == b.a_) || !(a.b_ == b.b_)) return false;
  if (a.b_.is_zero() || !a.has_modulus() || !b.has_modulus()) return true;
  return a.d_ == b.d_;
}

QuadExt QuadExt::pow(long k) const {
  if (k < 0) return QuadExt(1) / pow(-k);
  QuadExt result(RatFunc(1), RatFunc(), d_, 0), base = *this;
  while (k) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

QuadExt QuadExt::derivative() const {
  if (b_.is_zero()) return QuadExt(a_.derivative(), RatFunc(), d_, 0);
  RatFunc log_d = RatFunc(d_.derivative(), d_ * Rational(2));
  return QuadExt(a_.derivative(), b_.derivative() + b_ * log_d, d_, 0);
}

std::string QuadExt::to_string(std::string_view var) const {
  if (b_.is_zero()) return a_.to_string(var);
  return "(" + a_.to_string(var) + ") + (" + b_.to_string(var) + ")*U";
}

namespace {

void trim(UPolynomial& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int deg(const UPolynomial& p) { return static_cast<int>(p.size()) - 1; }

// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b over Q[x].
UPolynomial pseudo_rem(UPolynomial a, const UPolynomial& b) {
  const int db = deg(b);
  const Polynomial& lb = b.back();
  int e = deg(a) - db + 1;
  while (deg(a) >= db) {
    Polynomial top = a.back();
    size_t off = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (size_t j = 0; j < b.size(); ++j) a[off + j] -= top * b[j];
    a.pop_back();
    trim(a);
    --e;
  }
  if (e > 0) {
    Polynomial f = lb.pow(static_cast<unsigned>(e));
    for (auto& c : a) c *= f;
  }
  return a;
}

}  // namespace

Polynomial poly_resultant(const UPolynomial& p_in, const UPolynomial& q_in) {
  UPolynomial a = p_in, b = q_in;
  trim(a);
  trim(b);
  if (a.empty() && b.empty()) throw DomainError("undefined resultant");
  if (a.empty() || b.empty()) return {};
  if (deg(a) == 0 && deg(b) == 0) return Polynomial(1);
  if (deg(a) == 0) return a[0].pow(static_cast<unsigned>(deg(b)));
  if (deg(b) == 0) return b[0].pow(static_cast<unsigned>(deg(a)));

  Polynomial s = 1;
  if (deg(a) < deg(b)) {
    std::swap(a, b);
    if ((deg(a) % 2 == 1) && (deg(b) % 2 == 1)) s = -1;
  }
  // Subresultant algorithm over the domain Q[x].
  Polynomial g = 1, h = 1, t = 1;
  while (true) {
    int delta = deg(a) - deg(b);
    if ((deg(a) % 2 == 1) && (deg(b) % 2 == 1)) s = -s;
    UPolynomial r = pseudo_rem(a, b);
    a = std::move(b);
    if (r.empty()) return {};
    Polynomial divisor = g * h.pow(static_cast<unsigned>(delta));
    for (auto& c : r) c = exact_div(c, divisor);
    b = std::move(r);
    g = a.back();
    if (delta == 0) {
      // h unchanged
    } else {
      h = exact_div(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
    }
    if (deg(b) == 0) {
      int da = deg(a);
      t = exact_div(b[0].pow(static_cast<unsigned>(da)), h.pow(static_cast<unsigned>(da - 1)));
      return s * t;
    }
  }
}

}  // namespace stairgf
