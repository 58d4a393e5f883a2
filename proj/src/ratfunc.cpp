#include "stairgf/ratfunc.hpp"

namespace stairgf {

RatFunc::RatFunc(Polynomial num) : num_(std::move(num)), den_(1) {}

RatFunc::RatFunc(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  canonicalize();
}

void RatFunc::canonicalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  if (den_.degree() > 0) {
    Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  Rational l = den_.lc();
  if (l != 1) {
    num_ /= l;
    den_ /= l;
  }
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Raw{}); }

RatFunc& RatFunc::operator+=(const RatFunc& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else if (rhs.is_polynomial()) {
    num_ += rhs.num_ * den_;
    return *this;  // still coprime, den unchanged
  } else if (is_polynomial()) {
    num_ = num_ * rhs.den_ + rhs.num_;
    den_ = rhs.den_;
    return *this;
  } else {
    Polynomial g = gcd(den_, rhs.den_);
    Polynomial b1 = exact_div(den_, g), d1 = exact_div(rhs.den_, g);
    num_ = num_ * d1 + rhs.num_ * b1;
    den_ = den_ * d1;
  }
  canonicalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& rhs) { return *this += -rhs; }

RatFunc& RatFunc::operator*=(const RatFunc& rhs) {
  if (is_zero() || rhs.is_zero()) return *this = RatFunc();
  if (is_polynomial() && rhs.is_polynomial()) {
    num_ *= rhs.num_;
    return *this;
  }
  // Cross-cancel so only coprime pieces are multiplied.
  Polynomial g1 = gcd(num_, rhs.den_), g2 = gcd(rhs.num_, den_);
  Polynomial n1 = exact_div(num_, g1), d2 = exact_div(rhs.den_, g1);
  Polynomial n2 = exact_div(rhs.num_, g2), d1 = exact_div(den_, g2);
  num_ = n1 * n2;
  den_ = d1 * d2;
  Rational l = den_.lc();
  if (l != 1) {
    num_ /= l;
    den_ /= l;
  }
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& rhs) {
  if (rhs.is_zero()) throw DomainError("rational function divided by zero");
  RatFunc inv(rhs.den_, rhs.num_, Raw{});
  Rational l = inv.den_.lc();
  inv.num_ /= l;
  inv.den_ /= l;
  return *this *= inv;
}

RatFunc RatFunc::derivative() const {
  if (is_polynomial()) return RatFunc(num_.derivative() / den_.lc(), Polynomial(1), Raw{});
  return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFunc RatFunc::pow(long k) const {
  if (k < 0) return RatFunc(1) / pow(-k);
  Polynomial n = num_.pow(static_cast<unsigned>(k)), d = den_.pow(static_cast<unsigned>(k));
  return RatFunc(std::move(n), std::move(d), Raw{});
}

Rational RatFunc::operator()(const Rational& at) const {
  Rational d = den_(at);
  if (d == 0) throw DomainError("rational function evaluated at a pole");
  return num_(at) / d;
}

RatFunc RatFunc::compose(const RatFunc& inner) const {
  auto horner = [&inner](const Polynomial& p) {
    RatFunc acc;
    auto c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * inner + RatFunc(*it);
    return acc;
  };
  return horner(num_) / horner(den_);
}

std::string RatFunc::to_string(std::string_view var) const {
  if (is_polynomial()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace stairgf
