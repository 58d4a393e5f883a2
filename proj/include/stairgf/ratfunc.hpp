#pragma once

#include <string>

#include "stairgf/polynomial.hpp"

namespace stairgf {

/// Quotient num/den of polynomials, kept with gcd(num, den) = 1 and den monic.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(Polynomial num);  // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& c) : RatFunc(Polynomial(c)) {}  // NOLINT
  RatFunc(long c) : RatFunc(Polynomial(c)) {}              // NOLINT
  RatFunc(int c) : RatFunc(Polynomial(c)) {}               // NOLINT
  RatFunc(Polynomial num, Polynomial den);

  static RatFunc x() { return RatFunc(Polynomial::x()); }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& rhs);
  RatFunc& operator-=(const RatFunc& rhs);
  RatFunc& operator*=(const RatFunc& rhs);
  RatFunc& operator/=(const RatFunc& rhs);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  RatFunc derivative() const;
  RatFunc pow(long k) const;
  /// Evaluation; throws DomainError at a pole.
  Rational operator()(const Rational& at) const;
  /// this(inner(x)).
  RatFunc compose(const RatFunc& inner) const;

  std::string to_string(std::string_view var = "x") const;

 private:
  struct Raw {};
  RatFunc(Polynomial num, Polynomial den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize();

  Polynomial num_;
  Polynomial den_;
};

}  // namespace stairgf
