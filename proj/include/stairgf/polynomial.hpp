#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stairgf/rational.hpp"

namespace stairgf {

/// Dense univariate polynomial over Q; index i holds the coefficient of x^i.
/// Trailing zeros are always trimmed, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  static constexpr int kZeroDegree = -1;

  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs);
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT
  Polynomial(int constant) : Polynomial(Rational(constant)) {}   // NOLINT

  static Polynomial monomial(const Rational& c, int k);
  static Polynomial x() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const Rational& lc() const;
  Rational coeff(int i) const;
  std::span<const Rational> coeffs() const { return coeffs_; }

  /// Lowest index with a nonzero coefficient (0 for the zero polynomial).
  int valuation() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& s);
  Polynomial& operator/=(const Rational& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(Polynomial a, long s) { return a *= Rational(s); }
  friend Polynomial operator*(long s, Polynomial a) { return a *= Rational(s); }
  friend Polynomial operator/(Polynomial a, const Rational& s) { return a /= s; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  Rational operator()(const Rational& at) const;
  Polynomial compose(const Polynomial& inner) const;
  Polynomial derivative() const;
  Polynomial pow(unsigned k) const;
  /// Multiplies by x^k (k >= 0) or divides exactly by x^-k.
  Polynomial shifted(int k) const;
  Polynomial monic() const;

  /// Least common denominator times this, divided by the integer content;
  /// leading coefficient made positive.
  std::vector<Integer> primitive_integer() const;
  static Polynomial from_integers(std::span<const Integer> coeffs);

  std::string to_string(std::string_view var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of Euclidean division; throws DomainError on b == 0.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// a / b, throwing DomainError when b does not divide a.
Polynomial exact_div(const Polynomial& a, const Polynomial& b);

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

Polynomial operator%(const Polynomial& a, const Polynomial& b);

/// First `len` coefficients of the product of two coefficient lists (len = 0: all).
std::vector<Rational> convolve(std::span<const Rational> a, std::span<const Rational> b, size_t len = 0);

}  // namespace stairgf
