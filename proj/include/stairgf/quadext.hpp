#pragma once

#include <string>
#include <vector>

#include "stairgf/ratfunc.hpp"

namespace stairgf {

/// a(x) + b(x)*U with U^2 = d(x). Elements with different d never combine.
/// A default-constructed element has no modulus yet and adopts the one it is combined with.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(RatFunc a, RatFunc b, Polynomial d);
  /// Embeds a rational function (b = 0) with an unset modulus.
  QuadExt(RatFunc a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QuadExt(long c) : a_(c) {}                 // NOLINT
  QuadExt(int c) : a_(c) {}                  // NOLINT

  static QuadExt U(const Polynomial& d) { return QuadExt(RatFunc(), RatFunc(1), d); }

  const RatFunc& a() const { return a_; }
  const RatFunc& b() const { return b_; }
  const Polynomial& modulus() const { return d_; }
  bool has_modulus() const { return !d_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  /// a^2 - b^2 d.
  RatFunc norm() const;
  QuadExt conjugate() const { return QuadExt(a_, -b_, d_, 0); }

  QuadExt operator-() const { return QuadExt(-a_, -b_, d_, 0); }
  QuadExt& operator+=(const QuadExt& rhs);
  QuadExt& operator-=(const QuadExt& rhs);
  QuadExt& operator*=(const QuadExt& rhs);
  QuadExt& operator/=(const QuadExt& rhs);

  friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
  friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
  friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
  friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }
  /// Structural equality; an unset modulus matches any modulus when b = 0.
  friend bool operator==(const QuadExt& a, const QuadExt& b);

  QuadExt pow(long k) const;
  /// d/dx with U' = d'/(2U) = (d'/(2d)) U.
  QuadExt derivative() const;

  std::string to_string(std::string_view var = "x") const;

 private:
  QuadExt(RatFunc a, RatFunc b, Polynomial d, int) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {}
  void unify(const QuadExt& rhs);

  RatFunc a_;
  RatFunc b_;
  Polynomial d_;
};

/// Polynomial in U with Q[x] coefficients, index i holding the coefficient of U^i.
using UPolynomial = std::vector<Polynomial>;

/// Res_U(p, q) in Q[x] by the subresultant PRS over Q[x].
/// Throws DomainError("undefined resultant") when both inputs are zero.
Polynomial poly_resultant(const UPolynomial& p, const UPolynomial& q);

}  // namespace stairgf
