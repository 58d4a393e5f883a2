#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stairgf/ratfunc.hpp"

namespace stairgf {

inline constexpr int kDefaultOrder = 60;

/// Truncated Laurent series sum_{n >= valuation} c_n x^n + O(x^trunc).
/// Coefficients below trunc are exact; leading zeros are stripped, so a series that is
/// zero up to its truncation has valuation == trunc and no coefficients.
class LaurentSeries {
 public:
  LaurentSeries() = default;
  LaurentSeries(int valuation, std::vector<Rational> coeffs, int trunc);

  static LaurentSeries zero(int trunc) { return LaurentSeries(trunc, {}, trunc); }
  static LaurentSeries constant(const Rational& c, int trunc);
  static LaurentSeries monomial(const Rational& c, int k, int trunc);
  static LaurentSeries from_polynomial(const Polynomial& p, int trunc);
  /// Expansion at x = 0; a pole at 0 gives negative exponents.
  static LaurentSeries from_ratfunc(const RatFunc& f, int trunc);

  int valuation() const { return val_; }
  int trunc() const { return trunc_; }
  /// Known coefficients from valuation up to trunc - 1.
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// Coefficient of x^n; throws PrecisionError for n >= trunc.
  Rational coeff(int n) const;
  const Rational& leading() const;

  LaurentSeries operator-() const;
  LaurentSeries& operator+=(const LaurentSeries& rhs);
  LaurentSeries& operator-=(const LaurentSeries& rhs);
  LaurentSeries& operator*=(const LaurentSeries& rhs);
  LaurentSeries& operator/=(const LaurentSeries& rhs);
  LaurentSeries& operator*=(const Rational& s);

  friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
  friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator/(LaurentSeries a, const LaurentSeries& b) { return a /= b; }
  friend LaurentSeries operator*(LaurentSeries a, const Rational& s) { return a *= s; }
  friend LaurentSeries operator*(const Rational& s, LaurentSeries a) { return a *= s; }

  /// Series equality on the common known window.
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);

  LaurentSeries inverse() const;
  LaurentSeries derivative() const;
  /// Antiderivative with constant 0; PrecisionError-free DomainError on a nonzero x^-1 term.
  LaurentSeries integrate() const;
  /// this(inner(x)); inner must vanish at 0 and this must have no pole.
  LaurentSeries compose(const LaurentSeries& inner) const;
  /// Principal branch of this^e.
  LaurentSeries pow(const Rational& e) const;
  /// Multiplication by x^k.
  LaurentSeries shifted(int k) const;
  /// Forgets all coefficients from x^n on.
  LaurentSeries truncated(int n) const;
  /// x -> c*x^k with k >= 1.
  LaurentSeries substitute_monomial(const Rational& c, int k) const;

  std::string to_string(std::string_view var = "x") const;
  std::string to_machine() const;

 private:
  void normalize();

  int val_ = 0;
  std::vector<Rational> c_;
  int trunc_ = 0;
};

/// Thrown on a nonzero x^-1 coefficient during integration.
class LogObstructionError : public DomainError {
 public:
  LogObstructionError(const Rational& residue);
  const Rational& residue() const { return residue_; }

 private:
  Rational residue_;
};

/// First exponent below min(a.trunc, b.trunc) where a and b differ.
std::optional<int> first_mismatch(const LaurentSeries& a, const LaurentSeries& b);

/// sum_k parts[k] * log(x)^k.
class LogSeries {
 public:
  LogSeries() = default;
  explicit LogSeries(std::vector<LaurentSeries> parts);
  LogSeries(LaurentSeries s) : parts_{std::move(s)} {}  // NOLINT(google-explicit-constructor)

  /// Highest k with a nonzero part; -1 when every part vanishes.
  int log_degree() const;
  const std::vector<LaurentSeries>& parts() const { return parts_; }
  const LaurentSeries& part(size_t k) const { return parts_.at(k); }
  int trunc() const;

  LogSeries& operator+=(const LogSeries& rhs);
  LogSeries& operator*=(const LaurentSeries& s);
  friend LogSeries operator+(LogSeries a, const LogSeries& b) { return a += b; }
  friend LogSeries operator*(LogSeries a, const LaurentSeries& s) { return a *= s; }
  friend LogSeries operator*(LogSeries a, const Rational& s);

  LogSeries derivative() const;
  bool is_zero() const { return log_degree() < 0; }
  std::string to_string(std::string_view var = "x") const;

 private:
  std::vector<LaurentSeries> parts_;
};

/// Bivariate series in x, y truncated in total degree.
class BivarSeries {
 public:
  explicit BivarSeries(int trunc_total) : trunc_(trunc_total) {}

  int trunc_total() const { return trunc_; }
  Rational coeff(int i, int j) const;
  void set(int i, int j, const Rational& c);
  const std::map<std::pair<int, int>, Rational>& terms() const { return terms_; }

  friend BivarSeries operator+(const BivarSeries& a, const BivarSeries& b);
  friend BivarSeries operator-(const BivarSeries& a, const BivarSeries& b);
  friend BivarSeries operator*(const BivarSeries& a, const BivarSeries& b);
  friend bool operator==(const BivarSeries& a, const BivarSeries& b) { return a.trunc_ == b.trunc_ && a.terms_ == b.terms_; }

  /// Restriction to y = x.
  LaurentSeries diagonal() const;

 private:
  int trunc_;
  std::map<std::pair<int, int>, Rational> terms_;
};

/// The solution of P = (P + x)(P + y) with P(0, 0) = 0, by fixed-point iteration from x*y.
BivarSeries bivar_newton_solve(int trunc_total = 16);

}  // namespace stairgf
