#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stairgf/quadext.hpp"
#include "stairgf/series.hpp"

namespace stairgf {

/// sum_i coeffs[i] * D^i with D = d/dx, over a differential coefficient ring R
/// (RatFunc, or QuadExt when the algebraic U enters).
/// Coefficients are kept exactly as constructed; normalized() gives the canonical representative.
template <class R>
class BasicDiffOp {
 public:
  BasicDiffOp() = default;
  explicit BasicDiffOp(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

  static BasicDiffOp identity() { return BasicDiffOp({R(1)}); }
  static BasicDiffOp dx() { return BasicDiffOp({R(0), R(1)}); }
  static BasicDiffOp multiplier(R r) { return BasicDiffOp({std::move(r)}); }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<R>& coeffs() const { return c_; }
  R coeff(int i) const { return i >= 0 && i <= order() ? c_[static_cast<size_t>(i)] : R(0); }

  BasicDiffOp operator-() const {
    BasicDiffOp r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend BasicDiffOp operator+(const BasicDiffOp& a, const BasicDiffOp& b) {
    std::vector<R> r(std::max(a.c_.size(), b.c_.size()), R(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
    return BasicDiffOp(std::move(r));
  }
  friend BasicDiffOp operator-(const BasicDiffOp& a, const BasicDiffOp& b) { return a + (-b); }

  /// Composition a∘b via D^i r = sum_k binom(i, k) r^(k) D^(i-k).
  friend BasicDiffOp operator*(const BasicDiffOp& a, const BasicDiffOp& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const int na = a.order(), nb = b.order();
    std::vector<std::vector<R>> deriv(static_cast<size_t>(nb + 1));
    for (int j = 0; j <= nb; ++j) {
      deriv[static_cast<size_t>(j)].push_back(b.c_[static_cast<size_t>(j)]);
      for (int k = 1; k <= na; ++k) deriv[static_cast<size_t>(j)].push_back(deriv[static_cast<size_t>(j)].back().derivative());
    }
    std::vector<R> r(static_cast<size_t>(na + nb + 1), R(0));
    for (int i = 0; i <= na; ++i) {
      const R& ai = a.c_[static_cast<size_t>(i)];
      if (ai.is_zero()) continue;
      Integer binom = 1;
      for (int k = 0; k <= i; ++k) {
        for (int j = 0; j <= nb; ++j) {
          const R& bjk = deriv[static_cast<size_t>(j)][static_cast<size_t>(k)];
          if (bjk.is_zero()) continue;
          r[static_cast<size_t>(i - k + j)] = r[static_cast<size_t>(i - k + j)] + ai * bjk * R(RatFunc(Rational(binom)));
        }
        binom = binom * (i - k) / (k + 1);
      }
    }
    return BasicDiffOp(std::move(r));
  }

  friend bool operator==(const BasicDiffOp& a, const BasicDiffOp& b) { return a.c_ == b.c_; }

  std::string to_string() const {
    std::string out;
    for (int i = order(); i >= 0; --i) {
      if (c_[static_cast<size_t>(i)].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "(" + c_[static_cast<size_t>(i)].to_string() + ")";
      if (i == 1) out += "*Dx";
      if (i > 1) out += "*Dx^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<R> c_;
};

using DiffOp = BasicDiffOp<RatFunc>;
using QDiffOp = BasicDiffOp<QuadExt>;

/// Canonical representative: polynomial coefficients with integer content 1 and positive
/// leading coefficient of the top coefficient.
DiffOp normalized(const DiffOp& L);
/// Monic representative (top coefficient 1).
QDiffOp normalized(const QDiffOp& L);

/// Embeds an operator over Q(x) into the ring with U^2 = d.
QDiffOp to_quad(const DiffOp& L, const Polynomial& d);

/// Whether lhsA*lhsB and rhsA*rhsB are the same operator (exact coefficient equality).
bool check_intertwiner(const QDiffOp& lhsA, const QDiffOp& lhsB, const QDiffOp& rhsA, const QDiffOp& rhsB);
bool check_intertwiner(const DiffOp& lhsA, const DiffOp& lhsB, const DiffOp& rhsA, const DiffOp& rhsB);

/// L(f); the truncation drops by the order and by the pole orders of the coefficients.
LaurentSeries apply(const DiffOp& L, const LaurentSeries& f);
LogSeries apply(const DiffOp& L, const LogSeries& f);

/// Substitution x -> point + t (finite point) or x -> 1/t (point = nullopt, infinity).
DiffOp localize(const DiffOp& L, const std::optional<Rational>& point);

struct IndicialData {
  std::optional<Rational> point;  // nullopt: infinity
  Polynomial indicial;            // in the exponent variable
  std::vector<Rational> exponents;     // rational roots with multiplicity, ascending
  std::vector<Polynomial> irrational;  // remaining irreducible factors (monic)
};

/// Throws DomainError when the point is an irregular singular point.
IndicialData indicial_exponents(const DiffOp& L, const std::optional<Rational>& point = Rational(0));

/// Basis of formal solutions at x = 0, each known up to O(x^order) in every log part.
/// Log towers are reduced so every log degree is minimal; the top log part of each element
/// has leading coefficient 1; ordering by (exponent, log degree).
std::vector<LogSeries> frobenius_basis(const DiffOp& L, int order);

}  // namespace stairgf
