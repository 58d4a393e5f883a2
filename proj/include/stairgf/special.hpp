#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "stairgf/series.hpp"

namespace stairgf {

struct HypParams {
  std::vector<Rational> upper;
  std::vector<Rational> lower;
};

/// pFq(upper; lower; z) up to O(z^order).
LaurentSeries hyp_series(const HypParams& p, int order);

/// Local Heun solution at z = 0 with value 1; epsilon = alpha + beta + 1 - gamma - delta.
struct HeunParams {
  Rational a, q, alpha, beta, gamma, delta;
  Rational epsilon() const { return alpha + beta + 1 - gamma - delta; }
};

LaurentSeries heun_series(const HeunParams& p, int order);

/// 2F1([a, b], [c], z) composed with a pullback series that vanishes at 0.
LaurentSeries hyp2f1(const Rational& a, const Rational& b, const Rational& c, const LaurentSeries& z);

/// sqrt((1 - 16 x^2)(1 + 4 x^2)) with U(0) = 1, up to O(x^order).
LaurentSeries u_series(int order);

/// The same square root with x^2 replaced by X.
LaurentSeries u_series_in_X(int order);

struct NamedSeries {
  std::string name;
  LaurentSeries series;
  std::string provenance;
};

struct CatalogEntry {
  std::string name;
  std::string description;
};

const std::vector<CatalogEntry>& named_catalog();

/// Builds a catalog series known at least up to O(x^order).
/// Results are memoized; safe to call from several threads.
NamedSeries build_named(std::string_view name, int order);

/// Sol(N1) (outer + int Sol(N2)/Sol(N1) (middle + scale int W/Sol(N2)^2 (inner + int Sol(N2) S/W)))
/// where S is Sol(N3) rescaled to leading coefficient `source`. A nonzero `inner` meets a
/// logarithmic obstruction, since W/Sol(N2)^2 has a residue.
struct NestedIntegralConstants {
  Rational outer = -11;
  Rational middle = -10;
  Rational scale = 90;
  Rational inner = 0;
  Rational source = 1;
};

LaurentSeries nested_integral_PI_trans(int order, const NestedIntegralConstants& k = {});

}  // namespace stairgf
