#pragma once

#include <array>
#include <string>
#include <string_view>
#include <tuple>
#include <variant>
#include <vector>

#include "stairgf/diffop.hpp"

namespace stairgf {

enum class FixtureKind { Polynomial, Series, RatFunc, Operator, Curve, RatFuncPair };

std::string_view to_string(FixtureKind kind);

/// Quotient kept exactly as stored (not canonicalized), so records round-trip.
struct RawQuotient {
  Polynomial num;
  Polynomial den;
  RatFunc value() const { return RatFunc(num, den); }
};

struct PolynomialData {
  Polynomial poly;
  Rational at1;  // independent evaluation at x = 1
  Rational at2;  // and at x = 2
};

/// Sparse bivariate polynomial sum c * v1^i * v2^j.
struct CurveData {
  std::array<std::string, 2> vars;
  std::vector<std::tuple<int, int, Integer>> terms;
};

struct Fixture {
  std::string name;
  FixtureKind kind;
  std::string anchor;
  std::string var;  // unused for curves
  std::variant<PolynomialData, LaurentSeries, RawQuotient, std::vector<RawQuotient>, CurveData,
               std::pair<RawQuotient, RawQuotient>>
      payload;

  const Polynomial& polynomial() const;
  const LaurentSeries& series() const;
  RatFunc ratfunc() const;
  DiffOp op() const;
  const CurveData& curve() const;
  std::pair<RatFunc, RatFunc> ratfunc_pair() const;
};

/// Parses one `name | kind | anchor | data` record; throws Error on malformed input
/// or when a polynomial disagrees with its recorded evaluations.
Fixture parse_fixture(std::string_view record);
std::string serialize(const Fixture& f);

/// Parses a whole fixture file, verifying its checksum line.
std::vector<Fixture> parse_fixture_file(std::string_view text);

/// The embedded fixture set (parsed once).
const std::vector<Fixture>& all_fixtures();
/// Throws UnknownNameError listing near matches.
const Fixture& get_fixture(std::string_view name);
std::string_view embedded_fixture_text();

/// Shadows the embedded record of the same name until clear_fixture_overrides(); for fault
/// injection in tests. Catalog series already built from the old record stay memoized.
void override_fixture(Fixture f);
void clear_fixture_overrides();

/// 64-bit FNV-1a over the record lines.
std::uint64_t fixture_checksum(std::string_view body);

}  // namespace stairgf
