#include "stairgf/paperdata.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>

namespace stairgf {

namespace detail {
extern const std::string_view kFixtureText;
}

namespace {

std::string trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<Rational> parse_list(std::string_view s) {
  std::vector<Rational> out;
  for (const auto& item : split(s, ',')) out.push_back(parse_rational(trim(item)));
  return out;
}

std::string join(std::span<const Rational> c) {
  std::string out;
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) out += ",";
    out += to_string(c[i]);
  }
  return out;
}

std::string join_poly(const Polynomial& p) {
  if (p.is_zero()) return "0";
  return join(p.coeffs());
}

RawQuotient parse_quotient(std::string_view s) {
  auto parts = split(s, ':');
  if (parts.size() != 2) throw Error("expected NUM:DEN, got '" + std::string(s) + "'");
  RawQuotient q{Polynomial(parse_list(parts[0])), Polynomial(parse_list(parts[1]))};
  if (q.den.is_zero()) throw Error("zero denominator in fixture");
  return q;
}

std::string serialize_quotient(const RawQuotient& q) { return join_poly(q.num) + ":" + join_poly(q.den); }

FixtureKind parse_kind(std::string_view s) {
  if (s == "polynomial") return FixtureKind::Polynomial;
  if (s == "series") return FixtureKind::Series;
  if (s == "ratfunc") return FixtureKind::RatFunc;
  if (s == "operator") return FixtureKind::Operator;
  if (s == "curve") return FixtureKind::Curve;
  if (s == "ratfunc-pair") return FixtureKind::RatFuncPair;
  throw Error("unknown fixture kind '" + std::string(s) + "'");
}

// Ordered key=value list; order matters for round-tripping.
std::vector<std::pair<std::string, std::string>> parse_fields(std::string_view s) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& item : split(s, ';')) {
    size_t eq = item.find('=');
    if (eq == std::string::npos) throw Error("malformed field '" + item + "'");
    out.emplace_back(trim(item.substr(0, eq)), trim(item.substr(eq + 1)));
  }
  return out;
}

const std::string& field(const std::vector<std::pair<std::string, std::string>>& f, std::string_view key) {
  for (const auto& [k, v] : f)
    if (k == key) return v;
  throw Error("missing field '" + std::string(key) + "'");
}

size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (size_t j = 1; j <= b.size(); ++j) {
      size_t sub = prev[j - 1] + (std::tolower(a[i - 1]) == std::tolower(b[j - 1]) ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

}  // namespace

std::string_view to_string(FixtureKind kind) {
  switch (kind) {
    case FixtureKind::Polynomial: return "polynomial";
    case FixtureKind::Series: return "series";
    case FixtureKind::RatFunc: return "ratfunc";
    case FixtureKind::Operator: return "operator";
    case FixtureKind::Curve: return "curve";
    case FixtureKind::RatFuncPair: return "ratfunc-pair";
  }
  return "?";
}

const Polynomial& Fixture::polynomial() const {
  if (kind != FixtureKind::Polynomial) throw Error("fixture " + name + " is not a polynomial");
  return std::get<PolynomialData>(payload).poly;
}

const LaurentSeries& Fixture::series() const {
  if (kind != FixtureKind::Series) throw Error("fixture " + name + " is not a series");
  return std::get<LaurentSeries>(payload);
}

RatFunc Fixture::ratfunc() const {
  if (kind == FixtureKind::Polynomial) return RatFunc(polynomial());
  if (kind != FixtureKind::RatFunc) throw Error("fixture " + name + " is not a rational function");
  return std::get<RawQuotient>(payload).value();
}

DiffOp Fixture::op() const {
  if (kind != FixtureKind::Operator) throw Error("fixture " + name + " is not an operator");
  std::vector<RatFunc> c;
  for (const auto& q : std::get<std::vector<RawQuotient>>(payload)) c.push_back(q.value());
  return DiffOp(std::move(c));
}

const CurveData& Fixture::curve() const {
  if (kind != FixtureKind::Curve) throw Error("fixture " + name + " is not a curve");
  return std::get<CurveData>(payload);
}

std::pair<RatFunc, RatFunc> Fixture::ratfunc_pair() const {
  if (kind != FixtureKind::RatFuncPair) throw Error("fixture " + name + " is not a pair of rational functions");
  const auto& p = std::get<std::pair<RawQuotient, RawQuotient>>(payload);
  return {p.first.value(), p.second.value()};
}

Fixture parse_fixture(std::string_view record) {
  auto cols = split(record, '|');
  if (cols.size() != 4) throw Error("fixture record needs 4 columns: '" + std::string(record.substr(0, 60)) + "'");
  Fixture f;
  f.name = trim(cols[0]);
  f.kind = parse_kind(trim(cols[1]));
  f.anchor = trim(cols[2]);
  auto fields = parse_fields(trim(cols[3]));
  try {
    switch (f.kind) {
      case FixtureKind::Polynomial: {
        f.var = field(fields, "var");
        PolynomialData d{Polynomial(parse_list(field(fields, "coeffs"))), parse_rational(field(fields, "at1")),
                         parse_rational(field(fields, "at2"))};
        if (d.poly(1) != d.at1 || d.poly(2) != d.at2)
          throw Error("double-entry mismatch: coefficients evaluate to " + to_string(d.poly(1)) + ", " +
                      to_string(d.poly(2)) + " at x = 1, 2");
        f.payload = std::move(d);
        break;
      }
      case FixtureKind::Series: {
        f.var = field(fields, "var");
        int val = std::stoi(field(fields, "val"));
        int trunc = std::stoi(field(fields, "trunc"));
        auto c = parse_list(field(fields, "coeffs"));
        if (static_cast<int>(c.size()) != trunc - val) throw Error("series coefficient count does not match val/trunc");
        if (c.front() == 0) throw Error("series must start at its valuation");
        f.payload = LaurentSeries(val, std::move(c), trunc);
        break;
      }
      case FixtureKind::RatFunc:
        f.var = field(fields, "var");
        f.payload = RawQuotient{Polynomial(parse_list(field(fields, "num"))), Polynomial(parse_list(field(fields, "den")))};
        break;
      case FixtureKind::Operator: {
        f.var = field(fields, "var");
        std::vector<RawQuotient> c;
        for (size_t i = 1; i < fields.size(); ++i) {
          if (fields[i].first != "d" + std::to_string(i - 1)) throw Error("operator coefficients must be d0, d1, ...");
          c.push_back(parse_quotient(fields[i].second));
        }
        f.payload = std::move(c);
        break;
      }
      case FixtureKind::Curve: {
        CurveData d;
        auto vars = split(field(fields, "vars"), ',');
        if (vars.size() != 2) throw Error("curve needs two variables");
        d.vars = {trim(vars[0]), trim(vars[1])};
        for (const auto& t : split(field(fields, "terms"), ',')) {
          std::istringstream is(t);
          int i = 0, j = 0;
          std::string c;
          if (!(is >> i >> j >> c)) throw Error("malformed curve term '" + t + "'");
          d.terms.emplace_back(i, j, Integer(c));
        }
        f.payload = std::move(d);
        break;
      }
      case FixtureKind::RatFuncPair:
        f.var = field(fields, "var");
        f.payload = std::pair(parse_quotient(field(fields, "first")), parse_quotient(field(fields, "second")));
        break;
    }
  } catch (const std::exception& e) {
    throw Error("fixture " + f.name + ": " + e.what());
  }
  return f;
}

std::string serialize(const Fixture& f) {
  std::string data;
  switch (f.kind) {
    case FixtureKind::Polynomial: {
      const auto& d = std::get<PolynomialData>(f.payload);
      data = "var=" + f.var + ";coeffs=" + join_poly(d.poly) + ";at1=" + to_string(d.at1) + ";at2=" + to_string(d.at2);
      break;
    }
    case FixtureKind::Series: {
      const auto& s = std::get<LaurentSeries>(f.payload);
      data = "var=" + f.var + ";val=" + std::to_string(s.valuation()) + ";trunc=" + std::to_string(s.trunc()) +
             ";coeffs=" + join(s.coeffs());
      break;
    }
    case FixtureKind::RatFunc: {
      const auto& q = std::get<RawQuotient>(f.payload);
      data = "var=" + f.var + ";num=" + join_poly(q.num) + ";den=" + join_poly(q.den);
      break;
    }
    case FixtureKind::Operator: {
      data = "var=" + f.var;
      const auto& c = std::get<std::vector<RawQuotient>>(f.payload);
      for (size_t i = 0; i < c.size(); ++i) data += ";d" + std::to_string(i) + "=" + serialize_quotient(c[i]);
      break;
    }
    case FixtureKind::Curve: {
      const auto& d = std::get<CurveData>(f.payload);
      data = "vars=" + d.vars[0] + "," + d.vars[1] + ";terms=";
      for (size_t k = 0; k < d.terms.size(); ++k) {
        const auto& [i, j, c] = d.terms[k];
        if (k) data += ",";
        data += std::to_string(i) + " " + std::to_string(j) + " " + c.get_str();
      }
      break;
    }
    case FixtureKind::RatFuncPair: {
      const auto& p = std::get<std::pair<RawQuotient, RawQuotient>>(f.payload);
      data = "var=" + f.var + ";first=" + serialize_quotient(p.first) + ";second=" + serialize_quotient(p.second);
      break;
    }
  }
  return f.name + " | " + std::string(to_string(f.kind)) + " | " + f.anchor + " | " + data;
}

std::uint64_t fixture_checksum(std::string_view body) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : body) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::vector<Fixture> parse_fixture_file(std::string_view text) {
  std::vector<Fixture> out;
  std::optional<std::uint64_t> expected;
  std::string body;
  for (const auto& line : split(text, '\n')) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::string tag = "# checksum fnv1a64 ";
      if (line.rfind(tag, 0) == 0) expected = std::stoull(line.substr(tag.size()), nullptr, 16);
      continue;
    }
    body += line + "\n";
    out.push_back(parse_fixture(line));
  }
  if (!expected) throw Error("fixture file has no checksum line");
  if (fixture_checksum(body) != *expected) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fixture_checksum(body)));
    throw Error(std::string("fixture checksum mismatch (content hashes to ") + buf + ")");
  }
  return out;
}

std::string_view embedded_fixture_text() { return detail::kFixtureText; }

const std::vector<Fixture>& all_fixtures() {
  static const std::vector<Fixture> fixtures = parse_fixture_file(detail::kFixtureText);
  return fixtures;
}

namespace {

std::shared_mutex overrides_mutex;
std::map<std::string, Fixture, std::less<>> overrides;

}  // namespace

void override_fixture(Fixture f) {
  std::unique_lock lock(overrides_mutex);
  std::string key = f.name;
  overrides.insert_or_assign(std::move(key), std::move(f));
}

void clear_fixture_overrides() {
  std::unique_lock lock(overrides_mutex);
  overrides.clear();
}

const Fixture& get_fixture(std::string_view name) {
  {
    std::shared_lock lock(overrides_mutex);
    if (auto it = overrides.find(name); it != overrides.end()) return it->second;
  }
  const auto& all = all_fixtures();
  for (const auto& f : all)
    if (f.name == name) return f;
  std::vector<std::pair<size_t, std::string>> near;
  for (const auto& f : all) near.emplace_back(edit_distance(name, f.name), f.name);
  std::sort(near.begin(), near.end());
  std::string msg = "unknown fixture '" + std::string(name) + "'; near matches:";
  for (size_t i = 0; i < near.size() && i < 3; ++i) msg += " " + near[i].second;
  throw UnknownNameError(msg);
}

}  // namespace stairgf
