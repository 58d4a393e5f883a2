#include "stairgf/rational.hpp"

#include <string>

namespace stairgf {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    return make_rational(num, den);
  } catch (const std::invalid_argument&) {
    throw DomainError("malformed rational '" + s + "'");
  }
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw DomainError("zero raised to a negative power");
    return pow(Rational(1) / base, -exponent);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

namespace {

bool exact_int_root(const Integer& value, unsigned long k, Integer& root) {
  if (value < 0) {
    if (k % 2 == 0) return false;
    Integer pos = -value;
    if (!exact_int_root(pos, k, root)) return false;
    root = -root;
    return true;
  }
  return mpz_root(root.get_mpz_t(), value.get_mpz_t(), k) != 0;
}

}  // namespace

bool exact_root(const Rational& value, unsigned long k, Rational& root) {
  if (k == 0) throw DomainError("zeroth root");
  Integer n, d;
  if (!exact_int_root(value.get_num(), k, n)) return false;
  if (!exact_int_root(value.get_den(), k, d)) return false;
  root = Rational(n, d);
  root.canonicalize();
  return true;
}

}  // namespace stairgf
