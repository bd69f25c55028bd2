#include "plumbcurve/rational.hpp"

#include <stdexcept>

namespace pc {

Rational frac(const BigInt& n, const BigInt& d) {
  if (d == 0) throw std::domain_error("zero denominator");
  if (d < 0) return Rational(BigInt(-n), BigInt(-d));
  return Rational(n, d);
}

Rational q(long long num, long long den) { return frac(BigInt(num), BigInt(den)); }

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& v) {
  const BigInt n = boost::multiprecision::numerator(v);
  const BigInt d = boost::multiprecision::denominator(v);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(BigInt(s));
  BigInt n(s.substr(0, slash));
  BigInt d(s.substr(slash + 1));
  return frac(n, d);
}

bool is_integer(const Rational& v) { return boost::multiprecision::denominator(v) == 1; }

}  // namespace pc
