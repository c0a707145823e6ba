#include "pegboard/rational.hpp"

#include "pegboard/error.hpp"

#include <ostream>

namespace pegboard {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::DegenerateInput, "zero denominator");
  value_ = den < 0 ? Rep(-BigInt(num), -BigInt(den)) : Rep(num, den);
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorCode::DegenerateInput, "zero denominator");
  value_ = den < 0 ? Rep(BigInt(-num), BigInt(-den)) : Rep(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.value_ == 0) throw Error(ErrorCode::DegenerateInput, "division by zero");
  value_ /= o.value_;
  return *this;
}

BigInt Rational::floor() const {
  BigInt n = numerator();
  BigInt d = denominator();
  BigInt q = n / d;  // truncates toward zero
  if (n < 0 && q * d != n) q -= 1;
  return q;
}

Rational Rational::frac() const { return *this - Rational(floor(), BigInt(1)); }

std::string Rational::str() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text), BigInt(1));
    return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(ErrorCode::Parse, "bad rational '" + text + "'");
  }
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace pegboard
