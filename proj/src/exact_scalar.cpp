#include "orderinv/exact_scalar.hpp"

#include <charconv>
#include <cmath>
#include <regex>

#include "orderinv/error.hpp"

namespace orderinv {

namespace {

double rational_to_double(const Rational& q) {
  return q.convert_to<double>();
}

// cpp_int reads a leading 0 as an octal prefix.
BigInt decimal_integer(const std::string& digits) {
  const auto first = digits.find_first_not_of('0');
  return first == std::string::npos ? BigInt(0) : BigInt(digits.substr(first));
}

BigInt pow10(long e) {
  BigInt r = 1;
  for (long i = 0; i < e; ++i) r *= 10;
  return r;
}

}  // namespace

Rational rational_power(const BigInt& base, long exponent) {
  if (exponent == 0) return Rational(1);
  if (base == 0) {
    if (exponent < 0) {
      throw Error(ErrorKind::invalid_argument, "zero raised to a negative power");
    }
    return Rational(0);
  }
  BigInt p = boost::multiprecision::pow(base, static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
  if (exponent > 0) return Rational(p);
  return Rational(BigInt(1), p);
}

ExactScalar ExactScalar::ratio(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorKind::invalid_argument, "zero denominator");
  if (den < 0) return ExactScalar(Rational(-num, -den));
  return ExactScalar(Rational(num, den));
}

ExactScalar ExactScalar::parse(std::string_view text) {
  static const std::regex fraction(R"(^\s*([+-]?\d+)\s*/\s*(\d+)\s*$)");
  static const std::regex decimal(
      R"(^\s*([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?\s*$)");
  const std::string s(text);
  std::smatch m;
  if (std::regex_match(s, m, fraction)) {
    const BigInt den = decimal_integer(m[2].str());
    if (den == 0) throw Error(ErrorKind::parse_error, "zero denominator in '" + s + "'");
    const std::string num = m[1].str();
    const bool negative = !num.empty() && num[0] == '-';
    const BigInt magnitude = decimal_integer(num[0] == '-' || num[0] == '+' ? num.substr(1) : num);
    return ratio(negative ? BigInt(-magnitude) : magnitude, den);
  }
  if (std::regex_match(s, m, decimal) && (m[2].length() + m[3].length()) > 0) {
    const std::string int_part = m[2].str();
    const std::string frac_part = m[3].str();
    long exp10 = m[4].matched ? std::stol(m[4].str()) : 0;
    if (exp10 > 4000 || exp10 < -4000) {
      throw Error(ErrorKind::parse_error, "exponent out of range in '" + s + "'");
    }
    BigInt digits = decimal_integer(int_part + frac_part);
    if (m[1].str() == "-") digits = -digits;
    exp10 -= static_cast<long>(frac_part.size());
    if (exp10 >= 0) return ExactScalar(Rational(digits * pow10(exp10)));
    return ratio(digits, pow10(-exp10));
  }
  throw Error(ErrorKind::parse_error, "not a number: '" + s + "'");
}

bool ExactScalar::is_integer() const {
  const auto* q = std::get_if<Rational>(&value_);
  return q != nullptr && denominator(*q) == 1;
}

std::optional<long> ExactScalar::as_long() const {
  if (!is_integer()) return std::nullopt;
  const BigInt num = numerator(std::get<Rational>(value_));
  if (num > std::numeric_limits<long>::max() || num < std::numeric_limits<long>::min()) {
    return std::nullopt;
  }
  return num.convert_to<long>();
}

const Rational& ExactScalar::rational() const {
  const auto* q = std::get_if<Rational>(&value_);
  if (q == nullptr) {
    throw Error(ErrorKind::inexact_parameters, "value is only known approximately");
  }
  return *q;
}

double ExactScalar::to_double() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return rational_to_double(*q);
  return std::get<double>(value_);
}

int ExactScalar::sign(double margin) const {
  if (const auto* q = std::get_if<Rational>(&value_)) {
    return q->sign();
  }
  const double v = std::get<double>(value_);
  if (v > margin) return 1;
  if (v < -margin) return -1;
  return 0;
}

std::string ExactScalar::to_string() const {
  if (const auto* q = std::get_if<Rational>(&value_)) {
    return numerator(*q).str() + "/" + denominator(*q).str();
  }
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), std::get<double>(value_));
  return std::string(buf, res.ptr);
}

ExactScalar ExactScalar::operator-() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return ExactScalar(Rational(-*q));
  return approx(-std::get<double>(value_));
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  if (is_exact() && o.is_exact()) {
    std::get<Rational>(value_) += std::get<Rational>(o.value_);
  } else {
    value_ = to_double() + o.to_double();
  }
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  if (is_exact() && o.is_exact()) {
    std::get<Rational>(value_) -= std::get<Rational>(o.value_);
  } else {
    value_ = to_double() - o.to_double();
  }
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  if (is_exact() && o.is_exact()) {
    std::get<Rational>(value_) *= std::get<Rational>(o.value_);
  } else {
    value_ = to_double() * o.to_double();
  }
  return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
  if (is_exact() && o.is_exact()) {
    if (std::get<Rational>(o.value_) == 0) {
      throw Error(ErrorKind::invalid_argument, "division by zero");
    }
    std::get<Rational>(value_) /= std::get<Rational>(o.value_);
  } else {
    value_ = to_double() / o.to_double();
  }
  return *this;
}

int compare(const ExactScalar& a, const ExactScalar& b) {
  if (a.is_exact() && b.is_exact()) {
    const auto& x = a.rational();
    const auto& y = b.rational();
    return x < y ? -1 : (y < x ? 1 : 0);
  }
  const double x = a.to_double();
  const double y = b.to_double();
  return x < y ? -1 : (y < x ? 1 : 0);
}

}  // namespace orderinv
