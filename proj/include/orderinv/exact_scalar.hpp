#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

namespace orderinv {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Comparison margin used whenever a value is only known as a float.
inline constexpr double approx_margin = 1e-9;

/// A value that is either an exact reduced rational or a float64
/// approximation. Arithmetic is exact as long as both operands are exact;
/// mixing in an approximation yields an approximation.
class ExactScalar {
 public:
  ExactScalar() : value_(Rational(0)) {}
  ExactScalar(int v) : value_(Rational(v)) {}
  ExactScalar(long v) : value_(Rational(v)) {}
  ExactScalar(long long v) : value_(Rational(v)) {}
  ExactScalar(unsigned long v) : value_(Rational(v)) {}
  ExactScalar(unsigned long long v) : value_(Rational(v)) {}
  ExactScalar(Rational v) : value_(std::move(v)) {}
  ExactScalar(const BigInt& v) : value_(Rational(v)) {}

  static ExactScalar approx(double v) { return ExactScalar(Tag{}, v); }
  static ExactScalar ratio(const BigInt& num, const BigInt& den);

  /// Accepts "7", "-3/4" and decimal literals like "0.5" or "-1.25e-1".
  /// Decimal literals are converted to the exact rational they denote.
  static ExactScalar parse(std::string_view text);

  bool is_exact() const { return std::holds_alternative<Rational>(value_); }
  bool is_integer() const;
  std::optional<long> as_long() const;

  const Rational& rational() const;
  double to_double() const;

  /// -1, 0 or +1. Approximate values within `margin` of zero count as 0.
  int sign(double margin = approx_margin) const;
  bool is_zero() const { return sign() == 0; }

  /// "p/q" for exact values (q >= 1, always present), shortest round-trip
  /// decimal for approximations.
  std::string to_string() const;

  ExactScalar operator-() const;
  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o);

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) {
    return a += b;
  }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) {
    return a -= b;
  }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) {
    return a *= b;
  }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) {
    return a /= b;
  }

  /// Representation-aware equality: exact values compare exactly, two
  /// approximations compare bitwise, exact vs approximate is never equal.
  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.value_ == b.value_;
  }

  /// Numeric three-way comparison; falls back to doubles when either side
  /// is approximate.
  friend int compare(const ExactScalar& a, const ExactScalar& b);

 private:
  struct Tag {};
  ExactScalar(Tag, double v) : value_(v) {}

  std::variant<Rational, double> value_;
};

/// base^exponent for an integer exponent, exact.
Rational rational_power(const BigInt& base, long exponent);

}  // namespace orderinv
