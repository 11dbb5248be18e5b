#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "orderinv/exact_scalar.hpp"

namespace orderinv {

/// A positive integer held as its prime factorization. The empty mapping
/// is 1. Exponents are arbitrary precision so that values like n^n never
/// have to be expanded.
class FactoredInteger {
 public:
  using Factors = std::map<std::uint64_t, BigInt>;

  FactoredInteger() = default;
  explicit FactoredInteger(Factors factors);

  static FactoredInteger of(std::uint64_t n);

  const Factors& factors() const { return factors_; }
  BigInt exponent(std::uint64_t prime) const;
  bool is_one() const { return factors_.empty(); }

  /// Expands to a plain integer. Only meant for small values and tests.
  BigInt value() const;

  FactoredInteger& operator*=(const FactoredInteger& o);
  friend FactoredInteger operator*(FactoredInteger a, const FactoredInteger& b) {
    return a *= b;
  }
  FactoredInteger pow(const BigInt& e) const;
  /// Exact quotient; throws when `o` does not divide *this.
  FactoredInteger divided_by(const FactoredInteger& o) const;
  /// Exponent-wise <=, i.e. *this divides `o`.
  bool divides(const FactoredInteger& o) const;

  /// Natural logarithm, for reporting and sign decisions only.
  double log() const;

  /// "1", "2^3*3^4", ...
  std::string to_string() const;

  friend bool operator==(const FactoredInteger&, const FactoredInteger&) = default;

 private:
  Factors factors_;
};

std::vector<std::uint64_t> divisors(std::uint64_t n);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
FactoredInteger factorize(std::uint64_t n);
bool is_prime(std::uint64_t n);

std::uint64_t totient(std::uint64_t n);
int moebius(std::uint64_t n);
std::uint64_t divisor_count(std::uint64_t n);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);
/// Largest e with p^e | n.
unsigned valuation(std::uint64_t n, std::uint64_t p);

/// f(d) = sum_{e | d} mu(e) g(d / e) for every divisor d of n. The result
/// satisfies g(d) = sum_{e | d} f(e).
std::map<std::uint64_t, ExactScalar> moebius_invert(
    const std::map<std::uint64_t, ExactScalar>& g, std::uint64_t n);

/// m^s / phi(m)^r. Exact whenever r and s are integers.
ExactScalar order_weight(std::uint64_t m, const ExactScalar& r, const ExactScalar& s);

enum class Exactness { allow_approx, require_exact };

/// Moebius-weighted coefficient sum_{i | j} mu(i) (m i)^s / phi(m i)^r,
/// evaluated through its product formula over the primes of j.
ExactScalar g_coefficient(std::uint64_t m, std::uint64_t j, const ExactScalar& r,
                          const ExactScalar& s,
                          Exactness exactness = Exactness::allow_approx);

/// Same coefficient by direct summation over the divisors of j.
ExactScalar g_coefficient_by_sum(std::uint64_t m, std::uint64_t j, const ExactScalar& r,
                                 const ExactScalar& s,
                                 Exactness exactness = Exactness::allow_approx);

/// Symbolic value of sum_{i | j} mu(i) log(m i).
struct LogCoefficient {
  enum class Kind { log_m, neg_log_prime, zero };
  Kind kind;
  std::uint64_t argument;  // m for log_m, p for neg_log_prime, 0 for zero

  double value() const;
  std::string to_string() const;
  friend bool operator==(const LogCoefficient&, const LogCoefficient&) = default;
};

LogCoefficient g_log_coefficient(std::uint64_t m, std::uint64_t j);

/// sum_{i | x} i^s / phi(i)^(r-1).
ExactScalar divisor_weight_sum(std::uint64_t x, const ExactScalar& r, const ExactScalar& s);

}  // namespace orderinv
