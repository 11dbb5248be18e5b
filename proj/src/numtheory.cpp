#include "orderinv/numtheory.hpp"

#include <algorithm>
#include <cmath>

#include "orderinv/error.hpp"

namespace orderinv {

namespace {

constexpr std::uint64_t sieve_limit = 1'000'000;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(sieve_limit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint64_t i = 2; i <= sieve_limit; ++i) {
      if (composite[i]) continue;
      out.push_back(static_cast<std::uint32_t>(i));
      for (std::uint64_t k = i * i; k <= sieve_limit; k += i) composite[k] = true;
    }
    return out;
  }();
  return primes;
}

void require_positive(std::uint64_t n, const char* what) {
  if (n == 0) throw Error(ErrorKind::invalid_argument, std::string(what) + " requires n >= 1");
}

bool integer_pair(const ExactScalar& r, const ExactScalar& s) {
  return r.is_integer() && s.is_integer() && r.as_long() && s.as_long();
}

void check_exactness(const ExactScalar& r, const ExactScalar& s, Exactness exactness) {
  if (exactness == Exactness::require_exact && !integer_pair(r, s)) {
    throw Error(ErrorKind::inexact_parameters,
                "exact evaluation needs integer (r,s), got (" + r.to_string() + "," +
                    s.to_string() + ")");
  }
}

// Ordered list of (prime, exponent) for n >= 1.
std::vector<std::pair<std::uint64_t, unsigned>> factor_pairs(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  auto strip = [&](std::uint64_t p) {
    if (n % p != 0) return;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  };
  for (std::uint64_t p : small_primes()) {
    if (p * p > n) break;
    strip(p);
  }
  // Beyond the sieve, keep going with odd trial divisors.
  for (std::uint64_t p = sieve_limit + 1; p <= n / p; p += 2) strip(p);
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

}  // namespace

FactoredInteger::FactoredInteger(Factors factors) : factors_(std::move(factors)) {
  for (auto it = factors_.begin(); it != factors_.end();) {
    if (!is_prime(it->first)) {
      throw Error(ErrorKind::invalid_argument,
                  "factor key " + std::to_string(it->first) + " is not prime");
    }
    if (it->second < 0) {
      throw Error(ErrorKind::invalid_argument, "negative exponent");
    }
    if (it->second == 0) {
      it = factors_.erase(it);
    } else {
      ++it;
    }
  }
}

FactoredInteger FactoredInteger::of(std::uint64_t n) { return factorize(n); }

BigInt FactoredInteger::exponent(std::uint64_t prime) const {
  auto it = factors_.find(prime);
  return it == factors_.end() ? BigInt(0) : it->second;
}

BigInt FactoredInteger::value() const {
  BigInt v = 1;
  for (const auto& [p, e] : factors_) {
    v *= boost::multiprecision::pow(BigInt(p), e.convert_to<unsigned>());
  }
  return v;
}

FactoredInteger& FactoredInteger::operator*=(const FactoredInteger& o) {
  for (const auto& [p, e] : o.factors_) factors_[p] += e;
  return *this;
}

FactoredInteger FactoredInteger::pow(const BigInt& e) const {
  if (e < 0) throw Error(ErrorKind::invalid_argument, "negative power of a factored integer");
  FactoredInteger out;
  if (e == 0) return out;
  for (const auto& [p, x] : factors_) out.factors_[p] = x * e;
  return out;
}

FactoredInteger FactoredInteger::divided_by(const FactoredInteger& o) const {
  if (!o.divides(*this)) {
    throw Error(ErrorKind::invalid_argument, o.to_string() + " does not divide " + to_string());
  }
  FactoredInteger out = *this;
  for (const auto& [p, e] : o.factors_) {
    auto& mine = out.factors_[p];
    mine -= e;
    if (mine == 0) out.factors_.erase(p);
  }
  return out;
}

bool FactoredInteger::divides(const FactoredInteger& o) const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [&](const auto& pe) { return pe.second <= o.exponent(pe.first); });
}

double FactoredInteger::log() const {
  double acc = 0.0;
  for (const auto& [p, e] : factors_) acc += e.convert_to<double>() * std::log(double(p));
  return acc;
}

std::string FactoredInteger::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [p, e] : factors_) {
    if (!out.empty()) out += "*";
    out += std::to_string(p);
    if (e != 1) out += "^" + e.str();
  }
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  auto f = factor_pairs(n);
  return f.size() == 1 && f.front().second == 1;
}

FactoredInteger factorize(std::uint64_t n) {
  require_positive(n, "factorize");
  FactoredInteger::Factors out;
  for (auto [p, e] : factor_pairs(n)) out.emplace(p, BigInt(e));
  return FactoredInteger(std::move(out));
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  require_positive(n, "prime_divisors");
  std::vector<std::uint64_t> out;
  for (auto [p, e] : factor_pairs(n)) out.push_back(p);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  require_positive(n, "divisors");
  std::vector<std::uint64_t> out{1};
  for (auto [p, e] : factor_pairs(n)) {
    const std::size_t existing = out.size();
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < existing; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t totient(std::uint64_t n) {
  require_positive(n, "totient");
  std::uint64_t phi = n;
  for (auto [p, e] : factor_pairs(n)) phi = phi / p * (p - 1);
  return phi;
}

int moebius(std::uint64_t n) {
  require_positive(n, "moebius");
  int mu = 1;
  for (auto [p, e] : factor_pairs(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

std::uint64_t divisor_count(std::uint64_t n) {
  require_positive(n, "divisor_count");
  std::uint64_t d = 1;
  for (auto [p, e] : factor_pairs(n)) d *= (e + 1);
  return d;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::uint64_t lcm(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

unsigned valuation(std::uint64_t n, std::uint64_t p) {
  if (n == 0 || p < 2) throw Error(ErrorKind::invalid_argument, "valuation needs n >= 1, p >= 2");
  unsigned e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

std::map<std::uint64_t, ExactScalar> moebius_invert(
    const std::map<std::uint64_t, ExactScalar>& g, std::uint64_t n) {
  const auto divs = divisors(n);
  for (std::uint64_t d : divs) {
    if (!g.contains(d)) {
      throw Error(ErrorKind::missing_divisor,
                  "g is not defined at divisor " + std::to_string(d) + " of " + std::to_string(n),
                  {d});
    }
  }
  std::map<std::uint64_t, ExactScalar> f;
  for (std::uint64_t d : divs) {
    ExactScalar acc;
    for (std::uint64_t e : divisors(d)) {
      const int mu = moebius(e);
      if (mu == 0) continue;
      const ExactScalar& term = g.at(d / e);
      if (mu > 0) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    f.emplace(d, std::move(acc));
  }
  return f;
}

ExactScalar order_weight(std::uint64_t m, const ExactScalar& r, const ExactScalar& s) {
  require_positive(m, "order_weight");
  const std::uint64_t phi = totient(m);
  if (integer_pair(r, s)) {
    return ExactScalar(rational_power(BigInt(m), *s.as_long()) /
                       rational_power(BigInt(phi), *r.as_long()));
  }
  return ExactScalar::approx(std::pow(double(m), s.to_double()) /
                             std::pow(double(phi), r.to_double()));
}

ExactScalar g_coefficient(std::uint64_t m, std::uint64_t j, const ExactScalar& r,
                          const ExactScalar& s, Exactness exactness) {
  require_positive(m, "g_coefficient");
  require_positive(j, "g_coefficient");
  check_exactness(r, s, exactness);
  ExactScalar value = order_weight(m, r, s);
  const bool exact = integer_pair(r, s);
  for (std::uint64_t p : prime_divisors(j)) {
    ExactScalar factor;
    if (m % p == 0) {
      // 1 - p^(s-r)
      if (exact) {
        factor = ExactScalar(Rational(1) - rational_power(BigInt(p), *s.as_long() - *r.as_long()));
      } else {
        factor = ExactScalar::approx(1.0 - std::pow(double(p), s.to_double() - r.to_double()));
      }
    } else {
      // 1 - p^s / (p-1)^r
      if (exact) {
        factor = ExactScalar(Rational(1) - rational_power(BigInt(p), *s.as_long()) /
                                               rational_power(BigInt(p - 1), *r.as_long()));
      } else {
        factor = ExactScalar::approx(1.0 - std::pow(double(p), s.to_double()) /
                                               std::pow(double(p - 1), r.to_double()));
      }
    }
    value *= factor;
  }
  return value;
}

ExactScalar g_coefficient_by_sum(std::uint64_t m, std::uint64_t j, const ExactScalar& r,
                                 const ExactScalar& s, Exactness exactness) {
  require_positive(m, "g_coefficient_by_sum");
  require_positive(j, "g_coefficient_by_sum");
  check_exactness(r, s, exactness);
  ExactScalar acc;
  for (std::uint64_t i : divisors(j)) {
    const int mu = moebius(i);
    if (mu == 0) continue;
    ExactScalar term = order_weight(m * i, r, s);
    if (mu > 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

double LogCoefficient::value() const {
  switch (kind) {
    case Kind::log_m: return std::log(double(argument));
    case Kind::neg_log_prime: return -std::log(double(argument));
    case Kind::zero: return 0.0;
  }
  return 0.0;
}

std::string LogCoefficient::to_string() const {
  switch (kind) {
    case Kind::log_m: return "log(" + std::to_string(argument) + ")";
    case Kind::neg_log_prime: return "-log(" + std::to_string(argument) + ")";
    case Kind::zero: return "0";
  }
  return "?";
}

LogCoefficient g_log_coefficient(std::uint64_t m, std::uint64_t j) {
  require_positive(m, "g_log_coefficient");
  require_positive(j, "g_log_coefficient");
  if (j == 1) return {LogCoefficient::Kind::log_m, m};
  const auto primes = prime_divisors(j);
  if (primes.size() == 1) return {LogCoefficient::Kind::neg_log_prime, primes.front()};
  return {LogCoefficient::Kind::zero, 0};
}

ExactScalar divisor_weight_sum(std::uint64_t x, const ExactScalar& r, const ExactScalar& s) {
  const ExactScalar r_minus_one = r - ExactScalar(1);
  ExactScalar acc;
  for (std::uint64_t i : divisors(x)) acc += order_weight(i, r_minus_one, s);
  return acc;
}

}  // namespace orderinv
