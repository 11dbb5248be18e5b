#include "orderinv/order_stats.hpp"

#include <limits>

#include "orderinv/error.hpp"

namespace orderinv {

namespace {

void require_divisor(const OrderProfile& p, std::uint64_t n) {
  if (n == 0 || p.group_order() % n != 0) {
    throw Error(ErrorKind::invalid_argument,
                std::to_string(n) + " does not divide the group order " +
                    std::to_string(p.group_order()),
                {n});
  }
}

}  // namespace

OrderProfile::OrderProfile(std::uint64_t group_order, Counts counts)
    : group_order_(group_order), counts_(std::move(counts)) {
  if (group_order_ == 0) throw Error(ErrorKind::invalid_argument, "profile of an empty group");
  std::uint64_t total = 0;
  for (auto it = counts_.begin(); it != counts_.end();) {
    const auto [d, a] = *it;
    if (a == 0) {
      it = counts_.erase(it);
      continue;
    }
    if (d == 0 || group_order_ % d != 0) {
      throw Error(ErrorKind::invalid_argument,
                  "order " + std::to_string(d) + " does not divide " + std::to_string(group_order_),
                  {d});
    }
    if (a % totient(d) != 0) {
      throw Error(ErrorKind::invalid_argument,
                  "phi(" + std::to_string(d) + ") does not divide A(" + std::to_string(d) +
                      ") = " + std::to_string(a),
                  {d, a});
    }
    total += a;
    ++it;
  }
  if (count(1) != 1) throw Error(ErrorKind::invalid_argument, "profile must have A(1) = 1");
  if (total != group_order_) {
    throw Error(ErrorKind::invalid_argument,
                "counts sum to " + std::to_string(total) + ", expected " +
                    std::to_string(group_order_));
  }
}

std::uint64_t OrderProfile::count(std::uint64_t d) const {
  auto it = counts_.find(d);
  return it == counts_.end() ? 0 : it->second;
}

std::uint64_t OrderProfile::cyclic_subgroups_of_order(std::uint64_t d) const {
  return count(d) / totient(d);
}

OrderProfile order_profile(const FiniteGroup& g) {
  OrderProfile::Counts counts;
  for (std::uint64_t o : g.element_orders()) ++counts[o];
  return OrderProfile(g.order(), std::move(counts));
}

OrderProfile cyclic_order_profile(std::uint64_t n) {
  OrderProfile::Counts counts;
  for (std::uint64_t d : divisors(n)) counts[d] = totient(d);
  return OrderProfile(n, std::move(counts));
}

OrderProfile product_profile(const OrderProfile& a, const OrderProfile& b) {
  if (b.group_order() != 0 &&
      a.group_order() > std::numeric_limits<std::uint64_t>::max() / b.group_order()) {
    throw Error(ErrorKind::invalid_argument, "product order overflows");
  }
  OrderProfile::Counts counts;
  for (const auto& [d1, a1] : a.counts()) {
    for (const auto& [d2, a2] : b.counts()) counts[lcm(d1, d2)] += a1 * a2;
  }
  return OrderProfile(a.group_order() * b.group_order(), std::move(counts));
}

std::uint64_t FrobeniusTable::solutions(std::uint64_t m) const {
  auto it = entries_.find(m);
  if (it == entries_.end()) {
    throw Error(ErrorKind::missing_divisor, "no Frobenius entry for " + std::to_string(m), {m});
  }
  return it->second.solutions;
}

std::uint64_t FrobeniusTable::quotient(std::uint64_t m) const {
  auto it = entries_.find(m);
  if (it == entries_.end()) {
    throw Error(ErrorKind::missing_divisor, "no Frobenius entry for " + std::to_string(m), {m});
  }
  return it->second.quotient;
}

std::map<std::uint64_t, std::uint64_t> solution_counts(const OrderProfile& p) {
  std::map<std::uint64_t, std::uint64_t> b;
  for (std::uint64_t m : divisors(p.group_order())) {
    std::uint64_t total = 0;
    for (const auto& [d, a] : p.counts()) {
      if (m % d == 0) total += a;
    }
    b.emplace(m, total);
  }
  return b;
}

FrobeniusTable frobenius_table(const OrderProfile& p) {
  FrobeniusTable::Entries entries;
  for (const auto& [m, b] : solution_counts(p)) {
    if (b % m != 0) {
      throw Error(ErrorKind::frobenius_violated,
                  std::to_string(m) + " does not divide B(" + std::to_string(m) +
                      ") = " + std::to_string(b),
                  {m, b});
    }
    entries.emplace(m, FrobeniusEntry{b, b / m});
  }
  return FrobeniusTable(std::move(entries));
}

std::uint64_t cyclic_subgroup_count(const OrderProfile& p, std::uint64_t n) {
  require_divisor(p, n);
  std::uint64_t total = 0;
  for (const auto& [d, a] : p.counts()) {
    if (n % d == 0) total += a / totient(d);
  }
  return total;
}

ExactScalar r_functional(const OrderProfile& p, std::uint64_t n, const ExactScalar& r,
                         const ExactScalar& s) {
  require_divisor(p, n);
  ExactScalar acc;
  for (const auto& [m, a] : p.counts()) {
    if (n % m == 0) acc += ExactScalar(a) * order_weight(m, r, s);
  }
  return acc;
}

ExactScalar t_functional(const OrderProfile& p, std::uint64_t n, const ExactScalar& r,
                         const ExactScalar& s) {
  require_divisor(p, n);
  ExactScalar cyclic_side;
  for (std::uint64_t m : divisors(n)) cyclic_side += ExactScalar(totient(m)) * order_weight(m, r, s);
  return r_functional(p, n, r, s) - cyclic_side;
}

ExactScalar g_expansion(const OrderProfile& p, std::uint64_t n, const ExactScalar& r,
                        const ExactScalar& s) {
  require_divisor(p, n);
  const auto b = solution_counts(p);
  ExactScalar acc;
  for (std::uint64_t k : divisors(n)) {
    acc += g_coefficient(k, n / k, r, s, Exactness::require_exact) * ExactScalar(b.at(k));
  }
  return acc;
}

std::map<std::uint64_t, BigInt> order_product_deficits(const OrderProfile& p) {
  const std::uint64_t n = p.group_order();
  const auto b = solution_counts(p);
  std::map<std::uint64_t, BigInt> deficits;
  for (std::uint64_t prime : prime_divisors(n)) {
    BigInt total = 0;
    std::uint64_t q = n;
    while (q % prime == 0) {
      q /= prime;
      total += b.at(q);
    }
    deficits.emplace(prime, total);
  }
  return deficits;
}

FactoredInteger product_of_orders(const OrderProfile& p) {
  const std::uint64_t n = p.group_order();
  // n^B(n) with B(n) = n.
  FactoredInteger::Factors exps;
  const auto deficits = order_product_deficits(p);
  const FactoredInteger n_factors = factorize(n);
  for (const auto& [prime, e] : n_factors.factors()) {
    BigInt exponent = e * BigInt(n) - deficits.at(prime);
    if (exponent < 0) {
      throw Error(ErrorKind::invalid_argument, "negative exponent in the order product");
    }
    exps.emplace(prime, exponent);
  }
  return FactoredInteger(std::move(exps));
}

FactoredInteger product_of_orders_direct(const OrderProfile& p) {
  FactoredInteger acc;
  for (const auto& [d, a] : p.counts()) acc *= factorize(d).pow(BigInt(a));
  return acc;
}

}  // namespace orderinv
