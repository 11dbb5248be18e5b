#pragma once

#include <cstdint>
#include <map>

#include "orderinv/exact_scalar.hpp"
#include "orderinv/group.hpp"
#include "orderinv/numtheory.hpp"

namespace orderinv {

/// Number of elements of each exact order. Only orders that actually occur
/// are stored.
class OrderProfile {
 public:
  using Counts = std::map<std::uint64_t, std::uint64_t>;

  /// Validates: keys divide the group order, counts sum to it, exactly one
  /// element of order 1, and phi(d) | A(d) for every key d.
  OrderProfile(std::uint64_t group_order, Counts counts);

  std::uint64_t group_order() const { return group_order_; }
  const Counts& counts() const { return counts_; }
  /// A(d); zero for orders that do not occur.
  std::uint64_t count(std::uint64_t d) const;
  /// Number of cyclic subgroups of order d, A(d) / phi(d).
  std::uint64_t cyclic_subgroups_of_order(std::uint64_t d) const;

  friend bool operator==(const OrderProfile&, const OrderProfile&) = default;

 private:
  std::uint64_t group_order_;
  Counts counts_;
};

OrderProfile order_profile(const FiniteGroup& g);
/// Profile of C_n: A(d) = phi(d) for d | n.
OrderProfile cyclic_order_profile(std::uint64_t n);
/// Profile of the direct product of groups with the given profiles, using
/// o((a,b)) = lcm(o(a), o(b)).
OrderProfile product_profile(const OrderProfile& a, const OrderProfile& b);

struct FrobeniusEntry {
  std::uint64_t solutions;  // B(m) = #{x : x^m = 1}
  std::uint64_t quotient;   // f(m) = B(m) / m
  friend bool operator==(const FrobeniusEntry&, const FrobeniusEntry&) = default;
};

class FrobeniusTable {
 public:
  using Entries = std::map<std::uint64_t, FrobeniusEntry>;

  explicit FrobeniusTable(Entries entries) : entries_(std::move(entries)) {}

  const Entries& entries() const { return entries_; }
  std::uint64_t solutions(std::uint64_t m) const;
  std::uint64_t quotient(std::uint64_t m) const;

 private:
  Entries entries_;
};

/// B(m) for every divisor m of the group order without the divisibility
/// check. Useful when the caller wants to inspect a corrupted profile.
std::map<std::uint64_t, std::uint64_t> solution_counts(const OrderProfile& p);

/// Throws FrobeniusViolated naming m and B(m) if some m does not divide B(m).
FrobeniusTable frobenius_table(const OrderProfile& p);

/// Number of cyclic subgroups whose order divides n.
std::uint64_t cyclic_subgroup_count(const OrderProfile& p, std::uint64_t n);

/// R_{G,n}(r,s): sum over elements with o(x) | n of o(x)^s / phi(o(x))^r,
/// evaluated over divisors as sum_{m | n} A(m) m^s / phi(m)^r.
ExactScalar r_functional(const OrderProfile& p, std::uint64_t n, const ExactScalar& r,
                         const ExactScalar& s);

/// R_{G,n}(r,s) - R_{C_|G|,n}(r,s).
ExactScalar t_functional(const OrderProfile& p, std::uint64_t n, const ExactScalar& r,
                         const ExactScalar& s);

/// sum_{k | n} g_{k,n/k}^{r,s} B(k). Equals r_functional exactly; only
/// defined for integer (r,s).
ExactScalar g_expansion(const OrderProfile& p, std::uint64_t n, const ExactScalar& r,
                        const ExactScalar& s);

/// Product of all element orders through the closed form
/// n^n / prod_i p_i^{B_i}, B_i = sum_{j=1}^{c_i} B(n / p_i^j).
FactoredInteger product_of_orders(const OrderProfile& p);
/// prod_d d^{A(d)} multiplied out in factored form.
FactoredInteger product_of_orders_direct(const OrderProfile& p);
/// The exponents B_i of the closed form, keyed by prime.
std::map<std::uint64_t, BigInt> order_product_deficits(const OrderProfile& p);

}  // namespace orderinv
