#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace orderinv {

using Element = std::uint32_t;

inline constexpr std::size_t default_order_cap = 5000;

struct GroupOptions {
  std::size_t order_cap = default_order_cap;
  /// Re-run the full associativity check on internally constructed groups.
  bool paranoid = false;
};

/// A finite group given by its full multiplication table. Elements are the
/// dense indices 0..n-1 and index 0 is always the identity. Instances are
/// immutable once built.
class FiniteGroup {
 public:
  std::size_t order() const { return order_; }
  const std::string& label() const { return label_; }

  Element mul(Element a, Element b) const { return table_[std::size_t(a) * order_ + b]; }
  Element inv(Element a) const { return inverse_[a]; }
  std::uint64_t element_order(Element a) const { return orders_[a]; }
  std::span<const std::uint64_t> element_orders() const { return orders_; }
  std::span<const Element> row(Element a) const {
    return {table_.data() + std::size_t(a) * order_, order_};
  }
  Element power(Element x, std::uint64_t k) const;

  /// Builds a group from a table the caller guarantees to be a group table
  /// with identity 0. Inverses and element orders are derived here.
  static FiniteGroup from_trusted_table(std::string label, std::size_t order,
                                        std::vector<Element> table,
                                        const GroupOptions& options = {});

  FiniteGroup with_label(std::string label) const;

 private:
  FiniteGroup() = default;

  std::size_t order_ = 0;
  std::string label_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::uint64_t> orders_;
};

/// Throws NotAssociative naming the first failing triple.
void check_associativity(const FiniteGroup& g);

/// Untrusted ingestion: validates range, Latin-square property, identity at
/// index 0, two-sided inverses and full associativity.
FiniteGroup from_cayley_table(const std::vector<std::vector<std::int64_t>>& table,
                              std::string label, const GroupOptions& options = {});

struct PermutationGenSet {
  std::size_t degree = 0;
  /// Image lists, 0-based: generator g sends point i to g[i].
  std::vector<std::vector<std::uint32_t>> generators;
};

/// Closes the generators under composition breadth-first.
FiniteGroup from_permutations(const PermutationGenSet& gens, std::string label,
                              const GroupOptions& options = {});

FiniteGroup cyclic(std::uint64_t n, const GroupOptions& options = {});
/// Symmetries of the regular n-gon, order 2n.
FiniteGroup dihedral(std::uint64_t n, const GroupOptions& options = {});
/// Generalized quaternion group of the given order (a power of 2, >= 8).
FiniteGroup generalized_quaternion(std::uint64_t order, const GroupOptions& options = {});
FiniteGroup symmetric(std::uint64_t k, const GroupOptions& options = {});
FiniteGroup alternating(std::uint64_t k, const GroupOptions& options = {});
FiniteGroup elementary_abelian(std::uint64_t p, std::uint64_t k,
                               const GroupOptions& options = {});
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                           const GroupOptions& options = {});

struct SemidirectParams {
  std::uint64_t m = 0;
  std::uint64_t beta = 0;
  std::uint64_t u = 0;

  std::uint64_t alpha() const { return (std::uint64_t{1} << u) * beta; }
  std::uint64_t order() const { return m * alpha(); }
  friend bool operator==(const SemidirectParams&, const SemidirectParams&) = default;
};

/// Throws CoprimalityViolated / ParityViolated / ParameterOutOfRange.
void validate_semidirect(const SemidirectParams& params);

/// C_m x| C_alpha with alpha = 2^u * beta, where the generator of C_alpha acts
/// on C_m by inversion. Element (i, j) sits at index i + m*j and
/// (i,j)(i',j') = (i + (-1)^j i' mod m, j + j' mod alpha).
FiniteGroup inverting_semidirect(const SemidirectParams& params,
                                 const GroupOptions& options = {});

std::string semidirect_label(const SemidirectParams& params);

}  // namespace orderinv
