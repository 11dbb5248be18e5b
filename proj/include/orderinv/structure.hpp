#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "orderinv/group.hpp"

namespace orderinv {

inline constexpr std::size_t default_subgroup_cap = 200;

/// A subgroup as its sorted element indices.
struct Subgroup {
  std::vector<Element> elements;

  std::size_t order() const { return elements.size(); }
  bool contains(Element x) const;
  friend auto operator<=>(const Subgroup&, const Subgroup&) = default;
};

bool is_cyclic(const FiniteGroup& g);

/// Every p-element set of the subgroup has size p^a and is closed.
bool is_nilpotent(const FiniteGroup& g, const Subgroup& h);
bool is_nilpotent(const FiniteGroup& g);

/// Derived series reaches the trivial subgroup.
bool is_solvable(const FiniteGroup& g);

Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Element> generators);
Subgroup whole_group(const FiniteGroup& g);

/// Distinct cyclic subgroups <x>, found by enumerating every element.
std::vector<Subgroup> cyclic_subgroups(const FiniteGroup& g);

/// All subgroups, sorted by (order, elements). Grows the set from the
/// trivial subgroup by joining with cyclic subgroups until nothing new
/// appears. Throws OrderCapExceeded above `cap`.
std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g,
                                          std::size_t cap = default_subgroup_cap);

struct SubgroupUniqueness {
  enum class Kind { unique, multiple, none };
  Kind kind = Kind::none;
  std::size_t count = 0;
  std::optional<Subgroup> subgroup;  // set when unique
};

SubgroupUniqueness unique_subgroup_of_order(const FiniteGroup& g, std::size_t n,
                                            std::size_t cap = default_subgroup_cap);
/// Same, over an already enumerated subgroup list.
SubgroupUniqueness unique_subgroup_of_order(std::span<const Subgroup> subgroups, std::size_t n);

}  // namespace orderinv
