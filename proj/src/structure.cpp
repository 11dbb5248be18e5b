#include "orderinv/structure.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "orderinv/error.hpp"
#include "orderinv/numtheory.hpp"

namespace orderinv {

namespace {

using Bits = std::vector<std::uint64_t>;

Bits empty_bits(std::size_t n) { return Bits((n + 63) / 64, 0); }
bool test(const Bits& b, Element x) { return (b[x / 64] >> (x % 64)) & 1u; }
void set(Bits& b, Element x) { b[x / 64] |= std::uint64_t{1} << (x % 64); }

// Closes `members` (listed in `elements` as well) under right multiplication
// by `gens`. Since the group is finite this yields the generated subgroup as
// long as the identity is present.
void close_under(const FiniteGroup& g, std::span<const Element> gens, Bits& members,
                 std::vector<Element>& elements) {
  for (std::size_t head = 0; head < elements.size(); ++head) {
    const Element x = elements[head];
    for (Element s : gens) {
      const Element y = g.mul(x, s);
      if (!test(members, y)) {
        set(members, y);
        elements.push_back(y);
      }
    }
  }
}

Subgroup to_subgroup(std::vector<Element> elements) {
  std::sort(elements.begin(), elements.end());
  return Subgroup{std::move(elements)};
}

bool is_prime_power_of(std::uint64_t x, std::uint64_t p) {
  while (x % p == 0) x /= p;
  return x == 1;
}

}  // namespace

bool Subgroup::contains(Element x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

bool is_cyclic(const FiniteGroup& g) {
  const auto orders = g.element_orders();
  return std::find(orders.begin(), orders.end(), g.order()) != orders.end();
}

bool is_nilpotent(const FiniteGroup& g, const Subgroup& h) {
  const std::size_t order = h.order();
  std::vector<bool> in_set(g.order(), false);
  for (std::uint64_t p : prime_divisors(order)) {
    std::uint64_t sylow_order = 1;
    for (std::uint64_t q = order; q % p == 0; q /= p) sylow_order *= p;
    std::vector<Element> pset;
    for (Element x : h.elements) {
      if (is_prime_power_of(g.element_order(x), p)) pset.push_back(x);
    }
    if (pset.size() != sylow_order) return false;
    std::fill(in_set.begin(), in_set.end(), false);
    for (Element x : pset) in_set[x] = true;
    for (Element x : pset) {
      for (Element y : pset) {
        if (!in_set[g.mul(x, y)]) return false;
      }
    }
  }
  return true;
}

bool is_nilpotent(const FiniteGroup& g) { return is_nilpotent(g, whole_group(g)); }

bool is_solvable(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<Element> current(n);
  for (std::size_t i = 0; i < n; ++i) current[i] = static_cast<Element>(i);
  while (current.size() > 1) {
    // Commutator subgroup, grown one new commutator at a time.
    Bits members = empty_bits(n);
    std::vector<Element> elements{0};
    set(members, 0);
    std::vector<Element> gens;
    for (Element a : current) {
      for (Element b : current) {
        const Element c = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
        if (test(members, c)) continue;
        gens.push_back(c);
        close_under(g, gens, members, elements);
      }
    }
    if (elements.size() == current.size()) return false;
    current = std::move(elements);
  }
  return true;
}

Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Element> generators) {
  for (Element x : generators) {
    if (x >= g.order()) throw Error(ErrorKind::invalid_argument, "generator index out of range", {x});
  }
  Bits members = empty_bits(g.order());
  std::vector<Element> elements{0};
  set(members, 0);
  close_under(g, generators, members, elements);
  return to_subgroup(std::move(elements));
}

Subgroup whole_group(const FiniteGroup& g) {
  std::vector<Element> all(g.order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Element>(i);
  return Subgroup{std::move(all)};
}

std::vector<Subgroup> cyclic_subgroups(const FiniteGroup& g) {
  std::set<Subgroup> found;
  for (Element x = 0; x < g.order(); ++x) {
    std::vector<Element> powers{0};
    for (Element y = x; y != 0; y = g.mul(y, x)) powers.push_back(y);
    found.insert(to_subgroup(std::move(powers)));
  }
  return {found.begin(), found.end()};
}

std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g, std::size_t cap) {
  const std::size_t n = g.order();
  if (n > cap) {
    throw Error(ErrorKind::order_cap_exceeded,
                "subgroup enumeration is capped at order " + std::to_string(cap) + ", group '" +
                    g.label() + "' has order " + std::to_string(n),
                {n});
  }
  // One generator per cyclic subgroup.
  std::vector<Element> cyclic_gens;
  {
    std::set<Subgroup> seen;
    for (Element x = 0; x < n; ++x) {
      const Element one[] = {x};
      if (seen.insert(generated_subgroup(g, one)).second) cyclic_gens.push_back(x);
    }
  }

  struct Node {
    Bits members;
    std::vector<Element> elements;
    std::vector<Element> gens;
  };
  std::set<Bits> known;
  std::deque<Node> queue;
  {
    Node trivial{empty_bits(n), {0}, {}};
    set(trivial.members, 0);
    known.insert(trivial.members);
    queue.push_back(std::move(trivial));
  }
  std::vector<Subgroup> out;
  while (!queue.empty()) {
    Node h = std::move(queue.front());
    queue.pop_front();
    for (Element x : cyclic_gens) {
      if (test(h.members, x)) continue;
      Node k{h.members, h.elements, h.gens};
      k.gens.push_back(x);
      close_under(g, k.gens, k.members, k.elements);
      if (known.insert(k.members).second) queue.push_back(std::move(k));
    }
    out.push_back(to_subgroup(std::move(h.elements)));
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  return out;
}

SubgroupUniqueness unique_subgroup_of_order(std::span<const Subgroup> subgroups, std::size_t n) {
  SubgroupUniqueness result;
  for (const Subgroup& h : subgroups) {
    if (h.order() != n) continue;
    ++result.count;
    if (result.count == 1) result.subgroup = h;
  }
  if (result.count == 0) {
    result.kind = SubgroupUniqueness::Kind::none;
  } else if (result.count == 1) {
    result.kind = SubgroupUniqueness::Kind::unique;
  } else {
    result.kind = SubgroupUniqueness::Kind::multiple;
    result.subgroup.reset();
  }
  return result;
}

SubgroupUniqueness unique_subgroup_of_order(const FiniteGroup& g, std::size_t n, std::size_t cap) {
  const auto all = enumerate_subgroups(g, cap);
  return unique_subgroup_of_order(all, n);
}

}  // namespace orderinv
