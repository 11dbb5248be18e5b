#pragma once

// Slow, independent reference implementations. Nothing here calls the
// library's number theory or statistics code.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "orderinv/exact_scalar.hpp"
#include "orderinv/group.hpp"

namespace oracle {

using orderinv::BigInt;
using orderinv::Element;
using orderinv::FiniteGroup;
using orderinv::Rational;

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

inline std::uint64_t totient(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (std::gcd(k, n) == 1) ++c;
  }
  return c;
}

inline int moebius(std::uint64_t n) {
  int sign = 1;
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  return sign;
}

inline std::vector<std::uint64_t> primes_of(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  return out;
}

inline Rational qpow(std::uint64_t base, long e) {
  Rational acc = 1;
  for (long i = 0; i < (e < 0 ? -e : e); ++i) acc *= Rational(BigInt(base));
  return e < 0 ? Rational(1) / acc : acc;
}

inline Rational weight(std::uint64_t m, long r, long s) {
  return qpow(m, s) / qpow(totient(m), r);
}

/// sum_{i | j} mu(i) (m i)^s / phi(m i)^r by direct summation.
inline Rational g_by_definition(std::uint64_t m, std::uint64_t j, long r, long s) {
  Rational acc = 0;
  for (std::uint64_t i : divisors(j)) {
    const int mu = moebius(i);
    if (mu != 0) acc += Rational(mu) * weight(m * i, r, s);
  }
  return acc;
}

inline std::uint64_t element_order(const FiniteGroup& g, Element x) {
  std::uint64_t k = 1;
  for (Element y = x; y != 0; y = g.mul(y, x)) ++k;
  return k;
}

/// R_{G,n}(r,s) summed element by element.
inline Rational r_by_elements(const FiniteGroup& g, std::uint64_t n, long r, long s) {
  Rational acc = 0;
  for (Element x = 0; x < g.order(); ++x) {
    const std::uint64_t o = element_order(g, x);
    if (n % o == 0) acc += weight(o, r, s);
  }
  return acc;
}

inline Rational r_cyclic(std::uint64_t order, std::uint64_t n, long r, long s) {
  Rational acc = 0;
  for (std::uint64_t k = 0; k < order; ++k) {
    const std::uint64_t o = order / std::gcd(k, order);
    if (n % o == 0) acc += weight(o, r, s);
  }
  return acc;
}

inline std::set<std::vector<Element>> cyclic_subgroups(const FiniteGroup& g) {
  std::set<std::vector<Element>> out;
  for (Element x = 0; x < g.order(); ++x) {
    std::vector<Element> h{0};
    for (Element y = x; y != 0; y = g.mul(y, x)) h.push_back(y);
    std::sort(h.begin(), h.end());
    out.insert(h);
  }
  return out;
}

inline BigInt product_of_orders(const FiniteGroup& g) {
  BigInt acc = 1;
  for (Element x = 0; x < g.order(); ++x) acc *= element_order(g, x);
  return acc;
}

inline std::vector<Element> closure(const FiniteGroup& g, std::vector<Element> gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<Element> elems{0};
  in[0] = true;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (Element s : gens) {
      const Element y = g.mul(elems[i], s);
      if (!in[y]) {
        in[y] = true;
        elems.push_back(y);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

inline Element commutator(const FiniteGroup& g, Element a, Element b) {
  return g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
}

/// [A, B] for subgroups given as element lists.
inline std::vector<Element> commutator_subgroup(const FiniteGroup& g, const std::vector<Element>& a,
                                                const std::vector<Element>& b) {
  std::set<Element> gens;
  for (Element x : a) {
    for (Element y : b) gens.insert(commutator(g, x, y));
  }
  return closure(g, {gens.begin(), gens.end()});
}

inline std::vector<Element> all_elements(const FiniteGroup& g) {
  std::vector<Element> v(g.order());
  std::iota(v.begin(), v.end(), 0u);
  return v;
}

/// Lower central series reaches the trivial group.
inline bool nilpotent(const FiniteGroup& g) {
  const auto whole = all_elements(g);
  auto cur = whole;
  while (cur.size() > 1) {
    auto next = commutator_subgroup(g, cur, whole);
    if (next.size() == cur.size()) return false;
    cur = std::move(next);
  }
  return true;
}

inline bool solvable(const FiniteGroup& g) {
  auto cur = all_elements(g);
  while (cur.size() > 1) {
    auto next = commutator_subgroup(g, cur, cur);
    if (next.size() == cur.size()) return false;
    cur = std::move(next);
  }
  return true;
}

/// All subgroups by closing every subset of generators up to size two,
/// then iterating joins. Only for tiny groups.
inline std::set<std::vector<Element>> subgroups(const FiniteGroup& g) {
  std::set<std::vector<Element>> found;
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = a; b < g.order(); ++b) found.insert(closure(g, {a, b}));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<Element>> list(found.begin(), found.end());
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        std::vector<Element> gens = list[i];
        gens.insert(gens.end(), list[j].begin(), list[j].end());
        if (found.insert(closure(g, gens)).second) grew = true;
      }
    }
  }
  return found;
}

/// Hall's condition over every set of order classes.
inline bool hall_condition(const std::vector<std::uint64_t>& orders, const std::vector<std::uint64_t>& supply,
                           std::uint64_t n) {
  const auto slots = divisors(n);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << orders.size()); ++mask) {
    std::uint64_t demand = 0;
    std::set<std::uint64_t> reach;
    for (std::size_t i = 0; i < orders.size(); ++i) {
      if (!(mask >> i & 1)) continue;
      demand += supply[i];
      for (std::uint64_t e : slots) {
        if (e % orders[i] == 0) reach.insert(e);
      }
    }
    std::uint64_t capacity = 0;
    for (std::uint64_t e : reach) capacity += totient(e);
    if (demand > capacity) return false;
  }
  return true;
}

}  // namespace oracle
