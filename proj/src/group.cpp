#include "orderinv/group.hpp"

#include <deque>
#include <map>
#include <numeric>

#include "orderinv/error.hpp"
#include "orderinv/numtheory.hpp"

namespace orderinv {

namespace {

void check_cap(std::uint64_t order, const GroupOptions& options, const std::string& what) {
  if (order > options.order_cap) {
    throw Error(ErrorKind::order_cap_exceeded,
                what + " has order " + std::to_string(order) + " above the cap " +
                    std::to_string(options.order_cap),
                {order});
  }
}

std::string idx(std::uint64_t i) { return std::to_string(i); }

}  // namespace

Element FiniteGroup::power(Element x, std::uint64_t k) const {
  k %= orders_[x];
  Element result = 0;
  Element base = x;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

FiniteGroup FiniteGroup::from_trusted_table(std::string label, std::size_t order,
                                            std::vector<Element> table,
                                            const GroupOptions& options) {
  if (order == 0 || table.size() != order * order) {
    throw Error(ErrorKind::invalid_argument, "table size does not match the group order");
  }
  FiniteGroup g;
  g.order_ = order;
  g.label_ = std::move(label);
  g.table_ = std::move(table);
  g.inverse_.assign(order, 0);
  g.orders_.assign(order, 0);
  for (std::size_t x = 0; x < order; ++x) {
    auto r = g.row(static_cast<Element>(x));
    for (std::size_t y = 0; y < order; ++y) {
      if (r[y] == 0) {
        g.inverse_[x] = static_cast<Element>(y);
        break;
      }
    }
    std::uint64_t k = 1;
    Element y = static_cast<Element>(x);
    while (y != 0) {
      y = g.mul(y, static_cast<Element>(x));
      ++k;
      if (k > order) {
        throw Error(ErrorKind::not_closed,
                    "element " + idx(x) + " never reaches the identity", {x});
      }
    }
    g.orders_[x] = k;
  }
  if (options.paranoid) check_associativity(g);
  return g;
}

FiniteGroup FiniteGroup::with_label(std::string label) const {
  FiniteGroup copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

void check_associativity(const FiniteGroup& g) {
  const std::size_t n = g.order();
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const Element ab = g.mul(a, b);
      for (Element c = 0; c < n; ++c) {
        if (g.mul(ab, c) != g.mul(a, g.mul(b, c))) {
          throw Error(ErrorKind::not_associative,
                      "(" + idx(a) + "*" + idx(b) + ")*" + idx(c) + " != " + idx(a) + "*(" +
                          idx(b) + "*" + idx(c) + ")",
                      {a, b, c});
        }
      }
    }
  }
}

FiniteGroup from_cayley_table(const std::vector<std::vector<std::int64_t>>& table,
                              std::string label, const GroupOptions& options) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorKind::invalid_argument, "empty Cayley table");
  check_cap(n, options, "Cayley table");
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) {
      throw Error(ErrorKind::not_closed,
                  "row " + idx(i) + " has " + idx(table[i].size()) + " entries, expected " + idx(n),
                  {i});
    }
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t v = table[i][j];
      if (v < 0 || static_cast<std::uint64_t>(v) >= n) {
        throw Error(ErrorKind::not_closed,
                    "product " + idx(i) + "*" + idx(j) + " = " + std::to_string(v) +
                        " is outside 0.." + idx(n - 1),
                    {i, j});
      }
      flat.push_back(static_cast<Element>(v));
    }
  }
  auto at = [&](std::size_t i, std::size_t j) { return flat[i * n + j]; };

  // Latin square: every row and column is a permutation of 0..n-1.
  std::vector<std::size_t> seen(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), n);
    for (std::size_t j = 0; j < n; ++j) {
      const Element v = at(i, j);
      if (seen[v] != n) {
        throw Error(ErrorKind::not_closed,
                    "row " + idx(i) + " repeats " + idx(v) + " at columns " + idx(seen[v]) +
                        " and " + idx(j) + " (not a Latin square)",
                    {i, seen[v], j});
      }
      seen[v] = j;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), n);
    for (std::size_t i = 0; i < n; ++i) {
      const Element v = at(i, j);
      if (seen[v] != n) {
        throw Error(ErrorKind::not_closed,
                    "column " + idx(j) + " repeats " + idx(v) + " at rows " + idx(seen[v]) +
                        " and " + idx(i) + " (not a Latin square)",
                    {j, seen[v], i});
      }
      seen[v] = i;
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (at(0, i) != i || at(i, 0) != i) {
      throw Error(ErrorKind::no_identity, "index 0 does not act as identity on " + idx(i), {i});
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    std::size_t right = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (at(i, j) == 0) right = j;
    }
    if (right == n || at(right, i) != 0) {
      throw Error(ErrorKind::no_inverse,
                  "element " + idx(i) + " has no two-sided inverse" +
                      (right == n ? std::string() : " (right inverse " + idx(right) + ")"),
                  {i});
    }
  }

  GroupOptions trusted = options;
  trusted.paranoid = false;
  FiniteGroup g = FiniteGroup::from_trusted_table(std::move(label), n, std::move(flat), trusted);
  check_associativity(g);
  return g;
}

FiniteGroup from_permutations(const PermutationGenSet& gens, std::string label,
                              const GroupOptions& options) {
  const std::size_t d = gens.degree;
  if (d == 0) throw Error(ErrorKind::invalid_argument, "permutation degree must be positive");
  using Perm = std::vector<std::uint32_t>;
  for (std::size_t k = 0; k < gens.generators.size(); ++k) {
    const Perm& g = gens.generators[k];
    if (g.size() != d) {
      throw Error(ErrorKind::invalid_argument,
                  "generator " + idx(k) + " has length " + idx(g.size()) + ", expected " + idx(d),
                  {k});
    }
    std::vector<bool> hit(d, false);
    for (auto v : g) {
      if (v >= d || hit[v]) {
        throw Error(ErrorKind::invalid_argument, "generator " + idx(k) + " is not a bijection",
                    {k});
      }
      hit[v] = true;
    }
  }

  // Product a*b applies a first, then b.
  auto compose = [d](const Perm& a, const Perm& b) {
    Perm c(d);
    for (std::size_t i = 0; i < d; ++i) c[i] = b[a[i]];
    return c;
  };

  Perm identity(d);
  std::iota(identity.begin(), identity.end(), 0u);
  std::vector<Perm> elements{identity};
  std::map<Perm, Element> index{{identity, 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const Perm& g : gens.generators) {
      Perm next = compose(elements[head], g);
      if (index.contains(next)) continue;
      if (elements.size() + 1 > options.order_cap) {
        check_cap(elements.size() + 1, options, "permutation group '" + label + "'");
      }
      index.emplace(next, static_cast<Element>(elements.size()));
      elements.push_back(std::move(next));
    }
  }

  const std::size_t n = elements.size();
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      table[a * n + b] = index.at(compose(elements[a], elements[b]));
    }
  }
  return FiniteGroup::from_trusted_table(std::move(label), n, std::move(table), options);
}

FiniteGroup cyclic(std::uint64_t n, const GroupOptions& options) {
  if (n == 0) throw Error(ErrorKind::parameter_out_of_range, "cyclic group needs n >= 1");
  check_cap(n, options, "C" + std::to_string(n));
  std::vector<Element> table(n * n);
  for (std::uint64_t i = 0; i < n; ++i) {
    for (std::uint64_t j = 0; j < n; ++j) table[i * n + j] = static_cast<Element>((i + j) % n);
  }
  return FiniteGroup::from_trusted_table("C" + std::to_string(n), n, std::move(table), options);
}

FiniteGroup dihedral(std::uint64_t n, const GroupOptions& options) {
  if (n == 0) throw Error(ErrorKind::parameter_out_of_range, "dihedral group needs n >= 1");
  const std::uint64_t order = 2 * n;
  check_cap(order, options, "D" + std::to_string(n));
  // r^i s^f at index i + n*f; s r = r^-1 s.
  std::vector<Element> table(order * order);
  for (std::uint64_t a = 0; a < order; ++a) {
    const std::uint64_t i = a % n, f = a / n;
    for (std::uint64_t b = 0; b < order; ++b) {
      const std::uint64_t j = b % n, g = b / n;
      const std::uint64_t k = f == 0 ? (i + j) % n : (i + n - j) % n;
      table[a * order + b] = static_cast<Element>(k + n * ((f + g) % 2));
    }
  }
  return FiniteGroup::from_trusted_table("D" + std::to_string(n), order, std::move(table),
                                         options);
}

FiniteGroup generalized_quaternion(std::uint64_t order, const GroupOptions& options) {
  if (order < 8 || (order & (order - 1)) != 0) {
    throw Error(ErrorKind::parameter_out_of_range,
                "generalized quaternion order must be a power of 2 that is at least 8",
                {order});
  }
  check_cap(order, options, "Q" + std::to_string(order));
  const std::uint64_t h = order / 2;  // order of a
  // a^i b^f at index i + h*f; b^2 = a^(h/2), b a b^-1 = a^-1.
  std::vector<Element> table(order * order);
  for (std::uint64_t x = 0; x < order; ++x) {
    const std::uint64_t i = x % h, f = x / h;
    for (std::uint64_t y = 0; y < order; ++y) {
      const std::uint64_t j = y % h, g = y / h;
      std::uint64_t k, e;
      if (f == 0) {
        k = (i + j) % h;
        e = g;
      } else if (g == 0) {
        k = (i + h - j) % h;
        e = 1;
      } else {
        k = (i + h - j + h / 2) % h;
        e = 0;
      }
      table[x * order + y] = static_cast<Element>(k + h * e);
    }
  }
  return FiniteGroup::from_trusted_table("Q" + std::to_string(order), order, std::move(table),
                                         options);
}

FiniteGroup symmetric(std::uint64_t k, const GroupOptions& options) {
  if (k == 0 || k > 12) throw Error(ErrorKind::parameter_out_of_range, "symmetric group needs 1 <= k <= 12");
  std::uint64_t fact = 1;
  for (std::uint64_t i = 2; i <= k; ++i) fact *= i;
  check_cap(fact, options, "S" + std::to_string(k));
  PermutationGenSet gens{k, {}};
  if (k >= 2) {
    std::vector<std::uint32_t> transposition(k), cycle(k);
    std::iota(transposition.begin(), transposition.end(), 0u);
    std::swap(transposition[0], transposition[1]);
    for (std::uint32_t i = 0; i < k; ++i) cycle[i] = static_cast<std::uint32_t>((i + 1) % k);
    gens.generators = {transposition, cycle};
  }
  return from_permutations(gens, "S" + std::to_string(k), options);
}

FiniteGroup alternating(std::uint64_t k, const GroupOptions& options) {
  if (k == 0 || k > 12) throw Error(ErrorKind::parameter_out_of_range, "alternating group needs 1 <= k <= 12");
  std::uint64_t half_fact = 1;
  for (std::uint64_t i = 3; i <= k; ++i) half_fact *= i;
  check_cap(half_fact, options, "A" + std::to_string(k));
  PermutationGenSet gens{k, {}};
  // 3-cycles (0 1 i) generate A_k.
  for (std::uint32_t i = 2; i < k; ++i) {
    std::vector<std::uint32_t> c(k);
    std::iota(c.begin(), c.end(), 0u);
    c[0] = 1;
    c[1] = i;
    c[i] = 0;
    gens.generators.push_back(std::move(c));
  }
  return from_permutations(gens, "A" + std::to_string(k), options);
}

FiniteGroup elementary_abelian(std::uint64_t p, std::uint64_t k, const GroupOptions& options) {
  if (!is_prime(p)) throw Error(ErrorKind::parameter_out_of_range, "elementary abelian group needs a prime p", {p});
  if (k == 0 || k > 64) throw Error(ErrorKind::parameter_out_of_range, "elementary abelian group needs k >= 1", {k});
  std::uint64_t order = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    order *= p;
    check_cap(order, options, "E" + std::to_string(p) + "^" + std::to_string(k));
  }
  std::vector<Element> table(order * order);
  for (std::uint64_t a = 0; a < order; ++a) {
    for (std::uint64_t b = 0; b < order; ++b) {
      std::uint64_t x = a, y = b, sum = 0, place = 1;
      for (std::uint64_t i = 0; i < k; ++i) {
        sum += ((x % p + y % p) % p) * place;
        x /= p;
        y /= p;
        place *= p;
      }
      table[a * order + b] = static_cast<Element>(sum);
    }
  }
  return FiniteGroup::from_trusted_table("E" + std::to_string(p) + "^" + std::to_string(k), order,
                                         std::move(table), options);
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, const GroupOptions& options) {
  const std::uint64_t na = a.order(), nb = b.order();
  const std::string label = a.label() + "x" + b.label();
  check_cap(na * nb, options, label);
  const std::uint64_t n = na * nb;
  std::vector<Element> table(n * n);
  for (std::uint64_t x = 0; x < n; ++x) {
    for (std::uint64_t y = 0; y < n; ++y) {
      const Element first = a.mul(static_cast<Element>(x / nb), static_cast<Element>(y / nb));
      const Element second = b.mul(static_cast<Element>(x % nb), static_cast<Element>(y % nb));
      table[x * n + y] = static_cast<Element>(first * nb + second);
    }
  }
  return FiniteGroup::from_trusted_table(label, n, std::move(table), options);
}

void validate_semidirect(const SemidirectParams& params) {
  if (params.m == 0 || params.beta == 0 || params.u == 0 || params.u > 40) {
    throw Error(ErrorKind::parameter_out_of_range, "semidirect product needs m, beta, u >= 1",
                {params.m, params.beta, params.u});
  }
  if (gcd(params.m, params.alpha()) != 1) {
    throw Error(ErrorKind::coprimality_violated,
                "gcd(m, 2^u*beta) = gcd(" + std::to_string(params.m) + ", " +
                    std::to_string(params.alpha()) + ") != 1",
                {params.m, params.alpha()});
  }
  if (params.m % 2 == 0 || params.beta % 2 == 0) {
    throw Error(ErrorKind::parity_violated, "m and beta must both be odd",
                {params.m, params.beta});
  }
}

std::string semidirect_label(const SemidirectParams& params) {
  return "C" + std::to_string(params.m) + ":C" + std::to_string(params.alpha());
}

FiniteGroup inverting_semidirect(const SemidirectParams& params, const GroupOptions& options) {
  validate_semidirect(params);
  const std::uint64_t m = params.m, alpha = params.alpha(), n = params.order();
  const std::string label = semidirect_label(params);
  check_cap(n, options, label);
  std::vector<Element> table(n * n);
  for (std::uint64_t x = 0; x < n; ++x) {
    const std::uint64_t i = x % m, j = x / m;
    for (std::uint64_t y = 0; y < n; ++y) {
      const std::uint64_t i2 = y % m, j2 = y / m;
      const std::uint64_t first = j % 2 == 0 ? (i + i2) % m : (i + m - i2) % m;
      const std::uint64_t second = (j + j2) % alpha;
      table[x * n + y] = static_cast<Element>(first + m * second);
    }
  }
  return FiniteGroup::from_trusted_table(label, n, std::move(table), options);
}

}  // namespace orderinv
