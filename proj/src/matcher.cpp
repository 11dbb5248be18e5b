#include "orderinv/matcher.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>

namespace orderinv {

namespace {

struct FlowNetwork {
  struct Edge {
    std::size_t to;
    std::uint64_t capacity;
    std::uint64_t flow;
  };
  std::vector<Edge> edges;
  std::vector<std::vector<std::size_t>> out;

  explicit FlowNetwork(std::size_t nodes) : out(nodes) {}

  std::size_t add_edge(std::size_t from, std::size_t to, std::uint64_t capacity) {
    out[from].push_back(edges.size());
    edges.push_back({to, capacity, 0});
    out[to].push_back(edges.size());
    edges.push_back({from, 0, 0});
    return edges.size() - 2;
  }

  std::uint64_t residual(std::size_t e) const { return edges[e].capacity - edges[e].flow; }

  // Parent edge per node from a BFS over the residual graph.
  std::vector<std::size_t> bfs(std::size_t source) const {
    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> parent(out.size(), none);
    std::vector<bool> seen(out.size(), false);
    std::deque<std::size_t> queue{source};
    seen[source] = true;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t e : out[u]) {
        const std::size_t v = edges[e].to;
        if (seen[v] || residual(e) == 0) continue;
        seen[v] = true;
        parent[v] = e;
        queue.push_back(v);
      }
    }
    return parent;
  }

  std::uint64_t max_flow(std::size_t source, std::size_t sink) {
    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    std::uint64_t total = 0;
    while (true) {
      const auto parent = bfs(source);
      if (parent[sink] == none) break;
      std::uint64_t push = std::numeric_limits<std::uint64_t>::max();
      for (std::size_t v = sink; v != source; v = edges[parent[v] ^ 1].to) {
        push = std::min(push, residual(parent[v]));
      }
      for (std::size_t v = sink; v != source; v = edges[parent[v] ^ 1].to) {
        edges[parent[v]].flow += push;
        edges[parent[v] ^ 1].flow -= push;  // wraps; residual() stays consistent
      }
      total += push;
    }
    return total;
  }
};

std::uint64_t slot_capacity(const std::vector<std::uint64_t>& orders, std::uint64_t n) {
  std::set<std::uint64_t> reachable;
  for (std::uint64_t d : orders) {
    for (std::uint64_t e : divisors(n)) {
      if (e % d == 0) reachable.insert(e);
    }
  }
  std::uint64_t cap = 0;
  for (std::uint64_t e : reachable) cap += totient(e);
  return cap;
}

std::uint64_t demand_of(const OrderProfile& p, const std::vector<std::uint64_t>& orders) {
  std::uint64_t total = 0;
  for (std::uint64_t d : orders) total += p.count(d);
  return total;
}

}  // namespace

DivisibilityMatching find_divisibility_matching(const OrderProfile& p) {
  const std::uint64_t n = p.group_order();
  const auto slots = divisors(n);
  std::vector<std::uint64_t> supplies;
  for (const auto& [d, a] : p.counts()) supplies.push_back(d);

  const std::size_t source = 0;
  const std::size_t first_supply = 1;
  const std::size_t first_slot = first_supply + supplies.size();
  const std::size_t sink = first_slot + slots.size();
  FlowNetwork net(sink + 1);

  for (std::size_t i = 0; i < supplies.size(); ++i) {
    net.add_edge(source, first_supply + i, p.count(supplies[i]));
  }
  std::vector<std::tuple<std::size_t, std::uint64_t, std::uint64_t>> middle;  // edge, d, e
  for (std::size_t i = 0; i < supplies.size(); ++i) {
    for (std::size_t j = 0; j < slots.size(); ++j) {
      if (slots[j] % supplies[i] != 0) continue;
      const std::size_t e = net.add_edge(first_supply + i, first_slot + j, n);
      middle.emplace_back(e, supplies[i], slots[j]);
    }
  }
  for (std::size_t j = 0; j < slots.size(); ++j) {
    net.add_edge(first_slot + j, sink, totient(slots[j]));
  }

  DivisibilityMatching result;
  result.group_order = n;
  const std::uint64_t flow = net.max_flow(source, sink);
  if (flow == n) {
    result.status = DivisibilityMatching::Status::found;
    for (const auto& [e, d, slot] : middle) {
      const std::uint64_t f = net.edges[e].flow;
      if (f > 0) result.assignment[d][slot] = f;
    }
    return result;
  }

  // Source side of the minimum cut.
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  const auto parent = net.bfs(source);
  std::vector<std::uint64_t> deficient;
  for (std::size_t i = 0; i < supplies.size(); ++i) {
    if (parent[first_supply + i] != none) deficient.push_back(supplies[i]);
  }
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (std::size_t i = 0; i < deficient.size(); ++i) {
      std::vector<std::uint64_t> smaller = deficient;
      smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
      if (!smaller.empty() && demand_of(p, smaller) > slot_capacity(smaller, n)) {
        deficient = std::move(smaller);
        shrunk = true;
        break;
      }
    }
  }
  result.status = DivisibilityMatching::Status::violated;
  result.violator = DivisibilityMatching::HallViolation{
      deficient, demand_of(p, deficient), slot_capacity(deficient, n)};
  return result;
}

bool verify_matching(const OrderProfile& p, const DivisibilityMatching& m) {
  if (m.status != DivisibilityMatching::Status::found) return false;
  const std::uint64_t n = p.group_order();
  if (m.group_order != n) return false;
  std::map<std::uint64_t, std::uint64_t> row, column;
  for (const auto& [d, targets] : m.assignment) {
    for (const auto& [e, count] : targets) {
      if (d == 0 || e == 0 || n % e != 0 || e % d != 0) return false;
      row[d] += count;
      column[e] += count;
    }
  }
  for (const auto& [d, a] : p.counts()) {
    if (row[d] != a) return false;
  }
  for (const auto& [d, total] : row) {
    if (total != p.count(d)) return false;
  }
  for (std::uint64_t e : divisors(n)) {
    if (column[e] != totient(e)) return false;
  }
  for (const auto& [e, total] : column) {
    if (n % e != 0 || total != totient(e)) return false;
  }
  return true;
}

bool verify_violation(const OrderProfile& p, const DivisibilityMatching::HallViolation& v) {
  if (v.orders.empty()) return false;
  for (std::uint64_t d : v.orders) {
    if (p.count(d) == 0) return false;
  }
  const std::uint64_t demand = demand_of(p, v.orders);
  const std::uint64_t capacity = slot_capacity(v.orders, p.group_order());
  return v.demand == demand && v.capacity == capacity && demand > capacity;
}

}  // namespace orderinv
