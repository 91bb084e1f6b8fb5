// Copyright 2026 The kvconn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kvconn/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "kvconn/error.hpp"

namespace kvconn {
namespace {

// Residual graph with paired forward/backward arcs (arc ^ 1 is the twin).
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t nodes) : head_(nodes, -1), level_(nodes), iter_(nodes) {}

  void add_arc(std::size_t from, std::size_t to, std::int32_t cap) {
    push(from, to, cap);
    push(to, from, 0);
  }

  std::uint32_t max_flow(std::size_t source, std::size_t sink, std::uint32_t limit) {
    std::uint32_t flow = 0;
    while (flow < limit && bfs(source, sink)) {
      std::copy(head_.begin(), head_.end(), iter_.begin());
      while (flow < limit) {
        std::int32_t pushed = dfs(source, sink, 1);
        if (pushed == 0) break;
        flow += static_cast<std::uint32_t>(pushed);
      }
    }
    return flow;
  }

  // Nodes reachable from `source` in the residual graph.
  std::vector<bool> residual_reachable(std::size_t source) const {
    std::vector<bool> seen(head_.size(), false);
    std::vector<std::size_t> stack{source};
    seen[source] = true;
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (std::int32_t a = head_[x]; a != -1; a = next_[a]) {
        if (cap_[a] > 0 && !seen[to_[a]]) {
          seen[to_[a]] = true;
          stack.push_back(to_[a]);
        }
      }
    }
    return seen;
  }

 private:
  void push(std::size_t from, std::size_t to, std::int32_t cap) {
    to_.push_back(to);
    cap_.push_back(cap);
    next_.push_back(head_[from]);
    head_[from] = static_cast<std::int32_t>(to_.size() - 1);
  }

  bool bfs(std::size_t source, std::size_t sink) {
    std::fill(level_.begin(), level_.end(), -1);
    std::vector<std::size_t> queue{source};
    level_[source] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      std::size_t x = queue[qi];
      for (std::int32_t a = head_[x]; a != -1; a = next_[a]) {
        if (cap_[a] > 0 && level_[to_[a]] < 0) {
          level_[to_[a]] = level_[x] + 1;
          queue.push_back(to_[a]);
        }
      }
    }
    return level_[sink] >= 0;
  }

  std::int32_t dfs(std::size_t x, std::size_t sink, std::int32_t want) {
    if (x == sink) return want;
    for (std::int32_t& a = iter_[x]; a != -1; a = next_[a]) {
      std::size_t y = to_[a];
      if (cap_[a] > 0 && level_[y] == level_[x] + 1) {
        std::int32_t got = dfs(y, sink, std::min(want, cap_[a]));
        if (got > 0) {
          cap_[a] -= got;
          cap_[a ^ 1] += got;
          return got;
        }
      }
    }
    return 0;
  }

  std::vector<std::int32_t> head_;
  std::vector<std::size_t> to_;
  std::vector<std::int32_t> cap_;
  std::vector<std::int32_t> next_;
  std::vector<std::int32_t> level_;
  std::vector<std::int32_t> iter_;
};

std::size_t in_node(Vertex v) { return 2 * static_cast<std::size_t>(v); }
std::size_t out_node(Vertex v) { return 2 * static_cast<std::size_t>(v) + 1; }

// Vertex-split network for the pair (s, t). Source is s_out, sink is t_in.
FlowNetwork split_network(const EdgeSet& g, Vertex s, Vertex t) {
  const std::uint32_t n = g.n();
  const auto big = static_cast<std::int32_t>(n + 1);
  FlowNetwork net(2 * static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    if (v != s && v != t) net.add_arc(in_node(v), out_node(v), 1);
  }
  for (const Edge& e : g) {
    const bool direct = (e.u == s && e.v == t) || (e.u == t && e.v == s);
    if (direct) {
      net.add_arc(out_node(s), in_node(t), 1);
      continue;
    }
    net.add_arc(out_node(e.u), in_node(e.v), big);
    net.add_arc(out_node(e.v), in_node(e.u), big);
  }
  return net;
}

void check_pair(const EdgeSet& g, Vertex s, Vertex t) {
  if (s >= g.n() || t >= g.n()) {
    throw Error(Errc::kInvalidVertex, "vertex out of range for n=" + std::to_string(g.n()));
  }
  if (s == t) throw Error(Errc::kInvalidVertex, "s and t must differ");
}

void require_two_vertices(const EdgeSet& g) {
  if (g.n() < 2) throw Error(Errc::kTooFewVertices, "connectivity needs n >= 2");
}

bool is_complete(const EdgeSet& g) {
  const std::uint64_t n = g.n();
  return g.size() == n * (n - 1) / 2;
}

struct PairMinimum {
  std::uint32_t value;
  std::optional<Edge> pair;  // first non-adjacent pair achieving `value`
};

// Minimum over non-adjacent pairs, with every max-flow capped at the best
// value seen so far. Connectivity never exceeds the minimum degree of a
// non-complete graph, so min_degree + 1 is a safe starting cap.
PairMinimum min_over_nonadjacent_pairs(const EdgeSet& g) {
  const auto deg = g.degrees();
  const std::uint32_t min_degree = *std::min_element(deg.begin(), deg.end());
  PairMinimum best{min_degree + 1, std::nullopt};
  for (Vertex s = 0; s < g.n(); ++s) {
    for (Vertex t = s + 1; t < g.n(); ++t) {
      if (g.contains(s, t)) continue;
      FlowNetwork net = split_network(g, s, t);
      const std::uint32_t f = net.max_flow(out_node(s), in_node(t), best.value);
      if (f < best.value) {
        best = {f, Edge{s, t}};
        if (f == 0) return best;
      }
    }
  }
  return best;
}

}  // namespace

std::uint32_t max_vertex_disjoint_paths(const EdgeSet& g, Vertex s, Vertex t, std::uint32_t cap) {
  check_pair(g, s, t);
  FlowNetwork net = split_network(g, s, t);
  return net.max_flow(out_node(s), in_node(t), cap);
}

std::optional<std::vector<Vertex>> min_st_vertex_cut(const EdgeSet& g, Vertex s, Vertex t) {
  check_pair(g, s, t);
  if (g.contains(s, t)) return std::nullopt;
  FlowNetwork net = split_network(g, s, t);
  net.max_flow(out_node(s), in_node(t), kNoCap);
  const auto reach = net.residual_reachable(out_node(s));
  std::vector<Vertex> cut;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (v == s || v == t) continue;
    if (reach[in_node(v)] && !reach[out_node(v)]) cut.push_back(v);
  }
  return cut;
}

std::uint32_t vertex_connectivity(const EdgeSet& g) {
  require_two_vertices(g);
  if (is_complete(g)) return g.n() - 1;
  return min_over_nonadjacent_pairs(g).value;
}

bool is_k_connected(const EdgeSet& g, std::uint32_t k) {
  if (k == 0) throw Error(Errc::kInvalidArgument, "k must be >= 1");
  require_two_vertices(g);
  if (k > g.n() - 1) return false;
  const auto deg = g.degrees();
  if (*std::min_element(deg.begin(), deg.end()) < k) return false;
  if (is_complete(g)) return true;
  for (Vertex s = 0; s < g.n(); ++s) {
    for (Vertex t = s + 1; t < g.n(); ++t) {
      if (g.contains(s, t)) continue;
      FlowNetwork net = split_network(g, s, t);
      if (net.max_flow(out_node(s), in_node(t), k) < k) return false;
    }
  }
  return true;
}

std::optional<std::vector<Vertex>> find_vertex_cut(const EdgeSet& g, std::uint32_t k) {
  if (k == 0) throw Error(Errc::kInvalidArgument, "k must be >= 1");
  require_two_vertices(g);
  if (is_complete(g)) return std::nullopt;
  const PairMinimum best = min_over_nonadjacent_pairs(g);
  if (best.value >= k || !best.pair) return std::nullopt;
  return min_st_vertex_cut(g, best.pair->u, best.pair->v);
}

bool is_vertex_cut(const EdgeSet& g, const std::vector<Vertex>& removed) {
  std::vector<bool> gone(g.n(), false);
  for (Vertex v : removed) {
    if (v >= g.n()) throw Error(Errc::kInvalidVertex, "cut vertex out of range");
    gone[v] = true;
  }
  const auto adj = g.adjacency();
  std::vector<bool> seen(g.n(), false);
  std::size_t remaining = 0;
  std::optional<Vertex> start;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (gone[v]) continue;
    ++remaining;
    if (!start) start = v;
  }
  if (remaining < 2) return false;
  std::vector<Vertex> stack{*start};
  seen[*start] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : adj[x]) {
      if (!gone[y] && !seen[y]) {
        seen[y] = true;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached < remaining;
}

bool has_k_connected_subgraph(const EdgeSet& g, std::uint32_t k) {
  if (k == 0) throw Error(Errc::kInvalidArgument, "k must be >= 1");
  const std::uint32_t n = g.n();
  if (n > kSubgraphSearchMaxN) {
    throw Error(Errc::kTooLarge, "subgraph search limited to n <= " +
                                     std::to_string(kSubgraphSearchMaxN));
  }
  std::vector<std::uint32_t> nbr(n, 0);
  for (const Edge& e : g) {
    nbr[e.u] |= 1u << e.v;
    nbr[e.v] |= 1u << e.u;
  }
  // A k-connected subgraph has minimum degree >= k, so it lives in the k-core.
  std::uint32_t core = n == 0 ? 0 : (n == 32 ? ~0u : (1u << n) - 1);
  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex v = 0; v < n; ++v) {
      if ((core >> v & 1) && static_cast<std::uint32_t>(std::popcount(nbr[v] & core)) < k) {
        core &= ~(1u << v);
        changed = true;
      }
    }
  }
  const int min_size = static_cast<int>(std::max<std::uint32_t>(k + 1, 2));
  if (std::popcount(core) < min_size) return false;

  // Walk submasks of the core, largest masks first.
  for (std::uint32_t mask = core;; mask = (mask - 1) & core) {
    if (std::popcount(mask) >= min_size) {
      bool degree_ok = true;
      for (Vertex v = 0; v < n && degree_ok; ++v) {
        if ((mask >> v & 1) && static_cast<std::uint32_t>(std::popcount(nbr[v] & mask)) < k) {
          degree_ok = false;
        }
      }
      if (degree_ok) {
        std::vector<Vertex> local(n, 0);
        std::uint32_t size = 0;
        for (Vertex v = 0; v < n; ++v) {
          if (mask >> v & 1) local[v] = size++;
        }
        EdgeSet sub(size);
        for (const Edge& e : g) {
          if ((mask >> e.u & 1) && (mask >> e.v & 1)) sub.insert(local[e.u], local[e.v]);
        }
        if (is_k_connected(sub, k)) return true;
      }
    }
    if (mask == 0) break;
  }
  return false;
}

}  // namespace kvconn
