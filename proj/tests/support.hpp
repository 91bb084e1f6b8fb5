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

// Independent reference implementations used as test oracles. None of this
// touches the max-flow code: everything is subset enumeration and BFS.

#ifndef KVCONN_TESTS_SUPPORT_HPP_
#define KVCONN_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "kvconn/graph.hpp"
#include "kvconn/random.hpp"

namespace kvconn::testing {

using Partition = std::vector<std::uint32_t>;  // vertex -> smallest vertex of its class

// Components of g restricted to vertices with alive[v]; dead vertices map to
// themselves.
inline Partition bfs_partition(const EdgeSet& g, const std::vector<bool>& alive) {
  const auto adj = g.adjacency();
  Partition label(g.n());
  std::vector<bool> seen(g.n(), false);
  for (Vertex s = 0; s < g.n(); ++s) label[s] = s;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (!alive[s] || seen[s]) continue;
    std::vector<Vertex> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      label[u] = s;
      for (Vertex w : adj[u]) {
        if (alive[w] && !seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return label;
}

inline Partition bfs_partition(const EdgeSet& g) {
  return bfs_partition(g, std::vector<bool>(g.n(), true));
}

// True iff removing the vertices in `mask` leaves a disconnected graph with
// at least two vertices.
inline bool mask_disconnects(const EdgeSet& g, std::uint32_t mask) {
  std::vector<bool> alive(g.n());
  std::uint32_t remaining = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    alive[v] = !(mask >> v & 1u);
    remaining += alive[v] ? 1 : 0;
  }
  if (remaining < 2) return false;
  const Partition p = bfs_partition(g, alive);
  Vertex first = g.n();
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!alive[v]) continue;
    if (first == g.n()) first = p[v];
    if (p[v] != first) return true;
  }
  return false;
}

// Smallest vertex set whose removal disconnects g; n - 1 if none exists.
inline std::uint32_t brute_connectivity(const EdgeSet& g) {
  std::uint32_t best = g.n() - 1;
  for (std::uint32_t mask = 0; mask < (1u << g.n()); ++mask) {
    const auto size = static_cast<std::uint32_t>(std::popcount(mask));
    if (size < best && mask_disconnects(g, mask)) best = size;
  }
  return best;
}

// Smallest X (s, t not in X) separating non-adjacent s and t.
inline std::uint32_t brute_st_separator(const EdgeSet& g, Vertex s, Vertex t) {
  std::uint32_t best = g.n();
  for (std::uint32_t mask = 0; mask < (1u << g.n()); ++mask) {
    if ((mask >> s & 1u) || (mask >> t & 1u)) continue;
    const auto size = static_cast<std::uint32_t>(std::popcount(mask));
    if (size >= best) continue;
    std::vector<bool> alive(g.n());
    for (Vertex v = 0; v < g.n(); ++v) alive[v] = !(mask >> v & 1u);
    const Partition p = bfs_partition(g, alive);
    if (p[s] != p[t]) best = size;
  }
  return best;
}

// Largest family of internally vertex-disjoint simple s-t paths, found by
// enumerating all simple paths and searching over families. Tiny graphs only.
inline std::uint32_t brute_disjoint_paths(const EdgeSet& g, Vertex s, Vertex t) {
  const auto adj = g.adjacency();
  std::vector<std::uint32_t> interiors;  // bitmask of interior vertices per path
  std::vector<bool> on_path(g.n(), false);
  std::function<void(Vertex, std::uint32_t)> walk = [&](Vertex u, std::uint32_t interior) {
    for (Vertex w : adj[u]) {
      if (w == t) {
        interiors.push_back(interior);
        continue;
      }
      if (on_path[w] || w == s) continue;
      on_path[w] = true;
      walk(w, interior | (1u << w));
      on_path[w] = false;
    }
  };
  on_path[s] = true;
  walk(s, 0);
  std::sort(interiors.begin(), interiors.end());
  interiors.erase(std::unique(interiors.begin(), interiors.end()), interiors.end());
  std::uint32_t best = 0;
  std::function<void(std::size_t, std::uint32_t, std::uint32_t)> pick =
      [&](std::size_t from, std::uint32_t used, std::uint32_t count) {
        best = std::max(best, count);
        for (std::size_t i = from; i < interiors.size(); ++i) {
          // The direct edge has an empty interior and may be used once.
          if ((interiors[i] & used) == 0) pick(i + 1, used | interiors[i], count + 1);
        }
      };
  pick(0, 0, 0);
  return best;
}

inline std::uint32_t min_degree(const EdgeSet& g) {
  const auto d = g.degrees();
  return d.empty() ? 0 : *std::min_element(d.begin(), d.end());
}

// A uniformly shuffled order of `events` repaired so that every prefix keeps
// multiplicities non-negative: deletions that would go negative wait until
// their pair has been inserted.
inline std::vector<UpdateEvent> legal_shuffle(std::vector<UpdateEvent> events, Rng& rng) {
  rng.shuffle(events);
  std::vector<UpdateEvent> out;
  std::map<Edge, std::int64_t> mult;
  std::map<Edge, std::int64_t> waiting;
  for (const UpdateEvent& e : events) {
    const Edge key = make_edge(e.u, e.v);
    if (e.delta > 0) {
      out.push_back(e);
      ++mult[key];
      for (; waiting[key] > 0 && mult[key] > 0; --waiting[key], --mult[key]) {
        out.push_back({e.u, e.v, -1});
      }
    } else if (mult[key] > 0) {
      out.push_back(e);
      --mult[key];
    } else {
      ++waiting[key];
    }
  }
  return out;
}

// Inserts `pairs` insert/delete pairs on random vertex pairs at random
// positions, each deletion after its insertion.
inline std::vector<UpdateEvent> with_cancel_pairs(std::vector<UpdateEvent> events,
                                                  std::uint32_t n, std::uint32_t pairs,
                                                  Rng& rng) {
  for (std::uint32_t p = 0; p < pairs; ++p) {
    Vertex u = static_cast<Vertex>(rng.below(n));
    Vertex v = static_cast<Vertex>(rng.below(n - 1));
    if (v >= u) ++v;
    const std::size_t i = rng.below(events.size() + 1);
    events.insert(events.begin() + static_cast<std::ptrdiff_t>(i), UpdateEvent{u, v, +1});
    const std::size_t j = i + 1 + rng.below(events.size() - i);
    events.insert(events.begin() + static_cast<std::ptrdiff_t>(j), UpdateEvent{u, v, -1});
  }
  return events;
}

inline bool is_acyclic(const EdgeSet& f) {
  std::vector<std::uint32_t> parent(f.n());
  for (std::uint32_t i = 0; i < f.n(); ++i) parent[i] = i;
  std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const Edge& e : f) {
    const auto a = find(e.u), b = find(e.v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

inline bool is_subgraph(const EdgeSet& h, const EdgeSet& g) {
  return std::all_of(h.begin(), h.end(), [&](const Edge& e) { return g.contains(e.u, e.v); });
}

}  // namespace kvconn::testing

#endif  // KVCONN_TESTS_SUPPORT_HPP_
