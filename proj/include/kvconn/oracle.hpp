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

// Exact vertex-connectivity computations.
//
// Everything here runs unit-capacity max-flow (BFS level phases with
// blocking flows) on the vertex-split network: each vertex v becomes
// v_in -> v_out with capacity 1, each undirected edge {a, b} becomes
// a_out -> b_in and b_out -> a_in with effectively infinite capacity, and a
// direct s-t edge is a single arc s_out -> t_in of capacity 1. Multigraphs
// must be collapsed with support() first; parallel edges never add
// vertex-disjoint paths.
//
// Conventions: a graph with n < 2 has no defined connectivity
// (TooFewVertices); the complete graph K_n has connectivity n - 1; asking
// for k > n - 1 answers false.

#ifndef KVCONN_ORACLE_HPP_
#define KVCONN_ORACLE_HPP_

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "kvconn/graph.hpp"

namespace kvconn {

inline constexpr std::uint32_t kNoCap = std::numeric_limits<std::uint32_t>::max();

// Maximum number of internally vertex-disjoint s-t paths, counting a direct
// edge as one path. Stops early once `cap` paths are found.
std::uint32_t max_vertex_disjoint_paths(const EdgeSet& g, Vertex s, Vertex t,
                                        std::uint32_t cap = kNoCap);

// Minimum s-t vertex separator for non-adjacent s, t (sorted). Returns
// nullopt when s and t are adjacent.
std::optional<std::vector<Vertex>> min_st_vertex_cut(const EdgeSet& g, Vertex s, Vertex t);

std::uint32_t vertex_connectivity(const EdgeSet& g);

bool is_k_connected(const EdgeSet& g, std::uint32_t k);

// A minimum vertex cut (|X| = connectivity) when connectivity < k, taken
// from the lexicographically first non-adjacent pair achieving the
// minimum. Disconnected graphs yield an empty cut. Complete graphs have no
// vertex cut and yield nullopt for every k.
std::optional<std::vector<Vertex>> find_vertex_cut(const EdgeSet& g, std::uint32_t k);

// True iff `g` - `removed` leaves at least two vertices that are not all in
// one component. Convenience for verifying cuts.
bool is_vertex_cut(const EdgeSet& g, const std::vector<Vertex>& removed);

inline constexpr std::uint32_t kSubgraphSearchMaxN = 12;

// Exhaustive search for a k-vertex-connected induced subgraph on at least
// max(k + 1, 2) vertices. Throws TooLarge for n > kSubgraphSearchMaxN.
bool has_k_connected_subgraph(const EdgeSet& g, std::uint32_t k);

}  // namespace kvconn

#endif  // KVCONN_ORACLE_HPP_
