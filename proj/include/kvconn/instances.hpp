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

// Seeded graph and stream generators. Every generator is a pure function of
// its arguments.

#ifndef KVCONN_INSTANCES_HPP_
#define KVCONN_INSTANCES_HPP_

#include <cstdint>
#include <string_view>
#include <vector>

#include "kvconn/graph.hpp"

namespace kvconn {

// Two-party set-disjointness input laid out on a k x (n - k) grid:
// bit (i, j) lives at index i * (n - k) + j.
struct DisjointnessInstance {
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::vector<std::uint8_t> x;
  std::vector<std::uint8_t> y;

  std::size_t bits() const { return std::size_t{k} * (n - k); }
  void validate() const;  // BadShape
  bool intersects() const;
};

struct TwoPartyStream {
  std::vector<UpdateEvent> alice;
  std::vector<UpdateEvent> bob;

  // Alice's events first, then Bob's.
  std::vector<UpdateEvent> concatenated() const;
};

// Bipartite multigraph on L = {0..k-1} (u_i = i) and R = {k..n-1}
// (v_j = k + j). Alice inserts (u_i, v_j) iff x_ij = 0 and Bob iff y_ij = 0.
// The result is k-connected iff x and y are disjoint.
TwoPartyStream gen_disjointness(const DisjointnessInstance& inst);

// Random instance; when `intersecting` exactly one common position is set,
// otherwise x and y are disjoint.
DisjointnessInstance random_disjointness(std::uint32_t n, std::uint32_t k, std::uint64_t seed,
                                         bool intersecting);

struct PlantedCut {
  EdgeSet graph;
  std::vector<Vertex> cut;  // X, sorted
  std::vector<Vertex> side_s;
  std::vector<Vertex> side_t;
};

// Vertices are split into S, X, T with |X| = k - 1 and no S-T edges; S u X
// and T u X are dense random graphs. Connectivity is exactly k - 1 with X a
// minimum cut (oracle-checked for n <= 60). Throws TooSmall if n < k + 2.
PlantedCut gen_planted_cut(std::uint32_t n, std::uint32_t k, std::uint64_t seed,
                           double density = 0.85);

// Copy of the planted graph with `count` random S-T edges added.
EdgeSet with_cross_edges(const PlantedCut& planted, std::uint32_t count, std::uint64_t seed);

// Legal dynamic stream whose final graph keeps each pair with probability
// density * (1 - delete_fraction): every pair is inserted with probability
// `density` (occasionally twice), each inserted copy is deleted later with
// probability `delete_fraction`, and deletions interleave with insertions.
std::vector<UpdateEvent> gen_random_stream(std::uint32_t n, double target_density,
                                           double delete_fraction, std::uint64_t seed);

// Erdos-Renyi G(n, p).
EdgeSet random_graph(std::uint32_t n, double p, std::uint64_t seed);

// Uniform graph on n vertices with exactly m edges.
EdgeSet random_graph_with_edges(std::uint32_t n, std::uint64_t m, std::uint64_t seed);

// One +1 event per edge, in a seeded random order.
std::vector<UpdateEvent> insertion_stream(const EdgeSet& g, std::uint64_t seed);

// complete(n), cycle(n), path(n), star(n), petersen, hypercube(d),
// complete_bipartite(a,b). Throws UnknownName.
EdgeSet gen_named(std::string_view name);

}  // namespace kvconn

#endif  // KVCONN_INSTANCES_HPP_
