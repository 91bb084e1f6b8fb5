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

#ifndef KVCONN_GRAPH_HPP_
#define KVCONN_GRAPH_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <vector>

namespace kvconn {

using Vertex = std::uint32_t;

// One dynamic-stream tuple: add `delta` copies of edge {u, v}.
struct UpdateEvent {
  Vertex u = 0;
  Vertex v = 0;
  int delta = +1;

  friend bool operator==(const UpdateEvent&, const UpdateEvent&) = default;
};

// Throws SelfLoop / InvalidVertex / InvalidArgument for a malformed event.
void validate_event(const UpdateEvent& e, std::uint32_t n);

// Unordered vertex pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Normalizes the endpoint order. Throws SelfLoop when a == b.
Edge make_edge(Vertex a, Vertex b);

// Simple undirected graph on vertices 0..n-1.
class EdgeSet {
 public:
  using const_iterator = std::set<Edge>::const_iterator;

  EdgeSet() = default;
  explicit EdgeSet(std::uint32_t n) : n_(n) {}

  std::uint32_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }

  // Returns true when the edge was not already present.
  bool insert(Vertex a, Vertex b);
  bool insert(const Edge& e) { return insert(e.u, e.v); }
  bool erase(Vertex a, Vertex b);
  bool contains(Vertex a, Vertex b) const;

  const_iterator begin() const { return edges_.begin(); }
  const_iterator end() const { return edges_.end(); }

  std::vector<std::vector<Vertex>> adjacency() const;
  std::vector<std::uint32_t> degrees() const;

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  std::uint32_t n_ = 0;
  std::set<Edge> edges_;
};

// Multigraph defined by a dynamic stream; absent pairs have multiplicity 0.
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(std::uint32_t n) : n_(n) {}

  std::uint32_t n() const noexcept { return n_; }

  // Throws NegativeMultiplicity if the event would drive a pair below zero;
  // the graph is left unchanged in that case.
  void apply(const UpdateEvent& e);

  std::uint64_t multiplicity(Vertex a, Vertex b) const;
  const std::map<Edge, std::uint64_t>& pairs() const noexcept { return mult_; }

  friend bool operator==(const MultiGraph&, const MultiGraph&) = default;

 private:
  std::uint32_t n_ = 0;
  std::map<Edge, std::uint64_t> mult_;
};

MultiGraph replay_stream(std::span<const UpdateEvent> events, std::uint32_t n);

EdgeSet support(const MultiGraph& g);

// Subgraph of `g` induced by the vertices flagged in `member` (same n).
EdgeSet induced_subgraph(const EdgeSet& g, const std::vector<bool>& member);

}  // namespace kvconn

#endif  // KVCONN_GRAPH_HPP_
