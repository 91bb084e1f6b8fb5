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

#include "kvconn/graph.hpp"

#include <string>

#include "kvconn/error.hpp"

namespace kvconn {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::kInvalidArgument: return "InvalidArgument";
    case Errc::kSelfLoop: return "SelfLoop";
    case Errc::kInvalidVertex: return "InvalidVertex";
    case Errc::kNegativeMultiplicity: return "NegativeMultiplicity";
    case Errc::kBadDelta: return "BadDelta";
    case Errc::kIndexOutOfRange: return "IndexOutOfRange";
    case Errc::kSeedMismatch: return "SeedMismatch";
    case Errc::kTooFewVertices: return "TooFewVertices";
    case Errc::kTooLarge: return "TooLarge";
    case Errc::kTooSmall: return "TooSmall";
    case Errc::kBadShape: return "BadShape";
    case Errc::kUnknownName: return "UnknownName";
    case Errc::kSpaceExceeded: return "SpaceExceeded";
    case Errc::kInsertionOnlyViolation: return "InsertionOnlyViolation";
    case Errc::kBadN: return "BadN";
    case Errc::kParse: return "Parse";
    case Errc::kIo: return "Io";
  }
  return "Unknown";
}

void validate_event(const UpdateEvent& e, std::uint32_t n) {
  if (e.u == e.v) {
    throw Error(Errc::kSelfLoop, "self-loop on vertex " + std::to_string(e.u));
  }
  if (e.u >= n || e.v >= n) {
    throw Error(Errc::kInvalidVertex, "endpoint out of range for n=" + std::to_string(n));
  }
  if (e.delta != 1 && e.delta != -1) {
    throw Error(Errc::kInvalidArgument, "delta must be +1 or -1, got " + std::to_string(e.delta));
  }
}

Edge make_edge(Vertex a, Vertex b) {
  if (a == b) throw Error(Errc::kSelfLoop, "self-loop on vertex " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

bool EdgeSet::insert(Vertex a, Vertex b) {
  if (a >= n_ || b >= n_) throw Error(Errc::kInvalidVertex, "edge endpoint out of range");
  return edges_.insert(make_edge(a, b)).second;
}

bool EdgeSet::erase(Vertex a, Vertex b) {
  if (a == b) return false;
  return edges_.erase(make_edge(a, b)) > 0;
}

bool EdgeSet::contains(Vertex a, Vertex b) const {
  if (a == b) return false;
  return edges_.contains(make_edge(a, b));
}

std::vector<std::vector<Vertex>> EdgeSet::adjacency() const {
  std::vector<std::vector<Vertex>> adj(n_);
  for (const Edge& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

std::vector<std::uint32_t> EdgeSet::degrees() const {
  std::vector<std::uint32_t> deg(n_, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

void MultiGraph::apply(const UpdateEvent& e) {
  validate_event(e, n_);
  const Edge key = make_edge(e.u, e.v);
  auto it = mult_.find(key);
  if (e.delta > 0) {
    if (it == mult_.end()) {
      mult_.emplace(key, 1);
    } else {
      ++it->second;
    }
    return;
  }
  if (it == mult_.end()) {
    throw Error(Errc::kNegativeMultiplicity,
                "deletion of absent edge {" + std::to_string(key.u) + "," +
                    std::to_string(key.v) + "}");
  }
  if (--it->second == 0) mult_.erase(it);
}

std::uint64_t MultiGraph::multiplicity(Vertex a, Vertex b) const {
  if (a == b) return 0;
  auto it = mult_.find(make_edge(a, b));
  return it == mult_.end() ? 0 : it->second;
}

MultiGraph replay_stream(std::span<const UpdateEvent> events, std::uint32_t n) {
  MultiGraph g(n);
  for (std::size_t i = 0; i < events.size(); ++i) {
    try {
      g.apply(events[i]);
    } catch (const Error& err) {
      throw Error(err.code(), "event " + std::to_string(i) + ": " + err.what());
    }
  }
  return g;
}

EdgeSet support(const MultiGraph& g) {
  EdgeSet out(g.n());
  for (const auto& [edge, m] : g.pairs()) out.insert(edge);
  return out;
}

EdgeSet induced_subgraph(const EdgeSet& g, const std::vector<bool>& member) {
  EdgeSet out(g.n());
  for (const Edge& e : g) {
    if (member[e.u] && member[e.v]) out.insert(e);
  }
  return out;
}

}  // namespace kvconn
