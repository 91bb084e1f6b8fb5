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

#include "kvconn/instances.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <string>

#include "kvconn/error.hpp"
#include "kvconn/oracle.hpp"
#include "kvconn/random.hpp"

namespace kvconn {

void DisjointnessInstance::validate() const {
  if (k < 1 || 2 * std::uint64_t{k} > n) {
    throw Error(Errc::kBadShape, "disjointness needs 1 <= k <= n/2");
  }
  if (x.size() != bits() || y.size() != bits()) {
    throw Error(Errc::kBadShape, "x and y must have k*(n-k) = " + std::to_string(bits()) +
                                     " bits");
  }
}

bool DisjointnessInstance::intersects() const {
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (x[i] && y[i]) return true;
  }
  return false;
}

std::vector<UpdateEvent> TwoPartyStream::concatenated() const {
  std::vector<UpdateEvent> all = alice;
  all.insert(all.end(), bob.begin(), bob.end());
  return all;
}

TwoPartyStream gen_disjointness(const DisjointnessInstance& inst) {
  inst.validate();
  TwoPartyStream out;
  const std::uint32_t right = inst.n - inst.k;
  for (std::uint32_t i = 0; i < inst.k; ++i) {
    for (std::uint32_t j = 0; j < right; ++j) {
      const std::size_t bit = std::size_t{i} * right + j;
      const UpdateEvent e{i, inst.k + j, +1};
      if (!inst.x[bit]) out.alice.push_back(e);
      if (!inst.y[bit]) out.bob.push_back(e);
    }
  }
  return out;
}

DisjointnessInstance random_disjointness(std::uint32_t n, std::uint32_t k, std::uint64_t seed,
                                         bool intersecting) {
  DisjointnessInstance inst{n, k, {}, {}};
  if (k < 1 || 2 * std::uint64_t{k} > n) {
    throw Error(Errc::kBadShape, "disjointness needs 1 <= k <= n/2");
  }
  Rng rng(seed);
  const std::size_t bits = inst.bits();
  inst.x.assign(bits, 0);
  inst.y.assign(bits, 0);
  // Each position independently: neither, x only, or y only.
  for (std::size_t b = 0; b < bits; ++b) {
    switch (rng.below(3)) {
      case 1: inst.x[b] = 1; break;
      case 2: inst.y[b] = 1; break;
      default: break;
    }
  }
  if (intersecting) {
    const std::size_t b = rng.below(bits);
    inst.x[b] = 1;
    inst.y[b] = 1;
  }
  return inst;
}

PlantedCut gen_planted_cut(std::uint32_t n, std::uint32_t k, std::uint64_t seed,
                           double density) {
  if (k < 1) throw Error(Errc::kInvalidArgument, "k must be >= 1");
  if (n < k + 2) throw Error(Errc::kTooSmall, "planted cut needs n >= k + 2");
  if (!(density > 0.0 && density <= 1.0)) {
    throw Error(Errc::kInvalidArgument, "density must lie in (0, 1]");
  }
  const std::uint32_t cut_size = k - 1;
  const std::uint32_t rest = n - cut_size;
  constexpr int kAttempts = 32;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Rng rng(derive_seed(seed, "planted", static_cast<std::uint64_t>(attempt)));
    // Later attempts move toward full cliques, which always succeed.
    const double p = attempt + 1 == kAttempts
                         ? 1.0
                         : density + (1.0 - density) * attempt / static_cast<double>(kAttempts);
    std::vector<Vertex> labels(n);
    std::iota(labels.begin(), labels.end(), Vertex{0});
    rng.shuffle(labels);
    const auto s_size = static_cast<std::uint32_t>(rng.between(
        std::max<std::int64_t>(1, rest / 4), std::max<std::int64_t>(1, rest - rest / 4 - 1)));
    PlantedCut out;
    out.graph = EdgeSet(n);
    out.cut.assign(labels.begin(), labels.begin() + cut_size);
    out.side_s.assign(labels.begin() + cut_size, labels.begin() + cut_size + s_size);
    out.side_t.assign(labels.begin() + cut_size + s_size, labels.end());
    auto dense_block = [&](const std::vector<Vertex>& side) {
      std::vector<Vertex> block = side;
      block.insert(block.end(), out.cut.begin(), out.cut.end());
      for (std::size_t a = 0; a < block.size(); ++a) {
        for (std::size_t b = a + 1; b < block.size(); ++b) {
          if (rng.bernoulli(p)) out.graph.insert(block[a], block[b]);
        }
      }
    };
    dense_block(out.side_s);
    dense_block(out.side_t);
    std::sort(out.cut.begin(), out.cut.end());
    std::sort(out.side_s.begin(), out.side_s.end());
    std::sort(out.side_t.begin(), out.side_t.end());
    if (n > 60 || vertex_connectivity(out.graph) == cut_size) return out;
  }
  throw Error(Errc::kInvalidArgument, "planted cut generation did not converge");
}

EdgeSet with_cross_edges(const PlantedCut& planted, std::uint32_t count, std::uint64_t seed) {
  EdgeSet g = planted.graph;
  const std::uint64_t possible =
      std::uint64_t{planted.side_s.size()} * planted.side_t.size();
  if (count > possible) throw Error(Errc::kInvalidArgument, "not enough S-T pairs");
  Rng rng(seed);
  std::uint32_t added = 0;
  while (added < count) {
    const Vertex a = planted.side_s[rng.below(planted.side_s.size())];
    const Vertex b = planted.side_t[rng.below(planted.side_t.size())];
    if (g.insert(a, b)) ++added;
  }
  return g;
}

std::vector<UpdateEvent> gen_random_stream(std::uint32_t n, double target_density,
                                           double delete_fraction, std::uint64_t seed) {
  if (!(target_density >= 0.0 && target_density <= 1.0) ||
      !(delete_fraction >= 0.0 && delete_fraction <= 1.0)) {
    throw Error(Errc::kInvalidArgument, "fractions must lie in [0, 1]");
  }
  constexpr double kParallelCopy = 0.1;
  Rng rng(seed);
  struct Timed {
    double at;
    UpdateEvent e;
  };
  std::vector<Timed> timeline;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!rng.bernoulli(target_density)) continue;
      const int copies = rng.bernoulli(kParallelCopy) ? 2 : 1;
      for (int c = 0; c < copies; ++c) {
        const bool flip = rng.bernoulli(0.5);
        const UpdateEvent ins{flip ? v : u, flip ? u : v, +1};
        const double at = rng.uniform01();
        timeline.push_back({at, ins});
        if (rng.bernoulli(delete_fraction)) {
          // Strictly after the matching insertion.
          const double later = at + (1.0 - at) * (0.5 + 0.5 * rng.uniform01());
          timeline.push_back({later, UpdateEvent{ins.u, ins.v, -1}});
        }
      }
    }
  }
  std::stable_sort(timeline.begin(), timeline.end(),
                   [](const Timed& a, const Timed& b) { return a.at < b.at; });
  std::vector<UpdateEvent> events;
  events.reserve(timeline.size());
  for (const Timed& t : timeline) events.push_back(t.e);
  return events;
}

EdgeSet random_graph(std::uint32_t n, double p, std::uint64_t seed) {
  Rng rng(seed);
  EdgeSet g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) g.insert(u, v);
    }
  }
  return g;
}

EdgeSet random_graph_with_edges(std::uint32_t n, std::uint64_t m, std::uint64_t seed) {
  std::vector<Edge> all;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) all.push_back({u, v});
  }
  if (m > all.size()) throw Error(Errc::kInvalidArgument, "too many edges requested");
  Rng rng(seed);
  rng.shuffle(all);
  EdgeSet g(n);
  for (std::uint64_t i = 0; i < m; ++i) g.insert(all[i]);
  return g;
}

std::vector<UpdateEvent> insertion_stream(const EdgeSet& g, std::uint64_t seed) {
  std::vector<UpdateEvent> events;
  events.reserve(g.size());
  for (const Edge& e : g) events.push_back({e.u, e.v, +1});
  Rng rng(seed);
  rng.shuffle(events);
  return events;
}

namespace {

std::uint32_t parse_count(std::string_view text, std::string_view name) {
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(Errc::kInvalidArgument,
                "bad argument '" + std::string(text) + "' for " + std::string(name));
  }
  return value;
}

}  // namespace

EdgeSet gen_named(std::string_view name) {
  std::string_view base = name;
  std::vector<std::uint32_t> args;
  if (auto open = name.find('('); open != std::string_view::npos) {
    if (name.back() != ')') throw Error(Errc::kUnknownName, "malformed name " + std::string(name));
    base = name.substr(0, open);
    std::string_view inner = name.substr(open + 1, name.size() - open - 2);
    while (!inner.empty()) {
      const auto comma = inner.find(',');
      args.push_back(parse_count(inner.substr(0, comma), base));
      inner = comma == std::string_view::npos ? std::string_view{} : inner.substr(comma + 1);
    }
  }
  auto want = [&](std::size_t count, std::uint32_t minimum) {
    if (args.size() != count) {
      throw Error(Errc::kInvalidArgument, std::string(base) + " takes " + std::to_string(count) +
                                              " argument(s)");
    }
    for (auto a : args) {
      if (a < minimum) {
        throw Error(Errc::kInvalidArgument, std::string(base) + " argument below " +
                                                std::to_string(minimum));
      }
    }
  };

  if (base == "complete") {
    want(1, 1);
    EdgeSet g(args[0]);
    for (Vertex u = 0; u < args[0]; ++u) {
      for (Vertex v = u + 1; v < args[0]; ++v) g.insert(u, v);
    }
    return g;
  }
  if (base == "cycle") {
    want(1, 3);
    EdgeSet g(args[0]);
    for (Vertex v = 0; v < args[0]; ++v) g.insert(v, (v + 1) % args[0]);
    return g;
  }
  if (base == "path") {
    want(1, 1);
    EdgeSet g(args[0]);
    for (Vertex v = 0; v + 1 < args[0]; ++v) g.insert(v, v + 1);
    return g;
  }
  if (base == "star") {
    want(1, 2);
    EdgeSet g(args[0]);
    for (Vertex v = 1; v < args[0]; ++v) g.insert(0, v);
    return g;
  }
  if (base == "petersen") {
    want(0, 0);
    EdgeSet g(10);
    for (Vertex i = 0; i < 5; ++i) {
      g.insert(i, (i + 1) % 5);
      g.insert(i, i + 5);
      g.insert(i + 5, (i + 2) % 5 + 5);
    }
    return g;
  }
  if (base == "hypercube") {
    want(1, 1);
    if (args[0] > 20) throw Error(Errc::kInvalidArgument, "hypercube dimension too large");
    const std::uint32_t n = 1u << args[0];
    EdgeSet g(n);
    for (Vertex v = 0; v < n; ++v) {
      for (std::uint32_t b = 0; b < args[0]; ++b) {
        const Vertex w = v ^ (1u << b);
        if (v < w) g.insert(v, w);
      }
    }
    return g;
  }
  if (base == "complete_bipartite") {
    want(2, 1);
    EdgeSet g(args[0] + args[1]);
    for (Vertex a = 0; a < args[0]; ++a) {
      for (Vertex b = 0; b < args[1]; ++b) g.insert(a, args[0] + b);
    }
    return g;
  }
  throw Error(Errc::kUnknownName, "unknown graph name '" + std::string(name) + "'");
}

}  // namespace kvconn
