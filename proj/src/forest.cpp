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

#include "kvconn/forest.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

#include "kvconn/error.hpp"
#include "kvconn/random.hpp"
#include "kvconn/union_find.hpp"

namespace kvconn {
namespace {

std::uint64_t row_start(std::uint64_t u, std::uint64_t n) { return u * n - u * (u + 1) / 2; }

}  // namespace

std::uint64_t pair_universe(std::uint32_t n) {
  const std::uint64_t pairs = std::uint64_t{n} * (n == 0 ? 0 : n - 1) / 2;
  return std::max<std::uint64_t>(pairs, 1);
}

std::uint64_t pair_index(Vertex u, Vertex v, std::uint32_t n) {
  if (u >= v || v >= n) throw Error(Errc::kInvalidVertex, "pair_index needs u < v < n");
  return row_start(u, n) + (v - u - 1);
}

Edge pair_from_index(std::uint64_t id, std::uint32_t n) {
  if (n < 2 || id >= std::uint64_t{n} * (n - 1) / 2) {
    throw Error(Errc::kIndexOutOfRange, "pair index out of range");
  }
  // Largest u with row_start(u) <= id.
  std::uint64_t lo = 0, hi = n - 2;
  while (lo < hi) {
    std::uint64_t mid = (lo + hi + 1) / 2;
    if (row_start(mid, n) <= id) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  const auto u = static_cast<Vertex>(lo);
  const auto v = static_cast<Vertex>(id - row_start(lo, n) + lo + 1);
  return {u, v};
}

std::uint32_t boruvka_rounds(std::uint32_t n) {
  const auto ceil_log2 = n <= 1 ? 0u : static_cast<std::uint32_t>(std::bit_width(n - 1));
  return ceil_log2 + 1;
}

ForestSketchBank::ForestSketchBank(std::uint32_t n, std::vector<Vertex> members, double delta,
                                   std::uint64_t seed, MembershipMode mode,
                                   double repetition_constant)
    : n_(n),
      members_(std::move(members)),
      mode_(mode),
      rounds_(boruvka_rounds(n)),
      seed_(seed) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.back() >= n) {
    throw Error(Errc::kInvalidVertex, "bank member outside 0..n-1");
  }
  if (mode_ == MembershipMode::kExplicit) {
    member_bits_.assign(n, false);
    for (Vertex v : members_) member_bits_[v] = true;
  }
  const std::uint64_t universe = pair_universe(n);
  // Validate delta even for empty banks.
  L0Sketch::repetition_count(delta, repetition_constant);
  sketches_.reserve(members_.size() * rounds_);
  for (std::size_t slot = 0; slot < members_.size(); ++slot) {
    for (std::uint32_t r = 0; r < rounds_; ++r) {
      sketches_.emplace_back(universe, delta, derive_seed(seed_, "round", r),
                             repetition_constant);
    }
  }
}

std::uint64_t ForestSketchBank::projected_bytes(std::uint32_t n, std::size_t member_count,
                                                double delta, MembershipMode mode,
                                                double repetition_constant) {
  const std::uint64_t per_sketch =
      L0Sketch::serialized_size(L0Sketch::level_count(pair_universe(n)),
                                L0Sketch::repetition_count(delta, repetition_constant));
  const std::uint64_t bits = mode == MembershipMode::kExplicit ? (std::uint64_t{n} + 7) / 8 : 0;
  return per_sketch * member_count * boruvka_rounds(n) + bits;
}

std::size_t ForestSketchBank::slot_of(Vertex v) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it == members_.end() || *it != v) return members_.size();
  return static_cast<std::size_t>(it - members_.begin());
}

bool ForestSketchBank::contains(Vertex v) const {
  if (v >= n_) return false;
  if (mode_ == MembershipMode::kExplicit) return member_bits_[v];
  return slot_of(v) != members_.size();
}

void ForestSketchBank::update(const UpdateEvent& e) {
  validate_event(e, n_);
  if (!contains(e.u) || !contains(e.v)) return;
  const Edge edge = make_edge(e.u, e.v);
  const std::uint64_t id = pair_index(edge.u, edge.v, n_);
  const std::size_t lo = slot_of(edge.u);
  const std::size_t hi = slot_of(edge.v);
  for (std::uint32_t r = 0; r < rounds_; ++r) {
    sketch_at(lo, r).update(id, e.delta);
    sketch_at(hi, r).update(id, -e.delta);
  }
}

const L0Sketch& ForestSketchBank::sketch(Vertex v, std::uint32_t round) const {
  const std::size_t slot = slot_of(v);
  if (slot == members_.size() || round >= rounds_) {
    throw Error(Errc::kInvalidVertex, "no sketch for vertex " + std::to_string(v));
  }
  return sketch_at(slot, round);
}

std::uint64_t ForestSketchBank::sketch_bytes() const {
  std::uint64_t total = 0;
  for (const L0Sketch& s : sketches_) total += s.serialized_size();
  return total;
}

std::uint64_t ForestSketchBank::membership_bytes() const {
  return mode_ == MembershipMode::kExplicit ? (std::uint64_t{n_} + 7) / 8 : 0;
}

ForestExtraction ForestSketchBank::extract() const {
  ForestExtraction out;
  out.forest = EdgeSet(n_);
  const std::size_t m = members_.size();
  if (m < 2) return out;

  UnionFind uf(m);
  bool merged_in_last_round = false;
  for (std::uint32_t r = 0; r < rounds_; ++r) {
    // Components keyed by their smallest slot, so iteration order is fixed.
    std::map<std::size_t, std::vector<std::size_t>> components;
    for (std::size_t slot = 0; slot < m; ++slot) components[uf.find(slot)].push_back(slot);
    if (components.size() == 1) {
      merged_in_last_round = false;
      break;
    }

    std::vector<std::pair<std::size_t, std::size_t>> picks;
    for (const auto& [root, slots] : components) {
      L0Sketch total = sketch_at(slots.front(), r);
      for (std::size_t i = 1; i < slots.size(); ++i) total.merge(sketch_at(slots[i], r));
      const SampleOutcome got = total.sample();
      if (got.kind == SampleKind::kEmpty) continue;
      if (got.kind == SampleKind::kFail) {
        ++out.fail_samples;
        continue;
      }
      const Edge e = pair_from_index(got.index, n_);
      const std::size_t a = slot_of(e.u);
      const std::size_t b = slot_of(e.v);
      // A verified sample is an edge with exactly one endpoint inside the
      // component; anything else is treated as a failed sample.
      if (a == m || b == m || (uf.find(a) == root) == (uf.find(b) == root)) {
        ++out.fail_samples;
        continue;
      }
      picks.emplace_back(a, b);
    }
    ++out.rounds_used;
    merged_in_last_round = false;
    for (const auto& [a, b] : picks) {
      if (uf.unite(a, b)) {
        out.forest.insert(members_[a], members_[b]);
        merged_in_last_round = true;
      }
    }
    if (picks.empty()) break;
  }
  if (merged_in_last_round) {
    // Rounds ran out mid-merge; only a single spanning tree is certifiably done.
    std::size_t roots = 0;
    for (std::size_t slot = 0; slot < m; ++slot) roots += uf.find(slot) == slot ? 1 : 0;
    if (roots == 1) merged_in_last_round = false;
  }
  out.failed = out.fail_samples > 0 || merged_in_last_round;
  return out;
}

}  // namespace kvconn
