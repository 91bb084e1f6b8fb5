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

// Spanning forests of an induced subgraph G[members] recovered from
// per-vertex L0 sketches of signed incidence vectors.
//
// Vertex u's vector has +m at pair index id(u, v) for every neighbor v > u
// and -m at id(w, u) for every neighbor w < u (m = multiplicity). Summing
// the vectors of a vertex set cancels every edge inside the set, leaving
// exactly the edges that leave it. Extraction runs Boruvka rounds: each
// component merges its members' sketches for the current round, samples
// one outgoing edge, and components are joined along the sampled edges.
// Every round owns an independent battery of sketches, so sampling in
// round p never reuses randomness that earlier rounds' decisions depended
// on.

#ifndef KVCONN_FOREST_HPP_
#define KVCONN_FOREST_HPP_

#include <cstdint>
#include <vector>

#include "kvconn/graph.hpp"
#include "kvconn/l0_sketch.hpp"

namespace kvconn {

// Compacted upper-triangular pair index in [0, n(n-1)/2) for u < v.
std::uint64_t pair_index(Vertex u, Vertex v, std::uint32_t n);
Edge pair_from_index(std::uint64_t id, std::uint32_t n);
std::uint64_t pair_universe(std::uint32_t n);

// ceil(log2 n) + 1.
std::uint32_t boruvka_rounds(std::uint32_t n);

enum class MembershipMode {
  kExplicit,  // n-bit membership bitset, charged to the space account
  kHashed,    // membership derived from the sorted member list; not charged
};

struct ForestExtraction {
  EdgeSet forest;
  std::uint32_t fail_samples = 0;
  std::uint32_t rounds_used = 0;
  // Set when some sample failed or the rounds ran out while components were
  // still merging; the forest may then be coarser than the truth.
  bool failed = false;
};

class ForestSketchBank {
 public:
  ForestSketchBank(std::uint32_t n, std::vector<Vertex> members, double delta, std::uint64_t seed,
                   MembershipMode mode = MembershipMode::kExplicit,
                   double repetition_constant = L0Sketch::kDefaultRepetitionConstant);

  // Bytes a bank with these parameters occupies, without building it.
  static std::uint64_t projected_bytes(std::uint32_t n, std::size_t member_count, double delta,
                                       MembershipMode mode,
                                       double repetition_constant =
                                           L0Sketch::kDefaultRepetitionConstant);

  std::uint32_t n() const noexcept { return n_; }
  const std::vector<Vertex>& members() const noexcept { return members_; }
  std::uint32_t rounds() const noexcept { return rounds_; }
  std::uint64_t seed() const noexcept { return seed_; }
  bool contains(Vertex v) const;

  // No-op unless both endpoints are members.
  void update(const UpdateEvent& e);

  ForestExtraction extract() const;

  const L0Sketch& sketch(Vertex v, std::uint32_t round) const;

  std::uint64_t sketch_bytes() const;
  std::uint64_t membership_bytes() const;

  friend bool operator==(const ForestSketchBank& a, const ForestSketchBank& b) {
    return a.n_ == b.n_ && a.members_ == b.members_ && a.seed_ == b.seed_ &&
           a.sketches_ == b.sketches_;
  }

 private:
  std::size_t slot_of(Vertex v) const;  // members_.size() if absent
  L0Sketch& sketch_at(std::size_t slot, std::uint32_t round) {
    return sketches_[slot * rounds_ + round];
  }
  const L0Sketch& sketch_at(std::size_t slot, std::uint32_t round) const {
    return sketches_[slot * rounds_ + round];
  }

  std::uint32_t n_;
  std::vector<Vertex> members_;  // sorted, unique
  std::vector<bool> member_bits_;
  MembershipMode mode_;
  std::uint32_t rounds_;
  std::uint64_t seed_;
  std::vector<L0Sketch> sketches_;  // slot-major, then round
};

}  // namespace kvconn

#endif  // KVCONN_FOREST_HPP_
