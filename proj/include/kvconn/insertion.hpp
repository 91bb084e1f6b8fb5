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

#ifndef KVCONN_INSERTION_HPP_
#define KVCONN_INSERTION_HPP_

#include <cstdint>

#include "kvconn/graph.hpp"

namespace kvconn {

// Deterministic certificate for insertion-only streams: an arriving edge
// {u, v} is retained iff the retained set F has fewer than k internally
// vertex-disjoint u-v paths before it is added. F is k-connected iff the
// streamed graph is, and |F| <= 2kn at all times.
class InsertionCertifier {
 public:
  // Throws BadN for n == 0 and InvalidArgument for k == 0.
  InsertionCertifier(std::uint32_t n, std::uint32_t k);

  // Returns whether the edge was kept. Repeats of a retained edge are
  // dropped: vertex connectivity ignores multiplicity.
  bool offer(Vertex u, Vertex v);

  // Rejects deletions with InsertionOnlyViolation.
  bool offer(const UpdateEvent& e);

  std::uint32_t n() const noexcept { return n_; }
  std::uint32_t k() const noexcept { return k_; }
  std::uint64_t offers() const noexcept { return offers_; }
  const EdgeSet& retained() const noexcept { return retained_; }

  EdgeSet finalize() const { return retained_; }

 private:
  std::uint32_t n_;
  std::uint32_t k_;
  EdgeSet retained_;
  std::uint64_t offers_ = 0;
};

}  // namespace kvconn

#endif  // KVCONN_INSERTION_HPP_
