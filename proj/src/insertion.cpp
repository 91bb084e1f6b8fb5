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

#include "kvconn/insertion.hpp"

#include <stdexcept>
#include <string>

#include "kvconn/error.hpp"
#include "kvconn/oracle.hpp"

namespace kvconn {

InsertionCertifier::InsertionCertifier(std::uint32_t n, std::uint32_t k)
    : n_(n), k_(k), retained_(n) {
  if (n == 0) throw Error(Errc::kBadN, "n must be >= 1");
  if (k == 0) throw Error(Errc::kInvalidArgument, "k must be >= 1");
}

bool InsertionCertifier::offer(Vertex u, Vertex v) {
  validate_event(UpdateEvent{u, v, +1}, n_);
  ++offers_;
  if (retained_.contains(u, v)) return false;
  // Paths are counted in F before the new edge joins it.
  if (max_vertex_disjoint_paths(retained_, u, v, k_) >= k_) return false;
  retained_.insert(u, v);
  if (retained_.size() > 2 * std::uint64_t{k_} * n_) {
    throw std::logic_error("retained edge count " + std::to_string(retained_.size()) +
                           " exceeds 2kn");
  }
  return true;
}

bool InsertionCertifier::offer(const UpdateEvent& e) {
  if (e.delta < 0) {
    throw Error(Errc::kInsertionOnlyViolation, "deletion in an insertion-only stream");
  }
  return offer(e.u, e.v);
}

}  // namespace kvconn
