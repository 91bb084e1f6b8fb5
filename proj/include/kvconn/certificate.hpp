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

// Certificates of k-vertex-connectivity built from spanning forests of
// randomly sampled induced subgraphs.
//
// r = ceil(C * k^2 * ln n) vertex subsets V_1..V_r are drawn, each vertex
// joining V_i independently with probability 1/k. H is the union of one
// spanning forest per G[V_i]. With high probability H is k-connected iff G
// is, and H is always a subgraph of G, so a k-connected H proves G
// k-connected.
//
// The offline builder computes each forest exactly with union-find; the
// streaming certifier maintains one ForestSketchBank per subset over a
// dynamic stream and extracts the forests at the end.

#ifndef KVCONN_CERTIFICATE_HPP_
#define KVCONN_CERTIFICATE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kvconn/forest.hpp"
#include "kvconn/graph.hpp"

namespace kvconn {

inline constexpr double kPaperModeScale = 200.0;
inline constexpr double kTestModeScale = 20.0;

struct CertParams {
  std::uint32_t n = 0;
  std::uint32_t k = 1;
  double scale_c = kTestModeScale;
  std::uint64_t seed = 0;
  // Per-forest sketch failure probability; 0 selects n^-4.
  double delta = 0.0;
  MembershipMode membership = MembershipMode::kExplicit;
  // When false, subset bitsets are left out of measured bytes.
  bool count_membership_bytes = true;
  // 0 disables the space guard.
  std::uint64_t space_cap_bytes = 0;
  double repetition_constant = L0Sketch::kDefaultRepetitionConstant;
  // Track multiplicities on the side to reject illegal streams. The shadow
  // copy is not part of the sketch space account.
  bool validate_stream = true;

  void validate() const;
  std::uint32_t forest_count() const;  // r
  double effective_delta() const;
};

struct ForestRecord {
  std::uint64_t seed = 0;
  std::uint32_t members = 0;
  bool failed = false;
  std::uint32_t fail_samples = 0;
  std::vector<Edge> edges;

  friend bool operator==(const ForestRecord&, const ForestRecord&) = default;
};

struct Certificate {
  CertParams params;
  std::uint32_t r = 0;
  EdgeSet h;
  std::vector<ForestRecord> forests;
  std::uint64_t sum_members = 0;
  std::uint64_t measured_sketch_bytes = 0;

  std::uint32_t forest_failures() const;
};

// Membership of vertex v in sampled subset V_i (i = 0-based).
bool in_sampled_subset(const CertParams& p, std::uint32_t i, Vertex v);

std::vector<std::vector<Vertex>> sample_subsets(const CertParams& p);

Certificate build_certificate_offline(const EdgeSet& g, const CertParams& p);

class StreamCertifier {
 public:
  // Throws SpaceExceeded when the projected sketch space passes the cap.
  explicit StreamCertifier(CertParams p);

  // Throws NegativeMultiplicity on an illegal stream (when validating).
  void update(const UpdateEvent& e);

  Certificate finalize() const;

  const CertParams& params() const noexcept { return params_; }
  std::uint64_t measured_bytes() const noexcept { return measured_bytes_; }
  const std::vector<ForestSketchBank>& banks() const noexcept { return banks_; }

 private:
  CertParams params_;
  std::vector<ForestSketchBank> banks_;
  std::optional<MultiGraph> shadow_;
  std::uint64_t measured_bytes_ = 0;
};

bool decide_k_connected(const Certificate& cert);

// (min(k, paths in g), min(k, paths in cert.h)) for the pair s, t.
std::pair<std::uint32_t, std::uint32_t> preserved_st_connectivity(const Certificate& cert,
                                                                  const EdgeSet& g, Vertex s,
                                                                  Vertex t);

// JSON report {n, k, C, r, seed, edges, forest_failures, sum_Vi,
// measured_sketch_bytes}. Output is a pure function of the certificate.
std::string certificate_to_json(const Certificate& cert);

}  // namespace kvconn

#endif  // KVCONN_CERTIFICATE_HPP_
