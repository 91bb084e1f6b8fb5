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

#include "kvconn/certificate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <json.hpp>

#include "kvconn/error.hpp"
#include "kvconn/oracle.hpp"
#include "kvconn/random.hpp"
#include "kvconn/union_find.hpp"

namespace kvconn {

void CertParams::validate() const {
  if (n == 0) throw Error(Errc::kBadN, "n must be >= 1");
  if (k == 0) throw Error(Errc::kInvalidArgument, "k must be >= 1");
  if (!(scale_c > 0.0) || !std::isfinite(scale_c)) {
    throw Error(Errc::kInvalidArgument, "scale C must be a positive number");
  }
  if (delta != 0.0 && !(delta > 0.0 && delta < 1.0)) {
    throw Error(Errc::kBadDelta, "delta must lie in (0, 1)");
  }
}

std::uint32_t CertParams::forest_count() const {
  const double kk = static_cast<double>(k);
  const double r = std::ceil(scale_c * kk * kk * std::log(static_cast<double>(n)));
  if (r > static_cast<double>(std::numeric_limits<std::uint32_t>::max())) {
    throw Error(Errc::kInvalidArgument, "forest count overflows");
  }
  return std::max<std::uint32_t>(1, static_cast<std::uint32_t>(r));
}

double CertParams::effective_delta() const {
  if (delta != 0.0) return delta;
  if (n < 2) return 0.5;
  return std::pow(static_cast<double>(n), -4.0);
}

std::uint32_t Certificate::forest_failures() const {
  return static_cast<std::uint32_t>(
      std::count_if(forests.begin(), forests.end(), [](const ForestRecord& f) { return f.failed; }));
}

bool in_sampled_subset(const CertParams& p, std::uint32_t i, Vertex v) {
  if (p.k == 1) return true;
  const std::uint64_t threshold = std::numeric_limits<std::uint64_t>::max() / p.k;
  return mix64(derive_seed(p.seed, "subset", i) ^ mix64(v)) < threshold;
}

std::vector<std::vector<Vertex>> sample_subsets(const CertParams& p) {
  p.validate();
  const std::uint32_t r = p.forest_count();
  std::vector<std::vector<Vertex>> subsets(r);
  for (std::uint32_t i = 0; i < r; ++i) {
    for (Vertex v = 0; v < p.n; ++v) {
      if (in_sampled_subset(p, i, v)) subsets[i].push_back(v);
    }
  }
  return subsets;
}

Certificate build_certificate_offline(const EdgeSet& g, const CertParams& p) {
  p.validate();
  if (g.n() != p.n) throw Error(Errc::kInvalidArgument, "graph size differs from params.n");
  const auto subsets = sample_subsets(p);
  Certificate cert;
  cert.params = p;
  cert.r = static_cast<std::uint32_t>(subsets.size());
  cert.h = EdgeSet(p.n);
  std::vector<bool> member(p.n);
  for (std::uint32_t i = 0; i < cert.r; ++i) {
    std::fill(member.begin(), member.end(), false);
    for (Vertex v : subsets[i]) member[v] = true;
    UnionFind uf(p.n);
    ForestRecord rec;
    rec.seed = derive_seed(p.seed, "bank", i);
    rec.members = static_cast<std::uint32_t>(subsets[i].size());
    for (const Edge& e : g) {
      if (member[e.u] && member[e.v] && uf.unite(e.u, e.v)) {
        rec.edges.push_back(e);
        cert.h.insert(e);
      }
    }
    cert.sum_members += rec.members;
    cert.forests.push_back(std::move(rec));
  }
  return cert;
}

StreamCertifier::StreamCertifier(CertParams p) : params_(std::move(p)) {
  params_.validate();
  const double delta = params_.effective_delta();
  const auto subsets = sample_subsets(params_);

  std::uint64_t projected = 0;
  for (const auto& members : subsets) {
    projected += ForestSketchBank::projected_bytes(params_.n, members.size(), delta,
                                                   params_.membership,
                                                   params_.repetition_constant);
    if (!params_.count_membership_bytes && params_.membership == MembershipMode::kExplicit) {
      projected -= (std::uint64_t{params_.n} + 7) / 8;
    }
  }
  if (params_.space_cap_bytes != 0 && projected > params_.space_cap_bytes) {
    throw Error(Errc::kSpaceExceeded, "sketch space " + std::to_string(projected) +
                                          " bytes exceeds cap " +
                                          std::to_string(params_.space_cap_bytes));
  }

  banks_.reserve(subsets.size());
  for (std::uint32_t i = 0; i < subsets.size(); ++i) {
    banks_.emplace_back(params_.n, subsets[i], delta, derive_seed(params_.seed, "bank", i),
                        params_.membership, params_.repetition_constant);
    measured_bytes_ += banks_.back().sketch_bytes();
    if (params_.count_membership_bytes) measured_bytes_ += banks_.back().membership_bytes();
  }
  if (params_.validate_stream) shadow_.emplace(params_.n);
}

void StreamCertifier::update(const UpdateEvent& e) {
  validate_event(e, params_.n);
  if (shadow_) shadow_->apply(e);
  for (ForestSketchBank& bank : banks_) bank.update(e);
}

Certificate StreamCertifier::finalize() const {
  Certificate cert;
  cert.params = params_;
  cert.r = static_cast<std::uint32_t>(banks_.size());
  cert.h = EdgeSet(params_.n);
  cert.measured_sketch_bytes = measured_bytes_;
  for (const ForestSketchBank& bank : banks_) {
    ForestExtraction got = bank.extract();
    ForestRecord rec;
    rec.seed = bank.seed();
    rec.members = static_cast<std::uint32_t>(bank.members().size());
    rec.failed = got.failed;
    rec.fail_samples = got.fail_samples;
    rec.edges.assign(got.forest.begin(), got.forest.end());
    for (const Edge& e : rec.edges) cert.h.insert(e);
    cert.sum_members += rec.members;
    cert.forests.push_back(std::move(rec));
  }
  return cert;
}

bool decide_k_connected(const Certificate& cert) { return is_k_connected(cert.h, cert.params.k); }

std::pair<std::uint32_t, std::uint32_t> preserved_st_connectivity(const Certificate& cert,
                                                                  const EdgeSet& g, Vertex s,
                                                                  Vertex t) {
  const std::uint32_t k = cert.params.k;
  return {max_vertex_disjoint_paths(g, s, t, k), max_vertex_disjoint_paths(cert.h, s, t, k)};
}

std::string certificate_to_json(const Certificate& cert) {
  nlohmann::ordered_json j;
  j["n"] = cert.params.n;
  j["k"] = cert.params.k;
  j["C"] = cert.params.scale_c;
  j["r"] = cert.r;
  j["seed"] = cert.params.seed;
  auto edges = nlohmann::ordered_json::array();
  for (const Edge& e : cert.h) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  j["forest_failures"] = cert.forest_failures();
  j["sum_Vi"] = cert.sum_members;
  j["measured_sketch_bytes"] = cert.measured_sketch_bytes;
  return j.dump();
}

}  // namespace kvconn
