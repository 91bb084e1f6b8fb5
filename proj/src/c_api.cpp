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

#include "kvconn/kvconn.h"

#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "kvconn/certificate.hpp"
#include "kvconn/error.hpp"
#include "kvconn/insertion.hpp"
#include "kvconn/instances.hpp"
#include "kvconn/oracle.hpp"
#include "kvconn/random.hpp"
#include "kvconn/stream_io.hpp"

struct kvc_stream {
  kvconn::StreamFile file;
};

struct kvc_certifier {
  kvconn::StreamCertifier certifier;
};

struct kvc_certificate {
  kvconn::Certificate cert;
  std::vector<kvconn::Edge> edges;
};

struct kvc_insertion {
  kvconn::InsertionCertifier certifier;
  mutable std::vector<kvconn::Edge> edges;
  mutable bool edges_stale = true;
};

namespace {

thread_local std::string g_last_error;

kvc_status to_status(kvconn::Errc code) {
  using kvconn::Errc;
  switch (code) {
    case Errc::kInvalidArgument: return KVC_ERR_INVALID_ARGUMENT;
    case Errc::kSelfLoop: return KVC_ERR_SELF_LOOP;
    case Errc::kInvalidVertex: return KVC_ERR_INVALID_VERTEX;
    case Errc::kNegativeMultiplicity: return KVC_ERR_NEGATIVE_MULTIPLICITY;
    case Errc::kBadDelta: return KVC_ERR_BAD_DELTA;
    case Errc::kIndexOutOfRange: return KVC_ERR_INDEX_OUT_OF_RANGE;
    case Errc::kSeedMismatch: return KVC_ERR_SEED_MISMATCH;
    case Errc::kTooFewVertices: return KVC_ERR_TOO_FEW_VERTICES;
    case Errc::kTooLarge: return KVC_ERR_TOO_LARGE;
    case Errc::kTooSmall: return KVC_ERR_TOO_SMALL;
    case Errc::kBadShape: return KVC_ERR_BAD_SHAPE;
    case Errc::kUnknownName: return KVC_ERR_UNKNOWN_NAME;
    case Errc::kSpaceExceeded: return KVC_ERR_SPACE_EXCEEDED;
    case Errc::kInsertionOnlyViolation: return KVC_ERR_INSERTION_ONLY_VIOLATION;
    case Errc::kBadN: return KVC_ERR_BAD_N;
    case Errc::kParse: return KVC_ERR_PARSE;
    case Errc::kIo: return KVC_ERR_IO;
  }
  return KVC_ERR_INTERNAL;
}

kvc_status fail(kvc_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <class F>
kvc_status guarded(F&& body) {
  try {
    return body();
  } catch (const kvconn::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(KVC_ERR_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(KVC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(KVC_ERR_INTERNAL, "unknown exception");
  }
}

#define KVC_REQUIRE(cond)                                                  \
  do {                                                                     \
    if (!(cond)) return fail(KVC_ERR_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

kvconn::EdgeSet replayed_support(const kvc_stream* stream) {
  return kvconn::support(kvconn::replay_stream(stream->file.events, stream->file.n));
}

kvconn::CertParams to_params(const kvc_params& p) {
  kvconn::CertParams out;
  out.n = p.n;
  out.k = p.k;
  out.scale_c = p.scale_c;
  out.seed = p.seed;
  out.delta = p.delta;
  out.membership =
      p.hashed_membership ? kvconn::MembershipMode::kHashed : kvconn::MembershipMode::kExplicit;
  out.count_membership_bytes = p.count_membership_bytes != 0;
  out.space_cap_bytes = p.space_cap_bytes;
  out.repetition_constant = p.repetition_constant;
  return out;
}

kvc_status emit_stream(kvconn::StreamFile file, kvc_stream** out) {
  *out = new kvc_stream{std::move(file)};
  return KVC_OK;
}

kvc_status emit_certificate(kvconn::Certificate cert, kvc_certificate** out) {
  auto handle = std::make_unique<kvc_certificate>();
  handle->edges.assign(cert.h.begin(), cert.h.end());
  handle->cert = std::move(cert);
  *out = handle.release();
  return KVC_OK;
}

}  // namespace

extern "C" {

const char* kvc_status_name(kvc_status status) {
  switch (status) {
    case KVC_OK: return "OK";
    case KVC_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case KVC_ERR_SELF_LOOP: return "SelfLoop";
    case KVC_ERR_INVALID_VERTEX: return "InvalidVertex";
    case KVC_ERR_NEGATIVE_MULTIPLICITY: return "NegativeMultiplicity";
    case KVC_ERR_BAD_DELTA: return "BadDelta";
    case KVC_ERR_INDEX_OUT_OF_RANGE: return "IndexOutOfRange";
    case KVC_ERR_SEED_MISMATCH: return "SeedMismatch";
    case KVC_ERR_TOO_FEW_VERTICES: return "TooFewVertices";
    case KVC_ERR_TOO_LARGE: return "TooLarge";
    case KVC_ERR_TOO_SMALL: return "TooSmall";
    case KVC_ERR_BAD_SHAPE: return "BadShape";
    case KVC_ERR_UNKNOWN_NAME: return "UnknownName";
    case KVC_ERR_SPACE_EXCEEDED: return "SpaceExceeded";
    case KVC_ERR_INSERTION_ONLY_VIOLATION: return "InsertionOnlyViolation";
    case KVC_ERR_BAD_N: return "BadN";
    case KVC_ERR_PARSE: return "Parse";
    case KVC_ERR_IO: return "Io";
    case KVC_ERR_BUFFER_TOO_SMALL: return "BufferTooSmall";
    case KVC_ERR_OUT_OF_MEMORY: return "OutOfMemory";
    case KVC_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* kvc_last_error(void) { return g_last_error.c_str(); }

const char* kvc_version(void) { return "1.0.0"; }

uint64_t kvc_derive_seed(uint64_t parent, const char* label, uint64_t index) {
  return kvconn::derive_seed(parent, label ? label : "", index);
}

// ---- Streams ---------------------------------------------------------------

kvc_status kvc_stream_new(uint32_t n, uint32_t k, kvc_stream** out) {
  KVC_REQUIRE(out);
  return guarded([&] {
    if (n == 0) return fail(KVC_ERR_BAD_N, "n must be >= 1");
    if (k == 0) return fail(KVC_ERR_INVALID_ARGUMENT, "k must be >= 1");
    return emit_stream(kvconn::StreamFile{n, k, {}}, out);
  });
}

kvc_status kvc_stream_push(kvc_stream* stream, uint32_t u, uint32_t v, int32_t delta) {
  KVC_REQUIRE(stream);
  return guarded([&] {
    const kvconn::UpdateEvent e{u, v, static_cast<int>(delta)};
    kvconn::validate_event(e, stream->file.n);
    stream->file.events.push_back(e);
    return KVC_OK;
  });
}

kvc_status kvc_stream_read_file(const char* path, kvc_stream** out) {
  KVC_REQUIRE(path && out);
  return guarded([&] { return emit_stream(kvconn::read_stream_file(path), out); });
}

kvc_status kvc_stream_parse(const char* text, size_t length, kvc_stream** out) {
  KVC_REQUIRE(text && out);
  return guarded([&] { return emit_stream(kvconn::parse_stream({text, length}), out); });
}

kvc_status kvc_stream_write_file(const kvc_stream* stream, const char* path) {
  KVC_REQUIRE(stream && path);
  return guarded([&] {
    kvconn::write_stream_file(path, stream->file);
    return KVC_OK;
  });
}

uint32_t kvc_stream_vertex_count(const kvc_stream* stream) {
  return stream ? stream->file.n : 0;
}

uint32_t kvc_stream_k(const kvc_stream* stream) { return stream ? stream->file.k : 0; }

size_t kvc_stream_event_count(const kvc_stream* stream) {
  return stream ? stream->file.events.size() : 0;
}

kvc_status kvc_stream_get_event(const kvc_stream* stream, size_t index, uint32_t* u, uint32_t* v,
                                int32_t* delta) {
  KVC_REQUIRE(stream && u && v && delta);
  if (index >= stream->file.events.size()) {
    return fail(KVC_ERR_INDEX_OUT_OF_RANGE, "event index out of range");
  }
  const auto& e = stream->file.events[index];
  *u = e.u;
  *v = e.v;
  *delta = e.delta;
  return KVC_OK;
}

kvc_status kvc_stream_validate(const kvc_stream* stream) {
  KVC_REQUIRE(stream);
  return guarded([&] {
    kvconn::replay_stream(stream->file.events, stream->file.n);
    return KVC_OK;
  });
}

void kvc_stream_free(kvc_stream* stream) { delete stream; }

// ---- Generators ------------------------------------------------------------

kvc_status kvc_gen_named(const char* name, uint32_t k, kvc_stream** out) {
  KVC_REQUIRE(name && out);
  return guarded([&] {
    if (k == 0) return fail(KVC_ERR_INVALID_ARGUMENT, "k must be >= 1");
    const kvconn::EdgeSet g = kvconn::gen_named(name);
    kvconn::StreamFile file{g.n(), k, {}};
    for (const kvconn::Edge& e : g) file.events.push_back({e.u, e.v, +1});
    return emit_stream(std::move(file), out);
  });
}

kvc_status kvc_gen_disjointness(uint32_t n, uint32_t k, const uint8_t* x, const uint8_t* y,
                                size_t bits, kvc_stream** out) {
  KVC_REQUIRE(x && y && out);
  return guarded([&] {
    kvconn::DisjointnessInstance inst{n, k, {x, x + bits}, {y, y + bits}};
    for (auto& b : inst.x) b = b ? 1 : 0;
    for (auto& b : inst.y) b = b ? 1 : 0;
    return emit_stream(kvconn::StreamFile{n, k, kvconn::gen_disjointness(inst).concatenated()},
                       out);
  });
}

kvc_status kvc_gen_disjointness_random(uint32_t n, uint32_t k, uint64_t seed, int intersecting,
                                       kvc_stream** out) {
  KVC_REQUIRE(out);
  return guarded([&] {
    const auto inst = kvconn::random_disjointness(n, k, seed, intersecting != 0);
    return emit_stream(kvconn::StreamFile{n, k, kvconn::gen_disjointness(inst).concatenated()},
                       out);
  });
}

kvc_status kvc_gen_planted_cut(uint32_t n, uint32_t k, uint64_t seed, kvc_stream** out) {
  KVC_REQUIRE(out);
  return guarded([&] {
    const auto planted = kvconn::gen_planted_cut(n, k, seed);
    return emit_stream(
        kvconn::StreamFile{n, k, kvconn::insertion_stream(planted.graph, seed)}, out);
  });
}

kvc_status kvc_gen_random(uint32_t n, double density, double delete_fraction, uint64_t seed,
                          uint32_t k, kvc_stream** out) {
  KVC_REQUIRE(out);
  return guarded([&] {
    if (n == 0) return fail(KVC_ERR_BAD_N, "n must be >= 1");
    if (k == 0) return fail(KVC_ERR_INVALID_ARGUMENT, "k must be >= 1");
    auto events = kvconn::gen_random_stream(n, density, delete_fraction, seed);
    kvconn::replay_stream(events, n);
    return emit_stream(kvconn::StreamFile{n, k, std::move(events)}, out);
  });
}

// ---- Oracle ----------------------------------------------------------------

kvc_status kvc_oracle_connectivity(const kvc_stream* stream, uint32_t* kappa) {
  KVC_REQUIRE(stream && kappa);
  return guarded([&] {
    *kappa = kvconn::vertex_connectivity(replayed_support(stream));
    return KVC_OK;
  });
}

kvc_status kvc_oracle_is_k_connected(const kvc_stream* stream, uint32_t k, int* result) {
  KVC_REQUIRE(stream && result);
  return guarded([&] {
    *result = kvconn::is_k_connected(replayed_support(stream), k) ? 1 : 0;
    return KVC_OK;
  });
}

kvc_status kvc_oracle_vertex_cut(const kvc_stream* stream, uint32_t k, uint32_t* buf,
                                 size_t capacity, size_t* size, int* found) {
  KVC_REQUIRE(stream && size && found);
  return guarded([&] {
    const auto cut = kvconn::find_vertex_cut(replayed_support(stream), k);
    *found = cut ? 1 : 0;
    *size = cut ? cut->size() : 0;
    if (cut && !cut->empty()) {
      if (!buf || capacity < cut->size()) {
        return fail(KVC_ERR_BUFFER_TOO_SMALL, "cut buffer too small");
      }
      std::memcpy(buf, cut->data(), cut->size() * sizeof(uint32_t));
    }
    return KVC_OK;
  });
}

// ---- Certificates ----------------------------------------------------------

void kvc_params_init(kvc_params* params, uint32_t n, uint32_t k) {
  if (!params) return;
  params->n = n;
  params->k = k;
  params->scale_c = kvconn::kTestModeScale;
  params->seed = 0;
  params->delta = 0.0;
  params->hashed_membership = 0;
  params->count_membership_bytes = 1;
  params->space_cap_bytes = 0;
  params->repetition_constant = kvconn::L0Sketch::kDefaultRepetitionConstant;
}

kvc_status kvc_certifier_new(const kvc_params* params, kvc_certifier** out) {
  KVC_REQUIRE(params && out);
  return guarded([&] {
    *out = new kvc_certifier{kvconn::StreamCertifier(to_params(*params))};
    return KVC_OK;
  });
}

kvc_status kvc_certifier_update(kvc_certifier* certifier, uint32_t u, uint32_t v, int32_t delta) {
  KVC_REQUIRE(certifier);
  return guarded([&] {
    certifier->certifier.update({u, v, static_cast<int>(delta)});
    return KVC_OK;
  });
}

kvc_status kvc_certifier_feed(kvc_certifier* certifier, const kvc_stream* stream) {
  KVC_REQUIRE(certifier && stream);
  return guarded([&] {
    if (stream->file.n != certifier->certifier.params().n) {
      return fail(KVC_ERR_INVALID_ARGUMENT, "stream n differs from certifier n");
    }
    for (std::size_t i = 0; i < stream->file.events.size(); ++i) {
      try {
        certifier->certifier.update(stream->file.events[i]);
      } catch (const kvconn::Error& e) {
        throw kvconn::Error(e.code(), "event " + std::to_string(i) + ": " + e.what());
      }
    }
    return KVC_OK;
  });
}

kvc_status kvc_certifier_finalize(const kvc_certifier* certifier, kvc_certificate** out) {
  KVC_REQUIRE(certifier && out);
  return guarded([&] { return emit_certificate(certifier->certifier.finalize(), out); });
}

void kvc_certifier_free(kvc_certifier* certifier) { delete certifier; }

kvc_status kvc_certify_offline(const kvc_stream* stream, const kvc_params* params,
                               kvc_certificate** out) {
  KVC_REQUIRE(stream && params && out);
  return guarded([&] {
    if (stream->file.n != params->n) {
      return fail(KVC_ERR_INVALID_ARGUMENT, "stream n differs from params n");
    }
    return emit_certificate(
        kvconn::build_certificate_offline(replayed_support(stream), to_params(*params)), out);
  });
}

kvc_status kvc_certificate_decide(const kvc_certificate* cert, int* k_connected) {
  KVC_REQUIRE(cert && k_connected);
  return guarded([&] {
    *k_connected = kvconn::decide_k_connected(cert->cert) ? 1 : 0;
    return KVC_OK;
  });
}

kvc_status kvc_certificate_get_info(const kvc_certificate* cert, kvc_certificate_info* info) {
  KVC_REQUIRE(cert && info);
  const auto& c = cert->cert;
  info->n = c.params.n;
  info->k = c.params.k;
  info->scale_c = c.params.scale_c;
  info->seed = c.params.seed;
  info->delta = c.params.effective_delta();
  info->r = c.r;
  info->edge_count = c.h.size();
  info->sum_vi = c.sum_members;
  info->forest_failures = c.forest_failures();
  info->measured_sketch_bytes = c.measured_sketch_bytes;
  return KVC_OK;
}

kvc_status kvc_certificate_edge(const kvc_certificate* cert, size_t index, uint32_t* u,
                                uint32_t* v) {
  KVC_REQUIRE(cert && u && v);
  if (index >= cert->edges.size()) return fail(KVC_ERR_INDEX_OUT_OF_RANGE, "edge index");
  *u = cert->edges[index].u;
  *v = cert->edges[index].v;
  return KVC_OK;
}

kvc_status kvc_certificate_json(const kvc_certificate* cert, char* buf, size_t capacity,
                                size_t* needed) {
  KVC_REQUIRE(cert && needed);
  return guarded([&] {
    const std::string json = kvconn::certificate_to_json(cert->cert);
    *needed = json.size();
    if (!buf || capacity < json.size() + 1) {
      return fail(KVC_ERR_BUFFER_TOO_SMALL, "json buffer too small");
    }
    std::memcpy(buf, json.c_str(), json.size() + 1);
    return KVC_OK;
  });
}

void kvc_certificate_free(kvc_certificate* cert) { delete cert; }

// ---- Insertion-only --------------------------------------------------------

kvc_status kvc_insertion_new(uint32_t n, uint32_t k, kvc_insertion** out) {
  KVC_REQUIRE(out);
  return guarded([&] {
    *out = new kvc_insertion{kvconn::InsertionCertifier(n, k), {}, true};
    return KVC_OK;
  });
}

kvc_status kvc_insertion_offer(kvc_insertion* cert, uint32_t u, uint32_t v, int* kept) {
  KVC_REQUIRE(cert);
  return guarded([&] {
    const bool took = cert->certifier.offer(u, v);
    cert->edges_stale = cert->edges_stale || took;
    if (kept) *kept = took ? 1 : 0;
    return KVC_OK;
  });
}

kvc_status kvc_insertion_feed(kvc_insertion* cert, const kvc_stream* stream) {
  KVC_REQUIRE(cert && stream);
  return guarded([&] {
    if (stream->file.n != cert->certifier.n()) {
      return fail(KVC_ERR_INVALID_ARGUMENT, "stream n differs from certifier n");
    }
    for (std::size_t i = 0; i < stream->file.events.size(); ++i) {
      try {
        if (cert->certifier.offer(stream->file.events[i])) cert->edges_stale = true;
      } catch (const kvconn::Error& e) {
        throw kvconn::Error(e.code(), "event " + std::to_string(i) + ": " + e.what());
      }
    }
    return KVC_OK;
  });
}

size_t kvc_insertion_edge_count(const kvc_insertion* cert) {
  return cert ? cert->certifier.retained().size() : 0;
}

kvc_status kvc_insertion_edge(const kvc_insertion* cert, size_t index, uint32_t* u, uint32_t* v) {
  KVC_REQUIRE(cert && u && v);
  if (cert->edges_stale) {
    const auto& f = cert->certifier.retained();
    cert->edges.assign(f.begin(), f.end());
    cert->edges_stale = false;
  }
  if (index >= cert->edges.size()) return fail(KVC_ERR_INDEX_OUT_OF_RANGE, "edge index");
  *u = cert->edges[index].u;
  *v = cert->edges[index].v;
  return KVC_OK;
}

kvc_status kvc_insertion_decide(const kvc_insertion* cert, int* k_connected) {
  KVC_REQUIRE(cert && k_connected);
  return guarded([&] {
    *k_connected =
        kvconn::is_k_connected(cert->certifier.retained(), cert->certifier.k()) ? 1 : 0;
    return KVC_OK;
  });
}

void kvc_insertion_free(kvc_insertion* cert) { delete cert; }

}  // extern "C"
