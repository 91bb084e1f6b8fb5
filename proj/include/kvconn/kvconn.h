/*
 * Copyright 2026 The kvconn Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to libkvconn: k-vertex-connectivity certificates for dynamic
 * graph streams.
 *
 * All objects are opaque handles created by kvc_*_new / kvc_*_read / kvc_gen_*
 * functions and released with the matching kvc_*_free. Every fallible call
 * returns a kvc_status; on failure kvc_last_error() holds a message for the
 * calling thread until its next failing call. Output parameters are only
 * written on KVC_OK, except the size outputs of calls that can report
 * KVC_ERR_BUFFER_TOO_SMALL.
 */

#ifndef KVCONN_KVCONN_H_
#define KVCONN_KVCONN_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(KVCONN_BUILDING_LIBRARY)
#define KVC_API __declspec(dllexport)
#else
#define KVC_API __declspec(dllimport)
#endif
#else
#define KVC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kvc_status {
  KVC_OK = 0,
  KVC_ERR_INVALID_ARGUMENT = 1,
  KVC_ERR_SELF_LOOP = 2,
  KVC_ERR_INVALID_VERTEX = 3,
  KVC_ERR_NEGATIVE_MULTIPLICITY = 4,
  KVC_ERR_BAD_DELTA = 5,
  KVC_ERR_INDEX_OUT_OF_RANGE = 6,
  KVC_ERR_SEED_MISMATCH = 7,
  KVC_ERR_TOO_FEW_VERTICES = 8,
  KVC_ERR_TOO_LARGE = 9,
  KVC_ERR_TOO_SMALL = 10,
  KVC_ERR_BAD_SHAPE = 11,
  KVC_ERR_UNKNOWN_NAME = 12,
  KVC_ERR_SPACE_EXCEEDED = 13,
  KVC_ERR_INSERTION_ONLY_VIOLATION = 14,
  KVC_ERR_BAD_N = 15,
  KVC_ERR_PARSE = 16,
  KVC_ERR_IO = 17,
  KVC_ERR_BUFFER_TOO_SMALL = 18,
  KVC_ERR_OUT_OF_MEMORY = 19,
  KVC_ERR_INTERNAL = 20
} kvc_status;

KVC_API const char* kvc_status_name(kvc_status status);
KVC_API const char* kvc_last_error(void);
KVC_API const char* kvc_version(void);

/* Child seed for (label, index) in the library's splittable seed tree. */
KVC_API uint64_t kvc_derive_seed(uint64_t parent, const char* label, uint64_t index);

/* ---- Streams ----------------------------------------------------------- */

/* A dynamic stream: header (n, k) plus a list of (u, v, +1/-1) events. */
typedef struct kvc_stream kvc_stream;

KVC_API kvc_status kvc_stream_new(uint32_t n, uint32_t k, kvc_stream** out);
KVC_API kvc_status kvc_stream_push(kvc_stream* stream, uint32_t u, uint32_t v, int32_t delta);
KVC_API kvc_status kvc_stream_read_file(const char* path, kvc_stream** out);
KVC_API kvc_status kvc_stream_parse(const char* text, size_t length, kvc_stream** out);
KVC_API kvc_status kvc_stream_write_file(const kvc_stream* stream, const char* path);
KVC_API uint32_t kvc_stream_vertex_count(const kvc_stream* stream);
KVC_API uint32_t kvc_stream_k(const kvc_stream* stream);
KVC_API size_t kvc_stream_event_count(const kvc_stream* stream);
KVC_API kvc_status kvc_stream_get_event(const kvc_stream* stream, size_t index, uint32_t* u,
                                        uint32_t* v, int32_t* delta);
/* KVC_OK iff every prefix keeps multiplicities non-negative. */
KVC_API kvc_status kvc_stream_validate(const kvc_stream* stream);
KVC_API void kvc_stream_free(kvc_stream* stream);

/* ---- Generators -------------------------------------------------------- */

/* complete(n), cycle(n), path(n), star(n), petersen, hypercube(d),
 * complete_bipartite(a,b); emitted as +1 events with header k. */
KVC_API kvc_status kvc_gen_named(const char* name, uint32_t k, kvc_stream** out);
/* x, y: `bits` = k * (n - k) bytes of 0/1. Alice's events precede Bob's. */
KVC_API kvc_status kvc_gen_disjointness(uint32_t n, uint32_t k, const uint8_t* x,
                                        const uint8_t* y, size_t bits, kvc_stream** out);
KVC_API kvc_status kvc_gen_disjointness_random(uint32_t n, uint32_t k, uint64_t seed,
                                               int intersecting, kvc_stream** out);
KVC_API kvc_status kvc_gen_planted_cut(uint32_t n, uint32_t k, uint64_t seed, kvc_stream** out);
KVC_API kvc_status kvc_gen_random(uint32_t n, double density, double delete_fraction,
                                  uint64_t seed, uint32_t k, kvc_stream** out);

/* ---- Exact oracle (on the support of the replayed stream) -------------- */

KVC_API kvc_status kvc_oracle_connectivity(const kvc_stream* stream, uint32_t* kappa);
KVC_API kvc_status kvc_oracle_is_k_connected(const kvc_stream* stream, uint32_t k, int* result);
/* *found says whether a cut of size < k exists and *size holds its size;
 * the vertices are copied to buf, or KVC_ERR_BUFFER_TOO_SMALL is returned
 * when capacity < *size. */
KVC_API kvc_status kvc_oracle_vertex_cut(const kvc_stream* stream, uint32_t k, uint32_t* buf,
                                         size_t capacity, size_t* size, int* found);

/* ---- Certificates ------------------------------------------------------ */

typedef struct kvc_params {
  uint32_t n;
  uint32_t k;
  double scale_c;                /* forests r = ceil(C k^2 ln n) */
  uint64_t seed;
  double delta;                  /* per-forest failure probability; 0 = n^-4 */
  int hashed_membership;         /* nonzero: no explicit subset bitsets */
  int count_membership_bytes;    /* include subset bitsets in measured bytes */
  uint64_t space_cap_bytes;      /* 0 = no cap */
  double repetition_constant;    /* sketch repetitions = ceil(c ln(1/delta)) */
} kvc_params;

/* Test-mode defaults: C = 20, seed 0, delta n^-4, explicit bitsets counted. */
KVC_API void kvc_params_init(kvc_params* params, uint32_t n, uint32_t k);

typedef struct kvc_certificate kvc_certificate;

typedef struct kvc_certificate_info {
  uint32_t n;
  uint32_t k;
  double scale_c;
  uint64_t seed;
  double delta;
  uint32_t r;
  uint64_t edge_count;
  uint64_t sum_vi;
  uint32_t forest_failures;
  uint64_t measured_sketch_bytes;
} kvc_certificate_info;

typedef struct kvc_certifier kvc_certifier;

KVC_API kvc_status kvc_certifier_new(const kvc_params* params, kvc_certifier** out);
KVC_API kvc_status kvc_certifier_update(kvc_certifier* certifier, uint32_t u, uint32_t v,
                                        int32_t delta);
KVC_API kvc_status kvc_certifier_feed(kvc_certifier* certifier, const kvc_stream* stream);
KVC_API kvc_status kvc_certifier_finalize(const kvc_certifier* certifier,
                                          kvc_certificate** out);
KVC_API void kvc_certifier_free(kvc_certifier* certifier);

/* Exact spanning forests of each sampled subgraph of the replayed stream. */
KVC_API kvc_status kvc_certify_offline(const kvc_stream* stream, const kvc_params* params,
                                       kvc_certificate** out);

KVC_API kvc_status kvc_certificate_decide(const kvc_certificate* cert, int* k_connected);
KVC_API kvc_status kvc_certificate_get_info(const kvc_certificate* cert,
                                            kvc_certificate_info* info);
KVC_API kvc_status kvc_certificate_edge(const kvc_certificate* cert, size_t index, uint32_t* u,
                                        uint32_t* v);
/* Writes the JSON report (NUL-terminated) when capacity suffices; *needed
 * always receives the length without the terminator. */
KVC_API kvc_status kvc_certificate_json(const kvc_certificate* cert, char* buf, size_t capacity,
                                        size_t* needed);
KVC_API void kvc_certificate_free(kvc_certificate* cert);

/* ---- Insertion-only certifier ----------------------------------------- */

typedef struct kvc_insertion kvc_insertion;

KVC_API kvc_status kvc_insertion_new(uint32_t n, uint32_t k, kvc_insertion** out);
KVC_API kvc_status kvc_insertion_offer(kvc_insertion* cert, uint32_t u, uint32_t v, int* kept);
/* Offers every event; fails with KVC_ERR_INSERTION_ONLY_VIOLATION on a -1. */
KVC_API kvc_status kvc_insertion_feed(kvc_insertion* cert, const kvc_stream* stream);
KVC_API size_t kvc_insertion_edge_count(const kvc_insertion* cert);
KVC_API kvc_status kvc_insertion_edge(const kvc_insertion* cert, size_t index, uint32_t* u,
                                      uint32_t* v);
KVC_API kvc_status kvc_insertion_decide(const kvc_insertion* cert, int* k_connected);
KVC_API void kvc_insertion_free(kvc_insertion* cert);

#ifdef __cplusplus
}
#endif

#endif /* KVCONN_KVCONN_H_ */
