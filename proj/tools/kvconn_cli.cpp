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

// kvconn: generate streams, certify k-vertex-connectivity, query the exact
// oracle and measure certificate accuracy. Talks to the library only
// through the C API.
//
// Exit codes: 0 = k-connected (or success for gen/check/oracle without k),
// 1 = not k-connected, 2 = error or abort.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kvconn/kvconn.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

class CliError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check(kvc_status status, const std::string& what) {
  if (status != KVC_OK) {
    throw CliError(what + ": " + kvc_status_name(status) + ": " + kvc_last_error());
  }
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using StreamPtr = std::unique_ptr<kvc_stream, Deleter<kvc_stream, kvc_stream_free>>;
using CertifierPtr = std::unique_ptr<kvc_certifier, Deleter<kvc_certifier, kvc_certifier_free>>;
using CertificatePtr =
    std::unique_ptr<kvc_certificate, Deleter<kvc_certificate, kvc_certificate_free>>;
using InsertionPtr = std::unique_ptr<kvc_insertion, Deleter<kvc_insertion, kvc_insertion_free>>;

StreamPtr load_stream(const std::string& path) {
  kvc_stream* raw = nullptr;
  check(kvc_stream_read_file(path.c_str(), &raw), "reading " + path);
  return StreamPtr(raw);
}

void print_stream(const kvc_stream* s, std::ostream& out) {
  out << kvc_stream_vertex_count(s) << ' ' << kvc_stream_k(s) << '\n';
  for (std::size_t i = 0; i < kvc_stream_event_count(s); ++i) {
    std::uint32_t u, v;
    std::int32_t d;
    check(kvc_stream_get_event(s, i, &u, &v, &d), "reading event");
    out << u << ' ' << v << ' ' << (d > 0 ? "+1" : "-1") << '\n';
  }
}

struct CertifyOptions {
  std::string input;
  std::optional<std::uint32_t> k;
  std::optional<double> scale_c;
  std::uint64_t seed = 0;
  double delta = 0.0;
  std::string mode = "dynamic";
  std::uint64_t space_cap = 0;
  bool paper_mode = false;
  bool exclude_subset_bytes = false;
  bool hashed_membership = false;
  bool with_oracle = false;
};

kvc_params make_params(const CertifyOptions& o, std::uint32_t n, std::uint32_t k) {
  kvc_params p;
  kvc_params_init(&p, n, k);
  p.scale_c = o.scale_c ? *o.scale_c : (o.paper_mode ? 200.0 : 20.0);
  p.seed = o.seed;
  p.delta = o.delta;
  p.space_cap_bytes = o.space_cap;
  p.count_membership_bytes = o.exclude_subset_bytes ? 0 : 1;
  p.hashed_membership = o.hashed_membership ? 1 : 0;
  return p;
}

struct Outcome {
  bool verdict = false;
  std::uint64_t edges = 0;
  std::uint32_t r = 0;
  double scale_c = 0;
  double delta = 0;
  std::uint64_t sum_vi = 0;
  std::uint32_t forest_failures = 0;
  std::uint64_t bytes = 0;
};

// One certification of `stream` in the given mode.
Outcome certify_once(const kvc_stream* stream, const kvc_params& p, const std::string& mode) {
  Outcome out;
  if (mode == "insertion") {
    kvc_insertion* raw = nullptr;
    check(kvc_insertion_new(p.n, p.k, &raw), "creating insertion certifier");
    InsertionPtr ins(raw);
    check(kvc_insertion_feed(ins.get(), stream), "insertion-only pass");
    int yes = 0;
    check(kvc_insertion_decide(ins.get(), &yes), "deciding");
    out.verdict = yes != 0;
    out.edges = kvc_insertion_edge_count(ins.get());
    out.bytes = out.edges * 2 * sizeof(std::uint32_t);
    return out;
  }
  kvc_certificate* cert_raw = nullptr;
  if (mode == "offline") {
    check(kvc_certify_offline(stream, &p, &cert_raw), "offline certificate");
  } else {
    kvc_certifier* raw = nullptr;
    check(kvc_certifier_new(&p, &raw), "creating streaming certifier");
    CertifierPtr certifier(raw);
    check(kvc_certifier_feed(certifier.get(), stream), "streaming pass");
    check(kvc_certifier_finalize(certifier.get(), &cert_raw), "finalizing");
  }
  CertificatePtr cert(cert_raw);
  int yes = 0;
  check(kvc_certificate_decide(cert.get(), &yes), "deciding");
  kvc_certificate_info info;
  check(kvc_certificate_get_info(cert.get(), &info), "certificate info");
  out.verdict = yes != 0;
  out.edges = info.edge_count;
  out.r = info.r;
  out.scale_c = info.scale_c;
  out.delta = info.delta;
  out.sum_vi = info.sum_vi;
  out.forest_failures = info.forest_failures;
  out.bytes = info.measured_sketch_bytes;
  return out;
}

bool oracle_verdict(const kvc_stream* stream, std::uint32_t k) {
  int yes = 0;
  check(kvc_oracle_is_k_connected(stream, k, &yes), "oracle");
  return yes != 0;
}

int run_certify(const CertifyOptions& o) {
  const auto start = std::chrono::steady_clock::now();
  StreamPtr stream = load_stream(o.input);
  const std::uint32_t n = kvc_stream_vertex_count(stream.get());
  const std::uint32_t k = o.k ? *o.k : kvc_stream_k(stream.get());
  if (o.mode != "dynamic" && o.mode != "insertion" && o.mode != "offline") {
    throw CliError("unknown mode '" + o.mode + "'");
  }
  const kvc_params p = make_params(o, n, k);
  const Outcome got = certify_once(stream.get(), p, o.mode);

  json report;
  report["command"] = "certify";
  report["input"] = o.input;
  report["mode"] = o.mode;
  const bool sketched = o.mode != "insertion";
  report["params"] = {{"n", n},
                      {"k", k},
                      {"C", sketched ? json(got.scale_c) : json(nullptr)},
                      {"r", sketched ? json(got.r) : json(nullptr)},
                      {"seed", o.seed},
                      {"delta", sketched ? json(got.delta) : json(nullptr)}};
  report["verdict"] = got.verdict;
  if (o.with_oracle) report["oracle_verdict"] = oracle_verdict(stream.get(), k);
  report["certificate_edges"] = got.edges;
  report["sum_Vi"] = got.sum_vi;
  report["forest_failures"] = got.forest_failures;
  report["measured_sketch_bytes"] = got.bytes;
  report["wall_time_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  std::cout << report.dump() << '\n';
  return got.verdict ? kExitYes : kExitNo;
}

int run_oracle(const std::string& input, std::optional<std::uint32_t> k) {
  StreamPtr stream = load_stream(input);
  json report;
  report["n"] = kvc_stream_vertex_count(stream.get());
  if (!k) {
    std::uint32_t kappa = 0;
    check(kvc_oracle_connectivity(stream.get(), &kappa), "oracle");
    report["kappa"] = kappa;
    std::cout << report.dump() << '\n';
    return kExitYes;
  }
  const bool yes = oracle_verdict(stream.get(), *k);
  report["k"] = *k;
  report["k_connected"] = yes;
  if (!yes) {
    std::vector<std::uint32_t> buf(kvc_stream_vertex_count(stream.get()));
    std::size_t size = 0;
    int found = 0;
    check(kvc_oracle_vertex_cut(stream.get(), *k, buf.data(), buf.size(), &size, &found),
          "vertex cut");
    if (found) report["cut"] = std::vector<std::uint32_t>(buf.begin(), buf.begin() + size);
  }
  std::cout << report.dump() << '\n';
  return yes ? kExitYes : kExitNo;
}

struct CheckOptions {
  CertifyOptions base;
  std::uint32_t trials = 100;
  std::vector<double> sweep;
};

int run_check(CheckOptions o) {
  StreamPtr stream = load_stream(o.base.input);
  const std::uint32_t n = kvc_stream_vertex_count(stream.get());
  const std::uint32_t k = o.base.k ? *o.base.k : kvc_stream_k(stream.get());
  if (o.base.mode != "dynamic" && o.base.mode != "offline") {
    throw CliError("check supports --mode dynamic or offline");
  }
  const bool truth = oracle_verdict(stream.get(), k);
  if (o.sweep.empty()) o.sweep.push_back(o.base.scale_c ? *o.base.scale_c
                                                        : (o.base.paper_mode ? 200.0 : 20.0));

  json runs = json::array();
  for (double c : o.sweep) {
    std::uint32_t matches = 0, failures = 0;
    std::uint64_t min_h = UINT64_MAX, max_h = 0, sum_h = 0;
    for (std::uint32_t t = 0; t < o.trials; ++t) {
      CertifyOptions trial = o.base;
      trial.scale_c = c;
      trial.seed = kvc_derive_seed(o.base.seed, "trial", t);
      const Outcome got = certify_once(stream.get(), make_params(trial, n, k), o.base.mode);
      matches += got.verdict == truth ? 1 : 0;
      failures += got.forest_failures;
      min_h = std::min(min_h, got.edges);
      max_h = std::max(max_h, got.edges);
      sum_h += got.edges;
    }
    const double trials = o.trials == 0 ? 1.0 : static_cast<double>(o.trials);
    runs.push_back({{"C", c},
                    {"trials", o.trials},
                    {"matches", matches},
                    {"match_rate", o.trials == 0 ? 0.0 : matches / trials},
                    {"H_edges", {{"min", o.trials == 0 ? 0 : min_h},
                                 {"mean", sum_h / trials},
                                 {"max", max_h}}},
                    {"forest_failures", failures}});
  }
  json report;
  report["command"] = "check";
  report["input"] = o.base.input;
  report["mode"] = o.base.mode;
  report["n"] = n;
  report["k"] = k;
  report["seed"] = o.base.seed;
  report["oracle_verdict"] = truth;
  report["runs"] = std::move(runs);
  std::cout << report.dump() << '\n';
  return kExitYes;
}

struct GenOptions {
  std::string kind;
  std::string name;
  std::uint32_t n = 0;
  std::uint32_t k = 1;
  std::uint64_t seed = 0;
  bool intersecting = false;
  double density = 0.3;
  double delete_fraction = 0.2;
  std::string out = "-";
};

int run_gen(const GenOptions& o) {
  kvc_stream* raw = nullptr;
  if (o.kind == "named") {
    check(kvc_gen_named(o.name.c_str(), o.k, &raw), "generating " + o.name);
  } else if (o.kind == "disjointness") {
    check(kvc_gen_disjointness_random(o.n, o.k, o.seed, o.intersecting ? 1 : 0, &raw),
          "generating disjointness instance");
  } else if (o.kind == "planted") {
    check(kvc_gen_planted_cut(o.n, o.k, o.seed, &raw), "generating planted cut");
  } else if (o.kind == "random") {
    check(kvc_gen_random(o.n, o.density, o.delete_fraction, o.seed, o.k, &raw),
          "generating random stream");
  } else {
    throw CliError("unknown generator '" + o.kind + "'");
  }
  StreamPtr stream(raw);
  check(kvc_stream_validate(stream.get()), "validating generated stream");
  if (o.out == "-") {
    print_stream(stream.get(), std::cout);
  } else {
    check(kvc_stream_write_file(stream.get(), o.out.c_str()), "writing " + o.out);
  }
  return kExitYes;
}

void add_certify_flags(CLI::App* cmd, CertifyOptions& o) {
  cmd->add_option("input", o.input, "Stream file")->required();
  cmd->add_option("--k", o.k, "Target connectivity (default: stream header)");
  cmd->add_option("--scale-c", o.scale_c, "Forest count scale C (default 20, or 200 with --paper-mode)");
  cmd->add_option("--seed", o.seed, "Root seed");
  cmd->add_option("--delta", o.delta, "Per-forest sketch failure probability (default n^-4)");
  cmd->add_option("--space-cap-bytes", o.space_cap, "Abort when sketch space exceeds this");
  cmd->add_flag("--paper-mode", o.paper_mode, "Use C = 200");
  cmd->add_flag("--exclude-subset-bytes", o.exclude_subset_bytes,
                "Leave subset bitsets out of measured bytes");
  cmd->add_flag("--hashed-membership", o.hashed_membership,
                "Resolve subset membership without explicit bitsets");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-vertex-connectivity certificates for dynamic graph streams"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a stream file");
  gen_cmd->add_option("kind", gen.kind, "named | disjointness | planted | random")->required();
  gen_cmd->add_option("name", gen.name, "Graph name for 'named', e.g. complete(5)");
  gen_cmd->add_option("--n", gen.n, "Vertex count");
  gen_cmd->add_option("--k", gen.k, "Header k / instance k");
  gen_cmd->add_option("--seed", gen.seed, "Seed");
  gen_cmd->add_flag("--intersecting", gen.intersecting, "Disjointness: plant a common 1");
  gen_cmd->add_option("--density", gen.density, "Random: insertion density");
  gen_cmd->add_option("--delete-fraction", gen.delete_fraction, "Random: deleted fraction");
  gen_cmd->add_option("-o,--out", gen.out, "Output path ('-' for stdout)");

  CertifyOptions cert;
  auto* cert_cmd = app.add_subcommand("certify", "Certify a stream and print a JSON report");
  add_certify_flags(cert_cmd, cert);
  cert_cmd->add_option("--mode", cert.mode, "dynamic | insertion | offline");
  cert_cmd->add_flag("--oracle", cert.with_oracle, "Also report the exact verdict");

  std::string oracle_input;
  std::optional<std::uint32_t> oracle_k;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact connectivity of a stream's final graph");
  oracle_cmd->add_option("input", oracle_input, "Stream file")->required();
  oracle_cmd->add_option("--k", oracle_k, "Answer k-connectivity instead of kappa");

  CheckOptions chk;
  auto* check_cmd = app.add_subcommand("check", "Empirical certificate accuracy vs. the oracle");
  add_certify_flags(check_cmd, chk.base);
  check_cmd->add_option("--mode", chk.base.mode, "dynamic | offline");
  check_cmd->add_option("--trials", chk.trials, "Independent seeded trials");
  check_cmd->add_option("--sweep", chk.sweep, "Comma-separated C values")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*cert_cmd) return run_certify(cert);
    if (*oracle_cmd) return run_oracle(oracle_input, oracle_k);
    if (*check_cmd) return run_check(chk);
  } catch (const std::exception& e) {
    std::cerr << "kvconn: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
