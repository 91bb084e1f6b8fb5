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

#include <gtest/gtest.h>

#include <cmath>

#include "kvconn/error.hpp"
#include "kvconn/forest.hpp"
#include "kvconn/instances.hpp"
#include "kvconn/random.hpp"
#include "support.hpp"

namespace kvconn {
namespace {

std::vector<Vertex> all_vertices(std::uint32_t n) {
  std::vector<Vertex> v(n);
  for (Vertex i = 0; i < n; ++i) v[i] = i;
  return v;
}

TEST(PairIndex, BijectionOntoTriangle) {
  for (std::uint32_t n : {2u, 3u, 7u, 64u}) {
    std::uint64_t expect = 0;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        ASSERT_EQ(pair_index(u, v, n), expect);
        const Edge e = pair_from_index(expect, n);
        ASSERT_EQ(e.u, u);
        ASSERT_EQ(e.v, v);
        ++expect;
      }
    }
    EXPECT_EQ(expect, pair_universe(n));
  }
  EXPECT_THROW(pair_index(3, 2, 5), Error);
  EXPECT_THROW(pair_from_index(10, 5), Error);
}

TEST(ForestBank, RoundCount) {
  EXPECT_EQ(boruvka_rounds(64), 7u);
  EXPECT_EQ(boruvka_rounds(65), 8u);
  EXPECT_EQ(boruvka_rounds(2), 2u);
  std::vector<Vertex> members;
  for (Vertex v = 0; v < 64; v += 4) members.push_back(v);
  const ForestSketchBank bank(64, members, std::pow(64.0, -4.0), 1);
  EXPECT_EQ(bank.rounds(), 7u);
}

TEST(ForestBank, EmptyAndSingletonBanks) {
  const ForestSketchBank empty(10, {}, 0.01, 1);
  EXPECT_TRUE(empty.extract().forest.empty());
  EXPECT_FALSE(empty.extract().failed);

  ForestSketchBank single(10, {3}, 0.01, 1);
  single.update({3, 4, +1});
  single.update({0, 1, +1});
  EXPECT_TRUE(single.extract().forest.empty());
}

TEST(ForestBank, IgnoresEdgesLeavingMembers) {
  ForestSketchBank bank(8, {1, 2, 5}, 0.01, 4);
  const ForestSketchBank before = bank;
  bank.update({1, 3, +1});
  bank.update({0, 7, +1});
  EXPECT_EQ(bank, before);
  bank.update({1, 5, +1});
  EXPECT_FALSE(bank == before);
}

TEST(ForestBank, InsertDeleteIsBitIdentical) {
  ForestSketchBank bank(8, {1, 2, 5}, 0.01, 4);
  const ForestSketchBank before = bank;
  bank.update({5, 2, +1});
  bank.update({2, 5, -1});
  EXPECT_EQ(bank, before);
}

TEST(ForestBank, MultiplicityAccumulates) {
  ForestSketchBank bank(6, {0, 2, 4}, 0.01, 8);
  bank.update({2, 4, +1});
  bank.update({4, 2, +1});
  L0Sketch want(pair_universe(6), 0.01, derive_seed(8, "round", 0));
  want.update(pair_index(2, 4, 6), +2);
  EXPECT_EQ(bank.sketch(2, 0), want);
  L0Sketch neg(pair_universe(6), 0.01, derive_seed(8, "round", 0));
  neg.update(pair_index(2, 4, 6), -2);
  EXPECT_EQ(bank.sketch(4, 0), neg);
}

TEST(ForestBank, RoundsUseIndependentSketches) {
  const ForestSketchBank bank(16, all_vertices(16), 0.01, 21);
  for (std::uint32_t r = 0; r < bank.rounds(); ++r) {
    EXPECT_EQ(bank.sketch(0, r).seed(), derive_seed(21, "round", r));
    for (std::uint32_t q = 0; q < r; ++q) EXPECT_NE(bank.sketch(0, r).seed(), bank.sketch(0, q).seed());
  }
}

TEST(ForestBank, ComponentSumIsBoundary) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::uint32_t n = 12;
    const auto events = gen_random_stream(n, 0.35, 0.3, seed);
    const MultiGraph g = replay_stream(events, n);
    ForestSketchBank bank(n, all_vertices(n), 0.01, seed);
    for (const auto& e : events) bank.update(e);

    // Any vertex set, not just components: the sum must equal the signed
    // boundary vector.
    Rng rng(seed);
    std::vector<bool> in(n);
    for (Vertex v = 0; v < n; ++v) in[v] = rng.bernoulli(0.5);
    in[0] = true;
    L0Sketch total(pair_universe(n), 0.01, derive_seed(seed, "round", 0));
    for (Vertex v = 0; v < n; ++v) {
      if (in[v]) total.merge(bank.sketch(v, 0));
    }
    L0Sketch want(pair_universe(n), 0.01, derive_seed(seed, "round", 0));
    for (const auto& [edge, m] : g.pairs()) {
      if (in[edge.u] == in[edge.v]) continue;
      want.update(pair_index(edge.u, edge.v, n), in[edge.u] ? std::int64_t(m) : -std::int64_t(m));
    }
    EXPECT_EQ(total, want);
  }
}

TEST(ForestBank, ForcedShapes) {
  ForestSketchBank tri(6, {1, 3, 4}, 0.01, 2);
  tri.update({1, 3, +1});
  tri.update({3, 4, +1});
  tri.update({1, 4, +1});
  tri.update({0, 1, +1});
  const ForestExtraction t = tri.extract();
  EXPECT_FALSE(t.failed);
  EXPECT_EQ(t.forest.size(), 2u);
  EXPECT_TRUE(testing::is_acyclic(t.forest));

  ForestSketchBank two(6, {0, 2, 5}, 0.01, 2);
  two.update({0, 2, +1});
  two.update({2, 5, +1});
  two.update({2, 5, -1});
  const ForestExtraction f = two.extract();
  EdgeSet want(6);
  want.insert(0, 2);
  EXPECT_EQ(f.forest, want);
}

TEST(ForestBank, ExtractsSpanningForests) {
  int exact = 0;
  const int trials = 60;
  for (int trial = 0; trial < trials; ++trial) {
    const std::uint32_t n = 32;
    Rng rng(trial);
    std::vector<Vertex> members;
    for (Vertex v = 0; v < n; ++v) {
      if (rng.bernoulli(0.6)) members.push_back(v);
    }
    const auto events = gen_random_stream(n, 0.08, 0.3, trial);
    ForestSketchBank bank(n, members, 0.01, trial);
    for (const auto& e : events) bank.update(e);
    const ForestExtraction got = bank.extract();

    std::vector<bool> alive(n, false);
    for (Vertex v : members) alive[v] = true;
    const EdgeSet induced = induced_subgraph(support(replay_stream(events, n)), alive);
    ASSERT_TRUE(testing::is_subgraph(got.forest, induced));
    ASSERT_TRUE(testing::is_acyclic(got.forest));
    exact += testing::bfs_partition(got.forest, alive) == testing::bfs_partition(induced, alive);
  }
  EXPECT_GE(exact, trials - 1);
}

TEST(ForestBank, ProjectedBytesMatchAllocation) {
  const ForestSketchBank bank(20, {1, 4, 9, 16}, 0.01, 1);
  EXPECT_EQ(ForestSketchBank::projected_bytes(20, 4, 0.01, MembershipMode::kExplicit),
            bank.sketch_bytes() + bank.membership_bytes());
  EXPECT_EQ(bank.membership_bytes(), 3u);
  const ForestSketchBank hashed(20, {1, 4, 9, 16}, 0.01, 1, MembershipMode::kHashed);
  EXPECT_EQ(hashed.membership_bytes(), 0u);
  EXPECT_EQ(ForestSketchBank::projected_bytes(20, 4, 0.01, MembershipMode::kHashed),
            hashed.sketch_bytes());
}

TEST(ForestBank, ModesAgree) {
  const auto events = gen_random_stream(16, 0.4, 0.2, 5);
  ForestSketchBank a(16, {0, 3, 5, 7, 8, 11, 15}, 0.01, 5);
  ForestSketchBank b(16, {0, 3, 5, 7, 8, 11, 15}, 0.01, 5, MembershipMode::kHashed);
  for (const auto& e : events) {
    a.update(e);
    b.update(e);
  }
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.extract().forest, b.extract().forest);
}

}  // namespace
}  // namespace kvconn
