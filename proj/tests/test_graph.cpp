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

#include "kvconn/error.hpp"
#include "kvconn/graph.hpp"
#include "kvconn/instances.hpp"
#include "kvconn/random.hpp"
#include "support.hpp"

namespace kvconn {
namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no kvconn::Error thrown";
  return Errc::kInvalidArgument;
}

TEST(MultiGraph, SingleInsertion) {
  MultiGraph g(3);
  g.apply({0, 1, +1});
  EXPECT_EQ(g.multiplicity(0, 1), 1u);
  EXPECT_EQ(g.multiplicity(1, 0), 1u);
}

TEST(MultiGraph, CancelToZeroRemovesPair) {
  MultiGraph g(3);
  g.apply({0, 1, +1});
  g.apply({0, 1, -1});
  EXPECT_EQ(g.multiplicity(0, 1), 0u);
  EXPECT_TRUE(g.pairs().empty());
}

TEST(MultiGraph, NegativeMultiplicityLeavesGraphUnchanged) {
  MultiGraph g(3);
  g.apply({1, 2, +1});
  const MultiGraph before = g;
  EXPECT_EQ(code_of([&] { g.apply({0, 1, -1}); }), Errc::kNegativeMultiplicity);
  EXPECT_EQ(g, before);
}

TEST(MultiGraph, RejectsSelfLoopsAndOutOfRange) {
  MultiGraph g(3);
  EXPECT_EQ(code_of([&] { g.apply({1, 1, +1}); }), Errc::kSelfLoop);
  EXPECT_EQ(code_of([&] { g.apply({0, 3, +1}); }), Errc::kInvalidVertex);
  EXPECT_EQ(code_of([&] { g.apply({0, 1, 0}); }), Errc::kInvalidArgument);
}

TEST(ReplayStream, ParallelCopiesAccumulate) {
  const std::vector<UpdateEvent> s{{0, 1, +1}, {0, 1, +1}};
  EXPECT_EQ(replay_stream(s, 2).multiplicity(0, 1), 2u);
}

TEST(ReplayStream, EmptyStream) {
  const MultiGraph g = replay_stream({}, 5);
  EXPECT_EQ(g.n(), 5u);
  EXPECT_TRUE(g.pairs().empty());
}

TEST(ReplayStream, InsertThenDelete) {
  const std::vector<UpdateEvent> s{{0, 1, +1}, {1, 2, +1}, {0, 1, -1}};
  const MultiGraph g = replay_stream(s, 3);
  ASSERT_EQ(g.pairs().size(), 1u);
  EXPECT_EQ(g.multiplicity(1, 2), 1u);
}

TEST(ReplayStream, ErrorNamesTheEvent) {
  const std::vector<UpdateEvent> s{{0, 1, +1}, {1, 2, -1}};
  try {
    replay_stream(s, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kNegativeMultiplicity);
    EXPECT_NE(std::string(e.what()).find("event 1"), std::string::npos) << e.what();
  }
}

TEST(Support, CollapsesMultiplicity) {
  MultiGraph g(3);
  g.apply({0, 1, +1});
  g.apply({1, 0, +1});
  EdgeSet want(3);
  want.insert(0, 1);
  EXPECT_EQ(support(g), want);
  EXPECT_TRUE(support(MultiGraph(3)).empty());
  g.apply({1, 2, +1});
  want.insert(1, 2);
  EXPECT_EQ(support(g), want);
}

TEST(ReplayStream, LegalPermutationsAgree) {
  Rng rng(11);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto events = gen_random_stream(14, 0.4, 0.4, seed);
    const MultiGraph base = replay_stream(events, 14);
    const auto shuffled = testing::legal_shuffle(events, rng);
    ASSERT_EQ(shuffled.size(), events.size());
    EXPECT_EQ(replay_stream(shuffled, 14), base);
  }
}

TEST(MultiGraph, InverseEventRestores) {
  Rng rng(5);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    MultiGraph g = replay_stream(gen_random_stream(10, 0.5, 0.2, seed), 10);
    const MultiGraph before = g;
    const Vertex u = static_cast<Vertex>(rng.below(10));
    const Vertex v = (u + 1 + static_cast<Vertex>(rng.below(9))) % 10;
    g.apply({u, v, +1});
    g.apply({u, v, -1});
    EXPECT_EQ(g, before);
  }
}

TEST(Support, MatchesFinalMultiplicities) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto events = gen_random_stream(12, 0.5, 0.3, seed);
    std::map<Edge, std::int64_t> count;
    for (const UpdateEvent& e : events) count[make_edge(e.u, e.v)] += e.delta;
    EdgeSet want(12);
    for (const auto& [edge, m] : count) {
      ASSERT_GE(m, 0);
      if (m > 0) want.insert(edge);
    }
    EXPECT_EQ(support(replay_stream(events, 12)), want);
  }
}

TEST(EdgeSet, InsertEraseDegreesInduced) {
  EdgeSet g(4);
  EXPECT_TRUE(g.insert(2, 1));
  EXPECT_FALSE(g.insert(1, 2));
  EXPECT_TRUE(g.insert(0, 1));
  EXPECT_TRUE(g.contains(1, 0));
  EXPECT_EQ(g.degrees(), (std::vector<std::uint32_t>{1, 2, 1, 0}));
  const EdgeSet sub = induced_subgraph(g, {true, true, false, true});
  EXPECT_EQ(sub.size(), 1u);
  EXPECT_TRUE(sub.contains(0, 1));
  EXPECT_TRUE(g.erase(0, 1));
  EXPECT_FALSE(g.erase(0, 1));
  EXPECT_EQ(code_of([&] { make_edge(3, 3); }), Errc::kSelfLoop);
}

}  // namespace
}  // namespace kvconn
