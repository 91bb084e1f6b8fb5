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

#include <map>

#include "kvconn/error.hpp"
#include "kvconn/l0_sketch.hpp"
#include "kvconn/random.hpp"

namespace kvconn {
namespace {

using Dense = std::map<std::uint64_t, std::int64_t>;

Dense random_vector(Rng& rng, std::uint64_t universe, std::size_t support) {
  Dense x;
  while (x.size() < support) {
    const std::int64_t v = rng.between(-3, 3);
    if (v != 0) x[rng.below(universe)] = v;
  }
  return x;
}

L0Sketch sketch_of(const Dense& x, std::uint64_t universe, std::uint64_t seed) {
  L0Sketch s(universe, 0.01, seed);
  for (const auto& [i, v] : x) s.update(i, v);
  return s;
}

TEST(L0Sketch, Dimensions) {
  const L0Sketch s(16, 0.01, 7);
  EXPECT_EQ(s.levels(), 10u);
  EXPECT_EQ(s.repetitions(), 19u);  // ceil(4 ln 100)
  EXPECT_EQ(s.serialized_size(), 32u + 24u * 10 * 19);
  EXPECT_EQ(L0Sketch::level_count(1), 2u);
  EXPECT_EQ(L0Sketch::level_count(2), 4u);
  EXPECT_EQ(L0Sketch::level_count(17), 12u);
}

TEST(L0Sketch, DegenerateUniverse) {
  L0Sketch s(1, 0.1, 3);
  EXPECT_EQ(s.sample(), SampleOutcome::empty());
  s.update(0, -2);
  EXPECT_EQ(s.sample(), SampleOutcome::non_zero(0, -1));
}

TEST(L0Sketch, RejectsBadArguments) {
  for (double d : {1.5, 0.0, -0.1, 1.0}) {
    try {
      L0Sketch(16, d, 0);
      FAIL() << d;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::kBadDelta);
    }
  }
  L0Sketch s(16, 0.1, 0);
  try {
    s.update(16, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kIndexOutOfRange);
  }
}

TEST(L0Sketch, CancellationGivesZero) {
  L0Sketch s(16, 0.01, 7);
  const L0Sketch zero = s;
  s.update(5, +1);
  EXPECT_EQ(s.sample(), SampleOutcome::non_zero(5, +1));
  s.update(5, -1);
  EXPECT_EQ(s, zero);
  EXPECT_TRUE(s.is_zero());
  EXPECT_EQ(s.sample(), SampleOutcome::empty());
}

TEST(L0Sketch, UpdateOrderIsIrrelevant) {
  Rng rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::pair<std::uint64_t, std::int64_t>> ups;
    for (int i = 0; i < 40; ++i) ups.emplace_back(rng.below(300), rng.between(-2, 2));
    L0Sketch a(300, 0.05, trial), b(300, 0.05, trial);
    for (const auto& [i, v] : ups) a.update(i, v);
    rng.shuffle(ups);
    for (const auto& [i, v] : ups) b.update(i, v);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.serialize(), b.serialize());
  }
}

TEST(L0Sketch, MergeMatchesDirectConstruction) {
  Rng rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const Dense v = random_vector(rng, 500, 1 + rng.below(20));
    const Dense w = random_vector(rng, 500, 1 + rng.below(20));
    Dense sum = v;
    for (const auto& [i, x] : w) sum[i] += x;
    const L0Sketch sv = sketch_of(v, 500, trial), sw = sketch_of(w, 500, trial);
    EXPECT_EQ(merged(sv, sw), sketch_of(sum, 500, trial));
  }
}

TEST(L0Sketch, MergeIdentityCancellationAndAlgebra) {
  const L0Sketch zero(64, 0.01, 9);
  L0Sketch plus = zero, minus = zero;
  plus.update(3, +1);
  minus.update(3, -1);
  EXPECT_EQ(merged(zero, plus), plus);
  EXPECT_EQ(merged(plus, minus).sample(), SampleOutcome::empty());

  Rng rng(4);
  const L0Sketch a = sketch_of(random_vector(rng, 64, 5), 64, 9);
  const L0Sketch b = sketch_of(random_vector(rng, 64, 5), 64, 9);
  const L0Sketch c = sketch_of(random_vector(rng, 64, 5), 64, 9);
  EXPECT_EQ(merged(a, b), merged(b, a));
  EXPECT_EQ(merged(merged(a, b), c), merged(a, merged(b, c)));
}

TEST(L0Sketch, MergeRequiresSameSeedAndShape) {
  L0Sketch a(64, 0.01, 1);
  EXPECT_FALSE(a.mergeable_with(L0Sketch(64, 0.01, 2)));
  EXPECT_FALSE(a.mergeable_with(L0Sketch(65, 0.01, 1)));
  EXPECT_FALSE(a.mergeable_with(L0Sketch(64, 0.1, 1)));
  try {
    a.merge(L0Sketch(64, 0.01, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kSeedMismatch);
  }
}

TEST(L0Sketch, SingletonRecoveredAcrossSeeds) {
  int hits = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    L0Sketch s(16, 0.01, seed);
    s.update(7, +1);
    hits += s.sample() == SampleOutcome::non_zero(7, +1) ? 1 : 0;
  }
  EXPECT_GE(hits, 990);
}

TEST(L0Sketch, TwoSparseSampleInSupport) {
  int ok = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    L0Sketch s(16, 0.01, seed);
    s.update(2, +3);
    s.update(9, +1);
    s.update(9, -2);
    s.update(4, +1);
    s.update(4, -1);
    const SampleOutcome out = s.sample();
    if (out.kind != SampleKind::kNonZero) continue;
    ASSERT_TRUE(out == SampleOutcome::non_zero(2, +1) || out == SampleOutcome::non_zero(9, -1));
    ++ok;
  }
  EXPECT_GE(ok, 990);
}

TEST(L0Sketch, LargeUniverseSoundness) {
  Rng rng(8);
  int nonzero = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const Dense x = random_vector(rng, std::uint64_t{1} << 20, 100);
    const SampleOutcome out = sketch_of(x, std::uint64_t{1} << 20, seed).sample();
    ASSERT_NE(out.kind, SampleKind::kEmpty);
    if (out.kind == SampleKind::kFail) continue;
    ++nonzero;
    const auto it = x.find(out.index);
    ASSERT_NE(it, x.end());
    EXPECT_EQ(out.sign, it->second > 0 ? +1 : -1);
  }
  EXPECT_GE(nonzero, 990);
}

TEST(L0Sketch, NoFalsePositivesOverManyTrials) {
  Rng rng(12);
  int fails = 0;
  for (std::uint64_t trial = 0; trial < 100000; ++trial) {
    const std::size_t support = 1 + rng.below(12);
    Dense x = random_vector(rng, 4096, support);
    L0Sketch s(4096, 0.01, trial);
    // Interleave noise that cancels out again.
    const std::uint64_t noise = rng.below(4096);
    s.update(noise, 5);
    for (const auto& [i, v] : x) s.update(i, v);
    s.update(noise, -5);
    const SampleOutcome out = s.sample();
    if (out.kind == SampleKind::kFail) {
      ++fails;
      continue;
    }
    ASSERT_EQ(out.kind, SampleKind::kNonZero);
    ASSERT_TRUE(x.count(out.index)) << "trial " << trial;
  }
  EXPECT_LE(fails, 1000);
}

TEST(L0Sketch, SerializationRoundTrip) {
  Rng rng(3);
  const L0Sketch s = sketch_of(random_vector(rng, 1000, 30), 1000, 77);
  const auto bytes = s.serialize();
  ASSERT_EQ(bytes.size(), s.serialized_size());
  EXPECT_EQ(std::string(bytes.begin(), bytes.begin() + 4), "KVL0");
  const L0Sketch back = L0Sketch::deserialize(bytes);
  EXPECT_EQ(back, s);
  EXPECT_EQ(back.sample(), s.sample());

  auto bad = bytes;
  bad[0] = 'X';
  EXPECT_THROW(L0Sketch::deserialize(bad), Error);
  bad = bytes;
  bad.pop_back();
  EXPECT_THROW(L0Sketch::deserialize(bad), Error);
  bad = bytes;
  bad[4] = 9;
  EXPECT_THROW(L0Sketch::deserialize(bad), Error);
}

}  // namespace
}  // namespace kvconn
