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

#ifndef KVCONN_L0_SKETCH_HPP_
#define KVCONN_L0_SKETCH_HPP_

#include <cstdint>
#include <span>
#include <vector>

namespace kvconn {

enum class SampleKind { kNonZero, kEmpty, kFail };

struct SampleOutcome {
  SampleKind kind = SampleKind::kEmpty;
  std::uint64_t index = 0;  // valid for kNonZero
  int sign = 0;             // +1 / -1 for kNonZero

  static SampleOutcome non_zero(std::uint64_t index, int sign) {
    return {SampleKind::kNonZero, index, sign};
  }
  static SampleOutcome empty() { return {SampleKind::kEmpty, 0, 0}; }
  static SampleOutcome fail() { return {SampleKind::kFail, 0, 0}; }

  friend bool operator==(const SampleOutcome&, const SampleOutcome&) = default;
};

// Linear sketch of an integer vector x in Z^U that can return a coordinate
// in the support of x.
//
// Layout: R repetitions x L levels of 1-sparse recovery cells. In
// repetition j, coordinate i lands in levels 0..tz(h_j(i)) where tz counts
// trailing zero bits of a seeded 64-bit hash, so level l sees each
// coordinate with probability 2^-l. A cell holds
//   count       = sum x_i
//   index_sum   = sum x_i * i
//   fingerprint = sum x_i * z^i   (mod 2^61 - 1)
// and decodes to coordinate q when index_sum = q * count and
// fingerprint = count * z^q.
//
// L = 2 * ceil(log2 U) + 2 and R = ceil(c * ln(1 / delta)) with c = 4 by
// default. Two sketches merge (cell-wise sum) iff they were built with the
// same universe, dimensions and seed.
class L0Sketch {
 public:
  static constexpr double kDefaultRepetitionConstant = 4.0;
  static constexpr std::uint64_t kFieldPrime = (std::uint64_t{1} << 61) - 1;
  static constexpr char kMagic[4] = {'K', 'V', 'L', '0'};
  static constexpr std::uint32_t kFormatVersion = 1;

  L0Sketch(std::uint64_t universe, double delta, std::uint64_t seed,
           double repetition_constant = kDefaultRepetitionConstant);

  static std::uint32_t level_count(std::uint64_t universe);
  static std::uint32_t repetition_count(double delta,
                                        double repetition_constant = kDefaultRepetitionConstant);
  static std::size_t serialized_size(std::uint32_t levels, std::uint32_t repetitions);

  std::uint64_t universe() const noexcept { return universe_; }
  std::uint32_t levels() const noexcept { return levels_; }
  std::uint32_t repetitions() const noexcept { return reps_; }
  std::uint64_t seed() const noexcept { return seed_; }

  // Adds `delta` to coordinate `index`. Throws IndexOutOfRange.
  void update(std::uint64_t index, std::int64_t delta);

  // this += other. Throws SeedMismatch unless mergeable.
  void merge(const L0Sketch& other);
  bool mergeable_with(const L0Sketch& other) const noexcept;

  SampleOutcome sample() const;

  bool is_zero() const noexcept;

  std::size_t serialized_size() const noexcept { return serialized_size(levels_, reps_); }
  // Fixed-width little-endian: magic, version, U, L, R, seed, then R*L cells
  // of (count i64, index_sum i64, fingerprint u64).
  std::vector<std::uint8_t> serialize() const;
  static L0Sketch deserialize(std::span<const std::uint8_t> bytes);

  friend bool operator==(const L0Sketch& a, const L0Sketch& b) {
    return a.universe_ == b.universe_ && a.levels_ == b.levels_ && a.reps_ == b.reps_ &&
           a.seed_ == b.seed_ && a.cells_ == b.cells_;
  }

 private:
  struct Cell {
    std::int64_t count = 0;
    std::int64_t index_sum = 0;
    std::uint64_t fingerprint = 0;

    friend bool operator==(const Cell&, const Cell&) = default;
    bool zero() const { return count == 0 && index_sum == 0 && fingerprint == 0; }
  };

  L0Sketch(std::uint64_t universe, std::uint32_t levels, std::uint32_t reps, std::uint64_t seed);
  void derive_hashes();
  std::uint32_t top_level(std::uint32_t rep, std::uint64_t index) const;
  bool decode(const Cell& cell, std::uint32_t rep, std::uint32_t level,
              std::uint64_t* index) const;
  Cell& cell(std::uint32_t rep, std::uint32_t level) { return cells_[rep * levels_ + level]; }
  const Cell& cell(std::uint32_t rep, std::uint32_t level) const {
    return cells_[rep * levels_ + level];
  }

  std::uint64_t universe_;
  std::uint32_t levels_;
  std::uint32_t reps_;
  std::uint64_t seed_;
  std::uint64_t z_ = 1;
  std::vector<std::uint64_t> rep_seeds_;
  std::vector<Cell> cells_;
};

L0Sketch merged(L0Sketch a, const L0Sketch& b);

}  // namespace kvconn

#endif  // KVCONN_L0_SKETCH_HPP_
