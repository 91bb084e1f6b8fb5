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

#include "kvconn/l0_sketch.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <string>

#include "kvconn/error.hpp"
#include "kvconn/random.hpp"

namespace kvconn {
namespace {

constexpr std::uint64_t kP = L0Sketch::kFieldPrime;

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b) {
  __extension__ using u128 = unsigned __int128;
  const u128 prod = static_cast<u128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(prod & kP);
  std::uint64_t hi = static_cast<std::uint64_t>(prod >> 61);
  std::uint64_t r = lo + hi;
  return r >= kP ? r - kP : r;
}

// Two's-complement wrapping add.
std::int64_t wrap_add(std::int64_t a, std::int64_t b) {
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) + static_cast<std::uint64_t>(b));
}

std::uint64_t mod_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = a + b;
  return r >= kP ? r - kP : r;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  while (exp > 0) {
    if (exp & 1) result = mod_mul(result, base);
    base = mod_mul(base, base);
    exp >>= 1;
  }
  return result;
}

// Field representative of a signed integer.
std::uint64_t to_field(std::int64_t v) {
  if (v >= 0) return static_cast<std::uint64_t>(v) % kP;
  const std::uint64_t mag = (~static_cast<std::uint64_t>(v) + 1) % kP;
  return mag == 0 ? 0 : kP - mag;
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::uint64_t take(int width) {
    if (pos_ + static_cast<std::size_t>(width) > bytes_.size()) {
      throw Error(Errc::kParse, "truncated sketch serialization");
    }
    std::uint64_t v = 0;
    for (int i = 0; i < width; ++i) v |= std::uint64_t{bytes_[pos_++]} << (8 * i);
    return v;
  }

  bool done() const { return pos_ == bytes_.size(); }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

std::uint32_t L0Sketch::level_count(std::uint64_t universe) {
  const auto ceil_log2 = static_cast<std::uint32_t>(std::bit_width(universe - 1));
  return 2 * (universe <= 1 ? 0 : ceil_log2) + 2;
}

std::uint32_t L0Sketch::repetition_count(double delta, double repetition_constant) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw Error(Errc::kBadDelta, "delta must lie in (0, 1), got " + std::to_string(delta));
  }
  if (!(repetition_constant > 0.0)) {
    throw Error(Errc::kInvalidArgument, "repetition constant must be positive");
  }
  const double r = std::ceil(repetition_constant * std::log(1.0 / delta));
  return std::max<std::uint32_t>(1, static_cast<std::uint32_t>(r));
}

std::size_t L0Sketch::serialized_size(std::uint32_t levels, std::uint32_t repetitions) {
  return 4 + 4 + 8 + 4 + 4 + 8 + std::size_t{levels} * repetitions * 24;
}

L0Sketch::L0Sketch(std::uint64_t universe, double delta, std::uint64_t seed,
                   double repetition_constant)
    : universe_(universe), levels_(0), reps_(0), seed_(seed) {
  if (universe == 0) throw Error(Errc::kInvalidArgument, "sketch universe must be >= 1");
  levels_ = level_count(universe);
  reps_ = repetition_count(delta, repetition_constant);
  cells_.resize(std::size_t{levels_} * reps_);
  derive_hashes();
}

L0Sketch::L0Sketch(std::uint64_t universe, std::uint32_t levels, std::uint32_t reps,
                   std::uint64_t seed)
    : universe_(universe), levels_(levels), reps_(reps), seed_(seed) {
  cells_.resize(std::size_t{levels_} * reps_);
  derive_hashes();
}

void L0Sketch::derive_hashes() {
  z_ = 1 + derive_seed(seed_, "z", 0) % (kP - 1);
  rep_seeds_.resize(reps_);
  for (std::uint32_t j = 0; j < reps_; ++j) rep_seeds_[j] = derive_seed(seed_, "rep", j);
}

std::uint32_t L0Sketch::top_level(std::uint32_t rep, std::uint64_t index) const {
  const std::uint64_t h = mix64(rep_seeds_[rep] ^ mix64(index));
  const auto tz = static_cast<std::uint32_t>(std::countr_zero(h));
  return std::min(tz, levels_ - 1);
}

void L0Sketch::update(std::uint64_t index, std::int64_t delta) {
  if (index >= universe_) {
    throw Error(Errc::kIndexOutOfRange, "index " + std::to_string(index) +
                                            " outside universe " + std::to_string(universe_));
  }
  if (delta == 0) return;
  const std::uint64_t fp = mod_mul(to_field(delta), mod_pow(z_, index));
  const auto weighted =
      static_cast<std::int64_t>(static_cast<std::uint64_t>(delta) * index);
  for (std::uint32_t j = 0; j < reps_; ++j) {
    const std::uint32_t top = top_level(j, index);
    for (std::uint32_t l = 0; l <= top; ++l) {
      Cell& c = cell(j, l);
      c.count = wrap_add(c.count, delta);
      c.index_sum = wrap_add(c.index_sum, weighted);
      c.fingerprint = mod_add(c.fingerprint, fp);
    }
  }
}

bool L0Sketch::mergeable_with(const L0Sketch& other) const noexcept {
  return universe_ == other.universe_ && levels_ == other.levels_ && reps_ == other.reps_ &&
         seed_ == other.seed_;
}

void L0Sketch::merge(const L0Sketch& other) {
  if (!mergeable_with(other)) {
    throw Error(Errc::kSeedMismatch, "sketches differ in seed or dimensions");
  }
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    cells_[i].count = wrap_add(cells_[i].count, other.cells_[i].count);
    cells_[i].index_sum = wrap_add(cells_[i].index_sum, other.cells_[i].index_sum);
    cells_[i].fingerprint = mod_add(cells_[i].fingerprint, other.cells_[i].fingerprint);
  }
}

L0Sketch merged(L0Sketch a, const L0Sketch& b) {
  a.merge(b);
  return a;
}

bool L0Sketch::decode(const Cell& c, std::uint32_t rep, std::uint32_t level,
                      std::uint64_t* index) const {
  if (c.count == 0 || c.index_sum % c.count != 0) return false;
  const std::int64_t q = c.index_sum / c.count;
  if (q < 0 || static_cast<std::uint64_t>(q) >= universe_) return false;
  const auto candidate = static_cast<std::uint64_t>(q);
  if (top_level(rep, candidate) < level) return false;
  if (c.fingerprint != mod_mul(to_field(c.count), mod_pow(z_, candidate))) return false;
  *index = candidate;
  return true;
}

SampleOutcome L0Sketch::sample() const {
  if (is_zero()) return SampleOutcome::empty();
  for (std::uint32_t j = 0; j < reps_; ++j) {
    for (std::uint32_t l = 0; l < levels_; ++l) {
      const Cell& c = cell(j, l);
      if (c.zero()) break;  // deeper levels only see subsets
      std::uint64_t index = 0;
      if (decode(c, j, l, &index)) {
        return SampleOutcome::non_zero(index, c.count > 0 ? +1 : -1);
      }
    }
  }
  return SampleOutcome::fail();
}

bool L0Sketch::is_zero() const noexcept {
  for (std::uint32_t j = 0; j < reps_; ++j) {
    if (!cell(j, 0).zero()) return false;
  }
  return true;
}

std::vector<std::uint8_t> L0Sketch::serialize() const {
  std::vector<std::uint8_t> out;
  out.reserve(serialized_size());
  out.insert(out.end(), std::begin(kMagic), std::end(kMagic));
  put_u32(out, kFormatVersion);
  put_u64(out, universe_);
  put_u32(out, levels_);
  put_u32(out, reps_);
  put_u64(out, seed_);
  for (const Cell& c : cells_) {
    put_u64(out, static_cast<std::uint64_t>(c.count));
    put_u64(out, static_cast<std::uint64_t>(c.index_sum));
    put_u64(out, c.fingerprint);
  }
  return out;
}

L0Sketch L0Sketch::deserialize(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 4 || std::memcmp(bytes.data(), kMagic, 4) != 0) {
    throw Error(Errc::kParse, "bad sketch magic");
  }
  Reader in(bytes.subspan(4));
  if (in.take(4) != kFormatVersion) throw Error(Errc::kParse, "unsupported sketch version");
  const std::uint64_t universe = in.take(8);
  const auto levels = static_cast<std::uint32_t>(in.take(4));
  const auto reps = static_cast<std::uint32_t>(in.take(4));
  const std::uint64_t seed = in.take(8);
  if (universe == 0 || levels != level_count(universe) || reps == 0) {
    throw Error(Errc::kParse, "inconsistent sketch dimensions");
  }
  if (bytes.size() != serialized_size(levels, reps)) {
    throw Error(Errc::kParse, "sketch payload size mismatch");
  }
  L0Sketch s(universe, levels, reps, seed);
  for (Cell& c : s.cells_) {
    c.count = static_cast<std::int64_t>(in.take(8));
    c.index_sum = static_cast<std::int64_t>(in.take(8));
    c.fingerprint = in.take(8);
    if (c.fingerprint >= kP) throw Error(Errc::kParse, "fingerprint outside field");
  }
  return s;
}

}  // namespace kvconn
