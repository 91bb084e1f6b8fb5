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

#ifndef KVCONN_UNION_FIND_HPP_
#define KVCONN_UNION_FIND_HPP_

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace kvconn {

// Union by size with path halving.
class UnionFind {
 public:
  explicit UnionFind(std::size_t size) : parent_(size), size_(size, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns false if a and b were already in the same set.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

  bool same(std::size_t a, std::size_t b) { return find(a) == find(b); }

  // Canonical labels: label[x] = smallest element of x's set.
  std::vector<std::size_t> canonical_labels() {
    std::vector<std::size_t> smallest(parent_.size(), parent_.size());
    std::vector<std::size_t> label(parent_.size());
    for (std::size_t x = 0; x < parent_.size(); ++x) {
      std::size_t r = find(x);
      if (smallest[r] == parent_.size()) smallest[r] = x;
      label[x] = smallest[r];
    }
    return label;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace kvconn

#endif  // KVCONN_UNION_FIND_HPP_
