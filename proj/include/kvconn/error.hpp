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

#ifndef KVCONN_ERROR_HPP_
#define KVCONN_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace kvconn {

// Error kinds raised by the core library. The C API maps these one-to-one
// onto kvc_status codes, so keep the two lists in sync.
enum class Errc {
  kInvalidArgument,
  kSelfLoop,
  kInvalidVertex,
  kNegativeMultiplicity,
  kBadDelta,
  kIndexOutOfRange,
  kSeedMismatch,
  kTooFewVertices,
  kTooLarge,
  kTooSmall,
  kBadShape,
  kUnknownName,
  kSpaceExceeded,
  kInsertionOnlyViolation,
  kBadN,
  kParse,
  kIo,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace kvconn

#endif  // KVCONN_ERROR_HPP_
