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

// Text stream files. Line oriented:
//
//   # comment
//   <n> <k>
//   <u> <v> <+1|-1>
//   ...
//
// '#' starts a comment anywhere on a line; blank lines are ignored. The
// first non-comment line is the header.

#ifndef KVCONN_STREAM_IO_HPP_
#define KVCONN_STREAM_IO_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "kvconn/graph.hpp"

namespace kvconn {

struct StreamFile {
  std::uint32_t n = 0;
  std::uint32_t k = 1;
  std::vector<UpdateEvent> events;
};

// Throws Parse with a 1-based line number in the message.
StreamFile parse_stream(std::string_view text);
StreamFile read_stream_file(const std::string& path);

void write_stream(std::ostream& out, const StreamFile& stream);
std::string format_stream(const StreamFile& stream);
void write_stream_file(const std::string& path, const StreamFile& stream);

}  // namespace kvconn

#endif  // KVCONN_STREAM_IO_HPP_
