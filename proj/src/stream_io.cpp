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

#include "kvconn/stream_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "kvconn/error.hpp"

namespace kvconn {
namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw Error(Errc::kParse, "line " + std::to_string(line_no) + ": " + what);
}

std::uint32_t parse_u32(std::string_view s, std::size_t line_no) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    fail(line_no, "expected a non-negative integer, got '" + std::string(s) + "'");
  }
  return v;
}

int parse_delta(std::string_view s, std::size_t line_no) {
  if (s == "+1" || s == "1") return +1;
  if (s == "-1") return -1;
  fail(line_no, "delta must be +1 or -1, got '" + std::string(s) + "'");
}

}  // namespace

StreamFile parse_stream(std::string_view text) {
  StreamFile out;
  bool have_header = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto fields = split_fields(line);
    if (fields.empty()) continue;
    if (!have_header) {
      if (fields.size() != 2) fail(line_no, "header must be '<n> <k>'");
      out.n = parse_u32(fields[0], line_no);
      out.k = parse_u32(fields[1], line_no);
      if (out.n == 0) fail(line_no, "n must be >= 1");
      if (out.k == 0) fail(line_no, "k must be >= 1");
      have_header = true;
      continue;
    }
    if (fields.size() != 3) fail(line_no, "event must be '<u> <v> <+1|-1>'");
    UpdateEvent e{parse_u32(fields[0], line_no), parse_u32(fields[1], line_no),
                  parse_delta(fields[2], line_no)};
    if (e.u == e.v) fail(line_no, "self-loop on vertex " + std::to_string(e.u));
    if (e.u >= out.n || e.v >= out.n) fail(line_no, "vertex out of range for n=" +
                                                         std::to_string(out.n));
    out.events.push_back(e);
  }
  if (!have_header) throw Error(Errc::kParse, "missing '<n> <k>' header");
  return out;
}

StreamFile read_stream_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kIo, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_stream(buf.str());
}

void write_stream(std::ostream& out, const StreamFile& stream) {
  out << stream.n << ' ' << stream.k << '\n';
  for (const UpdateEvent& e : stream.events) {
    out << e.u << ' ' << e.v << ' ' << (e.delta > 0 ? "+1" : "-1") << '\n';
  }
}

std::string format_stream(const StreamFile& stream) {
  std::ostringstream out;
  write_stream(out, stream);
  return out.str();
}

void write_stream_file(const std::string& path, const StreamFile& stream) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::kIo, "cannot write " + path);
  write_stream(out, stream);
  if (!out) throw Error(Errc::kIo, "write failed for " + path);
}

}  // namespace kvconn
