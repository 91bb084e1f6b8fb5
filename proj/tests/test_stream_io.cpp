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

#include <filesystem>

#include "kvconn/error.hpp"
#include "kvconn/instances.hpp"
#include "kvconn/stream_io.hpp"

namespace kvconn {
namespace {

TEST(StreamIo, ParsesCommentsBlankLinesAndSigns) {
  const StreamFile s = parse_stream(
      "# leading comment\n"
      "\n"
      "4 2   # header\n"
      "0 1 +1\n"
      "1 2 1\r\n"
      "  # indented comment\n"
      "0 1 -1\n");
  EXPECT_EQ(s.n, 4u);
  EXPECT_EQ(s.k, 2u);
  const std::vector<UpdateEvent> want{{0, 1, +1}, {1, 2, +1}, {0, 1, -1}};
  EXPECT_EQ(s.events, want);
}

void expect_parse_error(const std::string& text, const std::string& fragment) {
  try {
    parse_stream(text);
    FAIL() << "accepted: " << text;
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kParse);
    EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
  }
}

TEST(StreamIo, ReportsLineNumbers) {
  expect_parse_error("3 1\n0 1 +1\n0 1 +2\n", "line 3");
  expect_parse_error("3 1\n0 0 +1\n", "line 2");
  expect_parse_error("3 1\n\n0 7 +1\n", "line 3");
  expect_parse_error("3\n", "line 1");
  expect_parse_error("x 1\n", "line 1");
  expect_parse_error("3 1\n0 1\n", "line 2");
  expect_parse_error("# only comments\n", "header");
  expect_parse_error("0 1\n", "n must be");
}

TEST(StreamIo, RoundTripsThroughFile) {
  StreamFile s{20, 3, gen_random_stream(20, 0.4, 0.3, 9)};
  const auto path = std::filesystem::temp_directory_path() / "kvconn_stream_io_test.txt";
  write_stream_file(path.string(), s);
  const StreamFile back = read_stream_file(path.string());
  std::filesystem::remove(path);
  EXPECT_EQ(back.n, s.n);
  EXPECT_EQ(back.k, s.k);
  EXPECT_EQ(back.events, s.events);
  EXPECT_EQ(format_stream(back), format_stream(s));
}

TEST(StreamIo, MissingFileIsIoError) {
  try {
    read_stream_file("/nonexistent/kvconn/stream.txt");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kIo);
  }
}

}  // namespace
}  // namespace kvconn
