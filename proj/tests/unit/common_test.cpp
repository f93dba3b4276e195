// Copyright 2026 The GRG Engine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>

#include "grg/common/binary.hpp"
#include "grg/common/error.hpp"
#include "grg/common/io.hpp"
#include "grg/common/text.hpp"
#include "test_support.hpp"

namespace grg {
namespace {

TEST(Fnv1a64, PublishedVectors) {
  EXPECT_EQ(text::fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(text::fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
  EXPECT_EQ(text::fnv1a64("foobar"), 0x85944171f73967e8ULL);
  static_assert(text::fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
}

TEST(Text, Hex64IsZeroPadded) {
  EXPECT_EQ(text::hex64(0), "0000000000000000");
  EXPECT_EQ(text::hex64(0xabcULL), "0000000000000abc");
}

TEST(Text, CollapseWhitespace) {
  EXPECT_EQ(text::collapse_whitespace("  a \t\n b  c "), "a b c");
  EXPECT_EQ(text::collapse_whitespace(" \n "), "");
}

TEST(Text, WordsLowercaseAndSplitOnPunctuation) {
  EXPECT_EQ(text::words("MIMO-OFDM, 5G!"), (std::vector<std::string>{"mimo", "ofdm", "5g"}));
  EXPECT_TRUE(text::words("  ...  ").empty());
}

TEST(Text, ContainsWordRespectsBoundaries) {
  EXPECT_TRUE(text::contains_word("mimo-ofdm systems", "mimo"));
  EXPECT_FALSE(text::contains_word("mimosa", "mimo"));
  EXPECT_TRUE(text::contains_word("a mimosa and mimo", "mimo"));
  EXPECT_FALSE(text::contains_word("anything", ""));
}

TEST(Text, Utf8OffsetsCountCodePoints) {
  const std::string s = "a\xC3\xA9\xE2\x82\xAC";  // a, e-acute, euro sign
  EXPECT_EQ(text::utf8_offsets(s), (std::vector<std::size_t>{0, 1, 3, 6}));
  EXPECT_EQ(text::utf8_length(s), 3u);
}

TEST(Text, SanitizeReplacesInvalidSequences) {
  EXPECT_EQ(text::sanitize_utf8("ok"), "ok");
  EXPECT_EQ(text::sanitize_utf8("a\xFF" "b"), "a\xEF\xBF\xBD" "b");
  EXPECT_EQ(text::sanitize_utf8("\xC0\xAF"), "\xEF\xBF\xBD\xEF\xBF\xBD");  // overlong
  EXPECT_EQ(text::sanitize_utf8("\xED\xA0\x80"), "\xEF\xBF\xBD\xEF\xBF\xBD\xEF\xBF\xBD");  // surrogate
  const std::string valid = "\xE2\x80\x94\xF0\x9F\x93\xA1";
  EXPECT_EQ(text::sanitize_utf8(valid), valid);
}

TEST(Text, SanitizeIsIdempotentOnRandomBytes) {
  std::mt19937 rng(7);
  for (int round = 0; round < 200; ++round) {
    std::string s(rng() % 40, '\0');
    for (char& c : s) c = static_cast<char>(rng() & 0xFF);
    const std::string once = text::sanitize_utf8(s);
    EXPECT_EQ(text::sanitize_utf8(once), once);
  }
}

TEST(Io, TermListSkipsCommentsAndBlankLines) {
  const auto terms = io::parse_term_list("# header\n3gpp\n\n  mimo  # trailing\nc#\r\n");
  EXPECT_EQ(terms, (std::vector<std::string>{"3gpp", "mimo", "c#"}));
}

TEST(Io, WriteThenReadCreatesParents) {
  testing::TempDir dir;
  const auto p = dir / "a/b/c.txt";
  io::write_file(p, "payload\n");
  EXPECT_EQ(io::read_file(p), "payload\n");
}

TEST(Io, MissingFileIsIoError) {
  try {
    io::read_file("/nonexistent/grg/file");
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::io);
  }
}

TEST(Io, ParallelForVisitsEveryIndexOnce) {
  std::vector<int> hits(1000, 0);
  io::parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) ASSERT_EQ(h, 1);
}

TEST(Binary, LittleEndianLayout) {
  binary::Writer w;
  w.le<std::uint32_t>(0x01020304u);
  w.str("ab");
  const std::string bytes = w.data();
  EXPECT_EQ(bytes, std::string("\x04\x03\x02\x01\x02\x00\x00\x00" "ab", 10));
  binary::Reader r(bytes);
  EXPECT_EQ(r.le<std::uint32_t>(), 0x01020304u);
  EXPECT_EQ(r.str(), "ab");
  EXPECT_TRUE(r.done());
}

TEST(Binary, FloatRoundTripIsBitExact) {
  binary::Writer w;
  for (float f : {0.0f, -0.0f, 1.5f, 3.4e38f, 1e-45f}) w.f32(f);
  binary::Reader r(w.data());
  for (float f : {0.0f, -0.0f, 1.5f, 3.4e38f, 1e-45f}) {
    EXPECT_EQ(std::bit_cast<std::uint32_t>(r.f32()), std::bit_cast<std::uint32_t>(f));
  }
}

TEST(Binary, TruncationIsFormatError) {
  binary::Reader r(std::string_view("\x05\x00\x00\x00" "ab", 6));
  try {
    r.str();
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::format);
  }
}

TEST(Error, KindNames) {
  EXPECT_EQ(to_string(ErrorKind::config), "config");
  EXPECT_EQ(to_string(ErrorKind::not_found), "not_found");
  EXPECT_EQ(to_string(ErrorKind::adapter), "adapter");
  const Error e(ErrorKind::adapter, "boom", true);
  EXPECT_TRUE(e.retryable());
  EXPECT_STREQ(e.what(), "boom");
}

}  // namespace
}  // namespace grg
