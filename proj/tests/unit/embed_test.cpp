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

#include <cctype>
#include <cmath>
#include <random>

#include "grg/common/binary.hpp"
#include "grg/common/error.hpp"
#include "grg/common/io.hpp"
#include "grg/embed/chunk.hpp"
#include "grg/embed/embedding.hpp"
#include "grg/embed/vector_file.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

namespace grg::embed {
namespace {

using testing::cp_offsets;
using testing::random_body;
using testing::reconstruct;

TEST(ChunkText, TwoHundredFiftyCharsNoOverlap) {
  const std::string body(250, 'x');
  const auto chunks = chunk_text("d", body, {100, 0, 40});
  ASSERT_EQ(chunks.size(), 3u);
  EXPECT_EQ(chunks[0].span, (Span{0, 100}));
  EXPECT_EQ(chunks[1].span, (Span{100, 200}));
  EXPECT_EQ(chunks[2].span, (Span{200, 250}));
  EXPECT_EQ(chunks[1].chunk_id, "d#1");
}

TEST(ChunkText, TwoHundredFiftyCharsOverlapTwenty) {
  const std::string body(250, 'x');
  const auto chunks = chunk_text("d", body, {100, 20, 40});
  ASSERT_EQ(chunks.size(), 3u);
  EXPECT_EQ(chunks[0].span, (Span{0, 100}));
  EXPECT_EQ(chunks[1].span, (Span{80, 180}));
  EXPECT_EQ(chunks[2].span, (Span{160, 250}));
  EXPECT_EQ(chunks[0].text.substr(80), chunks[1].text.substr(0, 20));
}

TEST(ChunkText, SnapsBackToWhitespace) {
  // A space at index 89 moves the split to 90.
  std::string body(250, 'x');
  body[89] = ' ';
  const auto chunks = chunk_text("d", body, {100, 0, 40});
  EXPECT_EQ(chunks[0].span, (Span{0, 90}));
  EXPECT_EQ(reconstruct(body, chunks), body);
}

TEST(ChunkText, ShortBodyIsOneChunkAndEmptyBodyIsNone) {
  const auto one = chunk_text("d", "short body", {100, 20, 40});
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].text, "short body");
  EXPECT_TRUE(chunk_text("d", "", {100, 20, 40}).empty());
}

TEST(ChunkText, InvalidPolicyIsContractError) {
  EXPECT_THROW(chunk_text("d", "abc", {10, 10, 4}), Error);
}

TEST(ChunkText, ReconstructionAndOverlapProperty) {
  std::mt19937 rng(17);
  for (int round = 0; round < 300; ++round) {
    const std::string body = random_body(rng, 3000);
    const std::size_t target = 2 + rng() % 400;
    const std::size_t overlap = rng() % target;
    const ChunkPolicy policy{target, overlap, rng() % 60};
    const auto chunks = chunk_text("doc", body, policy);
    ASSERT_EQ(reconstruct(body, chunks), body) << "target=" << target << " overlap=" << overlap;
    for (std::size_t i = 0; i < chunks.size(); ++i) {
      EXPECT_LE(chunks[i].span.size(), target);
      EXPECT_GT(chunks[i].span.size(), 0u);
      if (i + 1 < chunks.size()) {
        EXPECT_EQ(chunks[i + 1].span.start, chunks[i].span.end - overlap);
      }
    }
    if (!chunks.empty()) {
      EXPECT_EQ(chunks.back().span.end, cp_offsets(body).size() - 1);
    }
  }
}

TEST(ChunkStore, JsonlRoundTrip) {
  const auto chunks = chunk_text("doc", "alpha beta gamma delta epsilon zeta eta theta", {12, 3, 4});
  EXPECT_EQ(chunks_from_jsonl(chunks_to_jsonl(chunks)), chunks);
}

// Independent reference embedder: lowercase, split on non-alphanumerics,
// character trigrams (whole token when shorter), FNV-1a seeded buckets.
std::vector<double> oracle_embed(const std::string& text, std::size_t dim) {
  auto fnv = [](const std::string& s, std::uint64_t h) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    return h;
  };
  const std::uint64_t basis = fnv("grg-trigram-v1", 14695981039346656037ULL);
  std::vector<double> v(dim, 0.0);
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) return;
    if (tok.size() < 3) {
      v[fnv(tok, basis) % dim] += 1.0;
    } else {
      for (std::size_t i = 0; i + 3 <= tok.size(); ++i) v[fnv(tok.substr(i, 3), basis) % dim] += 1.0;
    }
    tok.clear();
  };
  for (char c : text) {
    const auto u = static_cast<unsigned char>(c);
    if (std::isalnum(u) || u >= 0x80) {
      tok.push_back(static_cast<char>(std::tolower(u)));
    } else {
      flush();
    }
  }
  flush();
  double norm = 0.0;
  for (double x : v) norm += x * x;
  for (double& x : v) x /= std::sqrt(norm);
  return v;
}

double oracle_cosine(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] * b[i];
  return d;
}

TEST(TestEmbedder, MatchesReferenceOracle) {
  auto e = test_embedder(64);
  for (const std::string s : {"mimo", "OFDM waveform", "5G NR, Rel-17!", "a b", "\xC3\xA9t\xC3\xA9 radio"}) {
    const auto got = embed_text(s, *e);
    const auto want = oracle_embed(s, 64);
    ASSERT_EQ(got.dim(), 64u);
    for (std::size_t i = 0; i < 64; ++i) EXPECT_NEAR(got.values[i], want[i], 1e-6) << s << " @" << i;
  }
}

TEST(TestEmbedder, Examples) {
  auto e = test_embedder(64);
  EXPECT_EQ(embed_text("mimo", *e), embed_text("mimo", *e));
  EXPECT_EQ(embed_text("mimo", *e), embed_text("MIMO", *e));

  const double plural = oracle_cosine(oracle_embed("ofdm waveform", 64), oracle_embed("ofdm waveforms", 64));
  EXPECT_GT(plural, 0.6);
  EXPECT_NEAR(cosine(embed_text("ofdm waveform", *e), embed_text("ofdm waveforms", *e)), plural, 1e-6);

  const double unrelated = oracle_cosine(oracle_embed("paging occasion", 64), oracle_embed("tomato basil", 64));
  EXPECT_LT(unrelated, 0.5);
  EXPECT_NEAR(cosine(embed_text("paging occasion", *e), embed_text("tomato basil", *e)), unrelated, 1e-6);
}

TEST(TestEmbedder, EmptyTextGivesSentinel) {
  auto e = test_embedder(64);
  const auto v = embed_text("", *e);
  EXPECT_EQ(v, empty_text_sentinel(64));
  EXPECT_TRUE(v.normalized);
  EXPECT_EQ(embed_text("...", *e), v);  // no tokens
  EXPECT_THROW(test_embedder(8), Error);
}

TEST(Cosine, Examples) {
  const std::vector<float> x{1, 0}, y{0, 1}, z{1, 1};
  EXPECT_NEAR(cosine(x, x), 1.0, 1e-9);
  EXPECT_NEAR(cosine(x, y), 0.0, 1e-12);
  EXPECT_NEAR(cosine(z, x), 0.7071, 1e-4);
  EXPECT_EQ(cosine(std::vector<float>{0, 0}, x), 0.0);
  EXPECT_THROW(cosine(x, std::vector<float>{1, 2, 3}), Error);
}

TEST(Cosine, SymmetricAndScaleInvariant) {
  std::mt19937 rng(23);
  std::normal_distribution<float> g;
  for (int round = 0; round < 200; ++round) {
    std::vector<float> a(16), b(16);
    for (auto& v : a) v = g(rng);
    for (auto& v : b) v = g(rng);
    std::vector<float> scaled = a;
    const float lambda = 0.1f + static_cast<float>(rng() % 100);
    for (auto& v : scaled) v *= lambda;
    EXPECT_NEAR(cosine(a, b), cosine(b, a), 1e-12);
    EXPECT_NEAR(cosine(scaled, b), cosine(a, b), 1e-6);
  }
}

class FailingEmbedder final : public Embedder {
 public:
  std::string name() const override { return "failing"; }
  std::size_t dim() const override { return 16; }
  std::vector<float> embed_raw(std::string_view) override { throw std::runtime_error("backend down"); }
};

TEST(EmbedText, BackendFailureIsRetryableAdapterError) {
  FailingEmbedder e;
  try {
    embed_text("x", e);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::adapter);
    EXPECT_TRUE(err.retryable());
    EXPECT_NE(std::string(err.what()).find("backend down"), std::string::npos);
  }
}

TEST(VectorFile, HeaderLayoutIsBitExact) {
  VectorSet set{2, {{"c#0", {1.0f, -2.0f}}}};
  binary::Writer w;
  encode_vectors(w, set);
  const std::string expected = std::string("GRGV") + std::string("\x01\x00\x00\x00", 4) +
                               std::string("\x02\x00\x00\x00", 4) + std::string("\x01\x00\x00\x00\x00\x00\x00\x00", 8) +
                               std::string("\x03\x00\x00\x00", 4) + "c#0" + std::string("\x00\x00\x80\x3f", 4) +
                               std::string("\x00\x00\x00\xc0", 4);
  EXPECT_EQ(w.data(), expected);
}

TEST(VectorFile, RoundTripAndCorruption) {
  testing::TempDir dir;
  VectorSet set{3, {{"a", {0.1f, 0.2f, 0.3f}}, {"b", {-1.0f, 0.0f, 1e-7f}}}};
  write_vector_file(dir / "v.grgv", set);
  const auto back = read_vector_file(dir / "v.grgv");
  EXPECT_EQ(back.dim, 3u);
  EXPECT_EQ(back.records, set.records);

  std::string bytes = io::read_file(dir / "v.grgv");
  io::write_file(dir / "trunc.grgv", bytes.substr(0, bytes.size() - 2));
  EXPECT_THROW(read_vector_file(dir / "trunc.grgv"), Error);
  bytes[0] = 'X';
  io::write_file(dir / "magic.grgv", bytes);
  EXPECT_THROW(read_vector_file(dir / "magic.grgv"), Error);
}

}  // namespace
}  // namespace grg::embed
