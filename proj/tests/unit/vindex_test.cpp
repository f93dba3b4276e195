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

#include "grg/common/error.hpp"
#include "grg/common/io.hpp"
#include "grg/vindex/index.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

namespace grg::vindex {
namespace {

using Rows = std::vector<std::pair<std::string, std::vector<float>>>;

Rows random_rows(std::mt19937_64& rng, std::size_t n, std::size_t dim, std::size_t twins = 0) {
  Rows rows;
  for (std::size_t i = 0; i < n; ++i) rows.emplace_back("c" + std::to_string(i), testing::random_unit(rng, dim));
  // Exact copies under other ids exercise the tie-break.
  for (std::size_t t = 0; t < twins; ++t) rows.emplace_back("t" + std::to_string(t), rows[t].second);
  return rows;
}

VectorIndex build(const Rows& rows, IndexMode mode, const SmallWorldParams& params = {}) {
  std::vector<VectorIndex::Entry> entries;
  for (const auto& [id, v] : rows) entries.emplace_back(id, embed::EmbeddingVector{v, true});
  return VectorIndex::build(std::move(entries), mode, params);
}

void expect_equal(const std::vector<SearchHit>& got, const std::vector<testing::OracleHit>& want) {
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    EXPECT_EQ(got[i].chunk_id, want[i].id) << "rank " << i + 1;
    EXPECT_EQ(got[i].score, want[i].score);
    EXPECT_EQ(got[i].rank, i + 1);
  }
}

TEST(ExactIndex, MatchesBruteForceIncludingTies) {
  std::mt19937_64 rng(41);
  const auto rows = random_rows(rng, 200, 16, 20);
  const auto index = build(rows, IndexMode::exact);
  for (int q = 0; q < 30; ++q) {
    // Half the queries hit a stored vector exactly, so twins tie at the top.
    const auto query = q % 2 ? testing::random_unit(rng, 16) : rows[static_cast<std::size_t>(q)].second;
    for (std::size_t k : {1u, 5u, 20u}) {
      expect_equal(index.search(embed::EmbeddingVector{query, true}, k), testing::brute_force_top_k(rows, query, k));
    }
  }
}

TEST(ExactIndex, TwinsOrderedById) {
  const Rows rows = {{"b", {1.0f, 0.0f}}, {"a", {1.0f, 0.0f}}, {"c", {0.0f, 1.0f}}};
  const auto hits = build(rows, IndexMode::exact).search(embed::EmbeddingVector{{1.0f, 0.0f}, true}, 3);
  ASSERT_EQ(hits.size(), 3u);
  EXPECT_EQ(hits[0].chunk_id, "a");
  EXPECT_EQ(hits[1].chunk_id, "b");
  EXPECT_EQ(hits[2].chunk_id, "c");
}

TEST(ExactIndex, KLargerThanIndexReturnsAll) {
  std::mt19937_64 rng(1);
  const auto rows = random_rows(rng, 5, 8);
  EXPECT_EQ(build(rows, IndexMode::exact).search(embed::EmbeddingVector{rows[0].second, true}, 50).size(), 5u);
}

TEST(IndexBuild, Contracts) {
  std::mt19937_64 rng(2);
  auto rows = random_rows(rng, 3, 8);
  EXPECT_THROW(build({}, IndexMode::exact), Error);
  auto dup = rows;
  dup.push_back(rows[0]);
  try {
    build(dup, IndexMode::exact);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::contract);
    EXPECT_NE(std::string(e.what()).find("'c0'"), std::string::npos);
  }
  auto not_unit = rows;
  not_unit[1].second[0] += 0.5f;
  EXPECT_THROW(build(not_unit, IndexMode::exact), Error);
  auto bad_dim = rows;
  bad_dim[2].second.push_back(0.0f);
  EXPECT_THROW(build(bad_dim, IndexMode::exact), Error);

  const auto index = build(rows, IndexMode::exact);
  EXPECT_THROW(index.search(embed::EmbeddingVector{rows[0].second, true}, 0), Error);
  EXPECT_THROW(index.search(embed::EmbeddingVector{{1.0f}, true}, 1), Error);
}

TEST(ApproximateIndex, RecallAtTenOnModerateInstance) {
  std::mt19937_64 rng(43);
  const auto rows = random_rows(rng, 600, 32);
  const auto exact = build(rows, IndexMode::exact);
  const auto approx = build(rows, IndexMode::approximate);
  std::size_t found = 0;
  std::size_t total = 0;
  for (int q = 0; q < 50; ++q) {
    const embed::EmbeddingVector query{testing::random_unit(rng, 32), true};
    std::set<std::string> truth;
    for (const auto& h : exact.search(query, 10)) truth.insert(h.chunk_id);
    for (const auto& h : approx.search(query, 10)) found += truth.count(h.chunk_id);
    total += 10;
  }
  EXPECT_GE(static_cast<double>(found) / static_cast<double>(total), 0.95);
}

TEST(ApproximateIndex, BuildIsDeterministicForSeed) {
  std::mt19937_64 rng(44);
  const auto rows = random_rows(rng, 150, 16);
  const auto a = build(rows, IndexMode::approximate);
  const auto b = build(rows, IndexMode::approximate);
  ASSERT_TRUE(a.graph() && b.graph());
  EXPECT_EQ(*a.graph(), *b.graph());
}

TEST(ApproximateIndex, NeighborListsRespectDegreeBounds) {
  std::mt19937_64 rng(45);
  const SmallWorldParams params{4, 32, 16, 9};
  const auto index = build(random_rows(rng, 200, 8), IndexMode::approximate, params);
  for (const auto& node : index.graph()->links()) {
    for (std::size_t layer = 0; layer < node.size(); ++layer) {
      EXPECT_LE(node[layer].size(), layer == 0 ? 2u * params.m : params.m);
      for (auto nb : node[layer]) EXPECT_LT(nb, 200u);
    }
  }
}

TEST(IndexFile, PersistLoadRoundTripBothModes) {
  testing::TempDir dir;
  std::mt19937_64 rng(46);
  const auto rows = random_rows(rng, 120, 16, 3);
  for (auto mode : {IndexMode::exact, IndexMode::approximate}) {
    const auto index = build(rows, mode);
    const auto path = dir / ("i-" + std::string(to_string(mode)) + ".grgi");
    index.persist(path);
    const auto loaded = VectorIndex::load(path);
    EXPECT_EQ(loaded.mode(), mode);
    EXPECT_EQ(loaded.ids(), index.ids());
    EXPECT_EQ(loaded.graph().has_value(), mode == IndexMode::approximate);
    for (int q = 0; q < 10; ++q) {
      const embed::EmbeddingVector query{testing::random_unit(rng, 16), true};
      EXPECT_EQ(loaded.search(query, 7), index.search(query, 7));
    }
  }
}

TEST(IndexFile, CorruptFilesAreFormatErrors) {
  testing::TempDir dir;
  std::mt19937_64 rng(47);
  build(random_rows(rng, 20, 8), IndexMode::approximate).persist(dir / "i.grgi");
  const std::string bytes = io::read_file(dir / "i.grgi");
  io::write_file(dir / "short.grgi", bytes.substr(0, bytes.size() / 2));
  for (const auto& name : {"short.grgi"}) {
    try {
      VectorIndex::load(dir / name);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::format);
    }
  }
  std::string bad = bytes;
  bad[1] = 'Z';
  io::write_file(dir / "magic.grgi", bad);
  EXPECT_THROW(VectorIndex::load(dir / "magic.grgi"), Error);
}

TEST(IndexMode, ParseAndName) {
  EXPECT_EQ(parse_index_mode("exact"), IndexMode::exact);
  EXPECT_EQ(parse_index_mode("approximate"), IndexMode::approximate);
  EXPECT_THROW(parse_index_mode("hnsw"), Error);
}

}  // namespace
}  // namespace grg::vindex
