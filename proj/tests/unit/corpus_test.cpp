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

#include <algorithm>
#include <cctype>
#include <random>
#include <set>

#include "grg/common/error.hpp"
#include "grg/common/text.hpp"
#include "grg/corpus/dedup.hpp"
#include "grg/corpus/filters.hpp"
#include "grg/corpus/judge.hpp"
#include "grg/corpus/manifest.hpp"
#include "grg/corpus/markup.hpp"
#include "grg/corpus/pipeline.hpp"
#include "test_support.hpp"

namespace grg::corpus {
namespace {

CleanDocument doc(std::string id, std::string body, std::string title = {}) {
  CleanDocument d;
  d.doc_id = std::move(id);
  d.body = std::move(body);
  d.title = std::move(title);
  return d;
}

// Independent shingle oracle: sets of space-joined word windows.
std::set<std::string> shingle_strings(const std::string& body, std::size_t w) {
  std::vector<std::string> toks;
  std::string cur;
  for (char c : body) {
    const auto u = static_cast<unsigned char>(c);
    if (std::isalnum(u) || u >= 0x80) {
      cur.push_back(static_cast<char>(std::tolower(u)));
    } else if (!cur.empty()) {
      toks.push_back(cur);
      cur.clear();
    }
  }
  if (!cur.empty()) toks.push_back(cur);
  std::set<std::string> out;
  if (toks.empty()) return out;
  const std::size_t width = std::min(w, toks.size());
  for (std::size_t i = 0; i + width <= toks.size(); ++i) {
    std::string s;
    for (std::size_t k = 0; k < width; ++k) s += (k ? " " : "") + toks[i + k];
    out.insert(s);
  }
  return out;
}

double oracle_jaccard(const std::set<std::string>& a, const std::set<std::string>& b) {
  if (a.empty() && b.empty()) return 0.0;
  std::size_t inter = 0;
  for (const auto& s : a) inter += b.count(s);
  return static_cast<double>(inter) / static_cast<double>(a.size() + b.size() - inter);
}

std::string numbered_words(std::size_t n, std::string_view stem) {
  std::string out;
  for (std::size_t i = 0; i < n; ++i) out += (i ? " " : "") + std::string(stem) + std::to_string(i);
  return out;
}

TEST(StripMarkup, Examples) {
  EXPECT_EQ(strip_markup("<b>5G NR</b> see <a href='x'>link</a>"), "5G NR see link");
  EXPECT_EQ(strip_markup("plain text"), "plain text");
  EXPECT_EQ(strip_markup("{{Infobox}}Spectrum policy"), "Spectrum policy");
}

TEST(StripMarkup, NestedTemplatesAndIdempotence) {
  const std::string once = strip_markup("{{a|{{b}}}}x <i>y</i>");
  EXPECT_EQ(once, "x y");
  EXPECT_EQ(strip_markup(once), once);
}

TEST(KeywordFilter, Examples) {
  const std::set<std::string> kw{"3gpp", "mimo"};
  auto keep = keyword_filter(doc("a", "the 3GPP Rel-17 standard"), kw);
  EXPECT_TRUE(keep.keep);
  EXPECT_EQ(keep.matched, std::vector<std::string>{"3gpp"});
  EXPECT_FALSE(keyword_filter(doc("b", "cooking recipes"), kw).keep);
  auto hyphen = keyword_filter(doc("c", "MIMO-OFDM systems"), std::set<std::string>{"mimo"});
  EXPECT_TRUE(hyphen.keep);
  EXPECT_EQ(hyphen.matched, std::vector<std::string>{"mimo"});
}

TEST(KeywordFilter, WordBoundaryAgreesWithTokenOracle) {
  // Oracle: a single-word keyword matches iff it is one of the document's tokens.
  const std::vector<std::string> bodies = {"mimosa garden", "MIMO-OFDM", "x-mimo", "mimo5g", "5g/mimo", "pre mimo."};
  for (const auto& b : bodies) {
    const auto toks = text::words(b);
    const bool expected = std::find(toks.begin(), toks.end(), "mimo") != toks.end();
    EXPECT_EQ(keyword_filter(doc("d", b), std::set<std::string>{"mimo"}).keep, expected) << b;
  }
}

TEST(KeywordFilter, EmptyKeywordSetIsConfigError) {
  try {
    keyword_filter(doc("a", "x"), std::set<std::string>{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::config);
  }
}

TEST(StubJudge, TopicAllowlistAndLowQuality) {
  StubJudgeConfig cfg;
  cfg.topics = {{"coding", {"ldpc", "polar code"}}};
  StubJudge judge(cfg);
  auto ldpc = doc("a", "Layered LDPC decoding schedules check node updates to converge in fewer iterations.");
  EXPECT_EQ(judge_filter(ldpc, judge).outcome, JudgeDecision::Outcome::keep);

  std::string lorem;
  for (int i = 0; i < 20; ++i) lorem += "lorem ipsum dolor sit amet ";
  auto filler = doc("b", lorem);
  const auto d = judge_filter(filler, judge);
  EXPECT_EQ(d.outcome, JudgeDecision::Outcome::drop);
  EXPECT_EQ(d.reason, "low-quality");
}

class GarbageJudge final : public JudgeClient {
 public:
  std::string name() const override { return "garbage"; }
  std::string assess(const CleanDocument&) override { return "{\"verdict\": \"maybe\"}"; }
};

TEST(JudgeFilter, MalformedVerdictQuarantines) {
  GarbageJudge judge;
  auto d = doc("a", "text");
  const auto decision = judge_filter(d, judge);
  EXPECT_EQ(decision.outcome, JudgeDecision::Outcome::quarantine);
  ASSERT_FALSE(d.filter_trace.empty());
  EXPECT_EQ(d.filter_trace.back().decision, "quarantine");
}

TEST(StubJudge, MovingTypeTokenRatioMatchesBruteForce) {
  std::mt19937 rng(11);
  for (int round = 0; round < 100; ++round) {
    std::vector<std::string> toks(1 + rng() % 120);
    for (auto& t : toks) t = "w" + std::to_string(rng() % 15);
    const std::size_t window = 1 + rng() % 60;
    double expected = 0.0;
    if (toks.size() <= window) {
      expected = static_cast<double>(std::set<std::string>(toks.begin(), toks.end()).size()) / toks.size();
    } else {
      double sum = 0.0;
      const std::size_t windows = toks.size() - window + 1;
      for (std::size_t i = 0; i < windows; ++i) {
        sum += static_cast<double>(std::set<std::string>(toks.begin() + i, toks.begin() + i + window).size());
      }
      expected = sum / static_cast<double>(windows * window);
    }
    EXPECT_NEAR(StubJudge::moving_type_token_ratio(toks, window), expected, 1e-12);
  }
}

TEST(Dedup, ExactDuplicatesCollapseToSmallestId) {
  auto r = dedup({doc("B", "x y z w"), doc("A", "x y z w")});
  ASSERT_EQ(r.kept.size(), 1u);
  EXPECT_EQ(r.kept[0].doc_id, "A");
  EXPECT_EQ(r.report.duplicate_clusters, (std::vector<std::vector<std::string>>{{"A", "B"}}));
}

TEST(Dedup, DisjointBodiesBothKept) {
  auto r = dedup({doc("A", "alpha beta gamma"), doc("B", "delta epsilon zeta")});
  EXPECT_EQ(r.kept.size(), 2u);
  EXPECT_TRUE(r.report.duplicate_clusters.empty());
}

TEST(Dedup, NearDuplicateWithAppendedSentence) {
  // doc1: 80 distinct words (73 shingles); doc2 appends 6 words (6 more).
  const std::string base = numbered_words(80, "tok");
  const std::string d1 = base + ".";
  const std::string d2 = base + ". " + numbered_words(6, "extra") + ".";
  const std::string d3 = numbered_words(40, "other");
  const double j = oracle_jaccard(shingle_strings(d1, 8), shingle_strings(d2, 8));
  EXPECT_DOUBLE_EQ(j, 73.0 / 79.0);
  EXPECT_DOUBLE_EQ(jaccard(shingle_hashes(d1, 8), shingle_hashes(d2, 8)), j);

  auto r = dedup({doc("doc1", d1), doc("doc2", d2), doc("doc3", d3)});
  EXPECT_EQ(r.report.duplicate_clusters, (std::vector<std::vector<std::string>>{{"doc1", "doc2"}}));
  ASSERT_EQ(r.kept.size(), 2u);
  EXPECT_EQ(r.kept[0].doc_id, "doc1");
  EXPECT_EQ(r.kept[1].doc_id, "doc3");
}

TEST(Dedup, ShingleJaccardMatchesStringOracle) {
  std::mt19937 rng(3);
  for (int round = 0; round < 200; ++round) {
    auto random_body = [&] {
      std::string s;
      const int n = static_cast<int>(rng() % 30);
      for (int i = 0; i < n; ++i) s += "v" + std::to_string(rng() % 6) + " ";
      return s;
    };
    const std::string a = random_body();
    const std::string b = random_body();
    const std::size_t w = 1 + rng() % 4;
    EXPECT_DOUBLE_EQ(jaccard(shingle_hashes(a, w), shingle_hashes(b, w)),
                     oracle_jaccard(shingle_strings(a, w), shingle_strings(b, w)));
  }
}

std::vector<CleanDocument> random_corpus(std::mt19937& rng) {
  std::vector<std::string> pool;
  for (int i = 0; i < 5; ++i) pool.push_back(numbered_words(30, "p" + std::to_string(i) + "w"));
  std::vector<CleanDocument> docs;
  const int n = 2 + static_cast<int>(rng() % 10);
  for (int i = 0; i < n; ++i) {
    std::string body = pool[rng() % pool.size()];
    if (rng() % 3 == 0) body += " tail" + std::to_string(rng() % 2);
    docs.push_back(doc("d" + std::to_string(i), body));
  }
  return docs;
}

std::set<std::string> kept_ids(const DedupResult& r) {
  std::set<std::string> ids;
  for (const auto& d : r.kept) ids.insert(d.doc_id);
  return ids;
}

TEST(Dedup, IdempotentAndOrderInsensitive) {
  std::mt19937 rng(5);
  for (int round = 0; round < 100; ++round) {
    auto docs = random_corpus(rng);
    const auto once = dedup(docs);
    const auto twice = dedup(once.kept);
    EXPECT_EQ(kept_ids(twice), kept_ids(once));
    EXPECT_TRUE(twice.report.duplicate_clusters.empty());

    std::shuffle(docs.begin(), docs.end(), rng);
    const auto shuffled = dedup(docs);
    EXPECT_EQ(kept_ids(shuffled), kept_ids(once));
    EXPECT_EQ(shuffled.report.duplicate_clusters, once.report.duplicate_clusters);
  }
}

TEST(Manifest, InventoryShapeRoundTripsCounts) {
  const std::map<SourceKind, std::size_t> inventory = {
      {SourceKind::standard_3gpp, 15016}, {SourceKind::standard_ieee, 40}, {SourceKind::patent, 697717},
      {SourceKind::paper, 90310},         {SourceKind::code, 14128},       {SourceKind::wiki, 19543}};
  std::string content;
  std::size_t id = 0;
  for (const auto& [kind, count] : inventory) {
    for (std::size_t i = 0; i < count; ++i) {
      content += "{\"doc_id\":\"m" + std::to_string(id++) + "\",\"source_kind\":\"" + std::string(to_string(kind)) +
                 "\",\"locator\":\"inline:x\"}\n";
    }
  }
  const auto m = parse_manifest(content);
  EXPECT_EQ(m.counts_by_kind(), inventory);
  EXPECT_EQ(parse_manifest(to_jsonl(m)).counts_by_kind(), inventory);
}

TEST(Manifest, DuplicateDocIdIsFormatError) {
  const std::string content =
      "{\"doc_id\":\"a\",\"source_kind\":\"wiki\",\"locator\":\"inline:x\"}\n"
      "{\"doc_id\":\"a\",\"source_kind\":\"wiki\",\"locator\":\"inline:y\"}\n";
  try {
    parse_manifest(content);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::format);
    EXPECT_NE(std::string(e.what()).find("'a'"), std::string::npos) << e.what();
  }
}

PipelineConfig six_doc_config() {
  PipelineConfig cfg;
  cfg.keywords = {"3gpp", "5g", "mimo", "ofdm"};
  return cfg;
}

TEST(Preprocess, SixDocFixtureHandTrace) {
  // load: 6 ok; markup: d1/d3 lose tags, d6 loses its template; keyword: d4
  // (cooking) drops; judge: 5 keep; dedup: d3 equals d1 after markup, d1 wins.
  StubJudge judge;
  const auto m = load_manifest(testing::fixture("corpus6/manifest.jsonl"));
  const auto r = preprocess(m, six_doc_config(), &judge);
  EXPECT_EQ(r.report.input_count, 6u);
  EXPECT_EQ(r.report.kept_count, 4u);
  EXPECT_EQ(r.report.dropped_by_stage, (std::map<std::string, std::size_t>{{"keyword", 1}, {"dedup", 1}}));
  EXPECT_EQ(r.report.duplicate_clusters, (std::vector<std::vector<std::string>>{{"d1", "d3"}}));
  EXPECT_TRUE(r.report.quarantined.empty());
  EXPECT_TRUE(r.report.conserved());
  std::vector<std::string> ids;
  for (const auto& d : r.docs) ids.push_back(d.doc_id);
  EXPECT_EQ(ids, (std::vector<std::string>{"d1", "d2", "d5", "d6"}));
  EXPECT_EQ(r.docs[3].body, "Spectrum auctions assign 5G mid-band licences to operators for fixed terms under national regulators.");
  EXPECT_EQ(r.docs[2].title, "OFDM basics");
}

TEST(Preprocess, ParallelRunEqualsSequential) {
  StubJudge judge;
  const auto m = load_manifest(testing::fixture("corpus6/manifest.jsonl"));
  auto cfg = six_doc_config();
  const auto seq = preprocess(m, cfg, &judge);
  cfg.workers = 4;
  const auto par = preprocess(m, cfg, &judge);
  EXPECT_EQ(par.docs, seq.docs);
  EXPECT_EQ(nlohmann::json(par.report), nlohmann::json(seq.report));
}

TEST(Preprocess, EmptyManifest) {
  StubJudge judge;
  const auto r = preprocess(CorpusManifest{}, six_doc_config(), &judge);
  EXPECT_TRUE(r.docs.empty());
  EXPECT_EQ(r.report.input_count, 0u);
  EXPECT_TRUE(r.report.conserved());
}

TEST(Preprocess, QuarantineKeepsStageCountsUnchanged) {
  GarbageJudge judge;
  const auto m = parse_manifest("{\"doc_id\":\"a\",\"source_kind\":\"wiki\",\"locator\":\"inline:3GPP text\"}\n");
  const auto r = preprocess(m, six_doc_config(), &judge);
  EXPECT_EQ(r.report.quarantined.size(), 1u);
  EXPECT_TRUE(r.report.dropped_by_stage.empty());
  EXPECT_TRUE(r.report.conserved());
}

TEST(Preprocess, MajorityLoadFailureFailsRun) {
  StubJudge judge;
  const auto m = parse_manifest(
      "{\"doc_id\":\"a\",\"source_kind\":\"wiki\",\"locator\":\"missing-a.txt\"}\n"
      "{\"doc_id\":\"b\",\"source_kind\":\"wiki\",\"locator\":\"missing-b.txt\"}\n"
      "{\"doc_id\":\"c\",\"source_kind\":\"wiki\",\"locator\":\"inline:3gpp\"}\n",
      "/nonexistent");
  EXPECT_THROW(preprocess(m, six_doc_config(), &judge), Error);
}

TEST(Preprocess, MinorityLoadFailureIsRecorded) {
  StubJudge judge;
  const auto m = parse_manifest(
      "{\"doc_id\":\"a\",\"source_kind\":\"wiki\",\"locator\":\"missing-a.txt\"}\n"
      "{\"doc_id\":\"b\",\"source_kind\":\"wiki\",\"locator\":\"inline:3gpp one\"}\n"
      "{\"doc_id\":\"c\",\"source_kind\":\"wiki\",\"locator\":\"inline:3gpp two\"}\n",
      "/nonexistent");
  const auto r = preprocess(m, six_doc_config(), &judge);
  EXPECT_EQ(r.report.load_errors.size(), 1u);
  EXPECT_EQ(r.report.dropped_by_stage.at("load"), 1u);
  EXPECT_EQ(r.report.kept_count, 2u);
  EXPECT_TRUE(r.report.conserved());
}

TEST(Preprocess, DenylistScreensAfterDedup) {
  StubJudge judge;
  auto cfg = six_doc_config();
  cfg.denylist = {"auctions"};
  const auto r = preprocess(load_manifest(testing::fixture("corpus6/manifest.jsonl")), cfg, &judge);
  EXPECT_EQ(r.report.dropped_by_stage.at("harmful"), 1u);
  EXPECT_EQ(r.report.kept_count, 3u);
  EXPECT_TRUE(r.report.conserved());
}

TEST(CleanDocumentTrace, StageRecordedOnce) {
  auto d = doc("a", "x");
  d.record(stage::load, "keep");
  EXPECT_THROW(d.record(stage::load, "keep"), Error);
}

TEST(CleanDocumentJson, RoundTrip) {
  StubJudge judge;
  const auto r = preprocess(load_manifest(testing::fixture("corpus6/manifest.jsonl")), six_doc_config(), &judge);
  EXPECT_EQ(clean_documents_from_jsonl(to_jsonl(r.docs)), r.docs);
}

}  // namespace
}  // namespace grg::corpus
