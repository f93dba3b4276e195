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

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "grg/corpus/types.hpp"

namespace grg::corpus {

/// Relevance/quality judge for whole documents.
///
/// A judge returns its verdict as raw text in the wire format
///   {"verdict": "keep"}  or  {"verdict": "drop", "reason": "..."}
/// so that LLM-backed judges and the stub share one parser. Transport
/// failures are reported by throwing grg::Error(adapter).
class JudgeClient {
 public:
  virtual ~JudgeClient() = default;
  virtual std::string name() const = 0;
  virtual std::string assess(const CleanDocument& doc) = 0;
};

struct JudgeVerdict {
  bool keep = false;
  std::string reason;
};

/// Throws Error(format) when `raw` is not a well-formed verdict.
JudgeVerdict parse_verdict(std::string_view raw);

struct JudgeDecision {
  enum class Outcome { keep, drop, quarantine };
  Outcome outcome = Outcome::quarantine;
  std::string reason;
  std::string raw;  // judge output, verbatim
};

/// Runs the judge and records the verdict in doc.filter_trace. Judge errors
/// and malformed verdicts yield Outcome::quarantine instead of throwing.
JudgeDecision judge_filter(CleanDocument& doc, JudgeClient& judge);

struct StubJudgeConfig {
  /// topic -> terms. A document passes when it mentions any term of any
  /// topic; an empty table accepts every topic.
  std::map<std::string, std::vector<std::string>> topics;
  /// Moving-average type-token ratio below this marks a document low quality.
  double min_type_token_ratio = 0.35;
  std::size_t ttr_window = 50;
  /// Documents with fewer tokens skip the quality rule.
  std::size_t min_tokens_for_quality = 10;
};

/// Deterministic offline judge: a quality rule (type-token ratio) followed
/// by a topic allowlist. Pure and safe for concurrent calls.
class StubJudge final : public JudgeClient {
 public:
  explicit StubJudge(StubJudgeConfig config = {});

  std::string name() const override { return "stub-judge"; }
  std::string assess(const CleanDocument& doc) override;

  static double moving_type_token_ratio(const std::vector<std::string>& tokens, std::size_t window);

 private:
  StubJudgeConfig config_;
};

}  // namespace grg::corpus
