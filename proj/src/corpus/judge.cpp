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

#include "grg/corpus/judge.hpp"

#include <unordered_map>

#include "grg/common/error.hpp"
#include "grg/common/text.hpp"
#include "grg/corpus/filters.hpp"

namespace grg::corpus {

JudgeVerdict parse_verdict(std::string_view raw) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(raw);
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorKind::format, "judge verdict is not JSON");
  }
  if (!j.is_object() || !j.contains("verdict") || !j["verdict"].is_string()) {
    throw Error(ErrorKind::format, "judge verdict lacks a string 'verdict' field");
  }
  const auto verdict = j["verdict"].get<std::string>();
  JudgeVerdict v;
  if (verdict == "keep") {
    v.keep = true;
  } else if (verdict == "drop") {
    v.keep = false;
  } else {
    throw Error(ErrorKind::format, "judge verdict must be keep or drop, got '" + verdict + "'");
  }
  if (auto it = j.find("reason"); it != j.end()) {
    if (!it->is_string()) throw Error(ErrorKind::format, "judge reason must be a string");
    v.reason = it->get<std::string>();
  }
  return v;
}

JudgeDecision judge_filter(CleanDocument& doc, JudgeClient& judge) {
  JudgeDecision d;
  try {
    d.raw = judge.assess(doc);
    const JudgeVerdict v = parse_verdict(d.raw);
    d.outcome = v.keep ? JudgeDecision::Outcome::keep : JudgeDecision::Outcome::drop;
    d.reason = v.reason;
    doc.record(stage::judge, v.keep ? "keep" : "drop", d.raw);
  } catch (const Error& e) {
    d.outcome = JudgeDecision::Outcome::quarantine;
    d.reason = e.what();
    doc.record(stage::judge, "quarantine", d.reason);
  }
  return d;
}

StubJudge::StubJudge(StubJudgeConfig config) : config_(std::move(config)) {}

double StubJudge::moving_type_token_ratio(const std::vector<std::string>& tokens, std::size_t window) {
  if (tokens.empty()) return 1.0;
  if (window == 0 || tokens.size() <= window) {
    std::unordered_map<std::string_view, int> seen;
    for (const auto& t : tokens) ++seen[t];
    return static_cast<double>(seen.size()) / static_cast<double>(tokens.size());
  }
  // Sliding window keeps the ratio independent of document length.
  std::unordered_map<std::string_view, int> counts;
  for (std::size_t i = 0; i < window; ++i) ++counts[tokens[i]];
  double sum = static_cast<double>(counts.size());
  std::size_t windows = 1;
  for (std::size_t i = window; i < tokens.size(); ++i) {
    auto& out = counts[tokens[i - window]];
    if (--out == 0) counts.erase(tokens[i - window]);
    ++counts[tokens[i]];
    sum += static_cast<double>(counts.size());
    ++windows;
  }
  return sum / static_cast<double>(windows * window);
}

std::string StubJudge::assess(const CleanDocument& doc) {
  const auto tokens = text::words(doc.body);
  if (tokens.size() >= config_.min_tokens_for_quality) {
    const double ttr = moving_type_token_ratio(tokens, config_.ttr_window);
    if (ttr < config_.min_type_token_ratio) {
      return nlohmann::json{{"verdict", "drop"}, {"reason", "low-quality"}}.dump();
    }
  }
  if (config_.topics.empty()) return nlohmann::json{{"verdict", "keep"}}.dump();
  for (const auto& [topic, terms] : config_.topics) {
    const TermMatcher matcher(terms);
    if (!matcher.matches({doc.title, doc.body}).empty()) {
      return nlohmann::json{{"verdict", "keep"}, {"reason", "topic:" + topic}}.dump();
    }
  }
  return nlohmann::json{{"verdict", "drop"}, {"reason", "off-topic"}}.dump();
}

}  // namespace grg::corpus
