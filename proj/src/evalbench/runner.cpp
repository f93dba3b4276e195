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

#include "grg/evalbench/runner.hpp"

#include <cstdio>

namespace grg::evalbench {

using nlohmann::json;

EvalReport run_eval(const std::vector<McqQuestion>& questions, engine::Mode mode, const engine::Resources& res,
                    const engine::EngineOptions& options, engine::GeneratorClient& generator) {
  EvalReport report;
  report.mode = mode;
  for (const auto& q : questions) {
    TranscriptEntry t;
    t.qid = q.qid;
    t.difficulty = q.difficulty;
    try {
      const auto a = engine::answer({render_query(q), {}}, mode, res, options, generator);
      t.context_chars = a.context.total_chars;
      if (auto choice = parse_choice(a.answer, q.labels())) t.chosen = *choice;
    } catch (const engine::GenerationFailure& e) {
      t.context_chars = e.context().total_chars;
      t.error = e.what();
    }
    t.correct = !t.chosen.empty() && t.chosen == q.answer_key;
    ++report.total;
    auto& tier = report.per_difficulty[q.difficulty];
    ++tier.total;
    if (t.correct) {
      ++report.correct;
      ++tier.correct;
    }
    report.transcript.push_back(std::move(t));
  }
  return report;
}

json report_to_json(const EvalReport& report) {
  json tiers = json::object();
  for (const auto& [d, s] : report.per_difficulty) {
    tiers[std::string(to_string(d))] = {{"total", s.total}, {"correct", s.correct}, {"accuracy", s.accuracy()}};
  }
  json transcript = json::array();
  for (const auto& t : report.transcript) {
    json row = {{"qid", t.qid},
                {"difficulty", to_string(t.difficulty)},
                {"chosen", t.chosen.empty() ? json(nullptr) : json(t.chosen)},
                {"correct", t.correct},
                {"context_chars", t.context_chars}};
    if (!t.error.empty()) row["error"] = t.error;
    transcript.push_back(std::move(row));
  }
  return {{"mode", engine::to_string(report.mode)},
          {"total", report.total},
          {"correct", report.correct},
          {"accuracy", report.accuracy()},
          {"per_difficulty", tiers},
          {"transcript", transcript}};
}

std::string report_table(const EvalReport& report) {
  std::string out;
  char line[128];
  std::snprintf(line, sizeof line, "mode: %s\n%-14s %7s %7s %9s\n", std::string(engine::to_string(report.mode)).c_str(),
                "tier", "correct", "total", "accuracy");
  out += line;
  auto row = [&](std::string_view name, std::size_t correct, std::size_t total, double acc) {
    std::snprintf(line, sizeof line, "%-14s %7zu %7zu %9.4f\n", std::string(name).c_str(), correct, total, acc);
    out += line;
  };
  for (const auto& [d, s] : report.per_difficulty) row(to_string(d), s.correct, s.total, s.accuracy());
  row("overall", report.correct, report.total, report.accuracy());
  return out;
}

}  // namespace grg::evalbench
