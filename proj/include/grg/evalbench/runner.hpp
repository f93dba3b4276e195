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

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "grg/engine/engine.hpp"
#include "grg/evalbench/benchmark.hpp"

namespace grg::evalbench {

struct TierScore {
  std::size_t total = 0;
  std::size_t correct = 0;
  double accuracy() const noexcept { return total == 0 ? 0.0 : static_cast<double>(correct) / total; }
};

struct TranscriptEntry {
  std::string qid;
  Difficulty difficulty = Difficulty::easy;
  std::string chosen;  // empty on abstain
  bool correct = false;
  std::size_t context_chars = 0;
  std::string error;  // generator failure, if any

  bool operator==(const TranscriptEntry&) const = default;
};

struct EvalReport {
  engine::Mode mode = engine::Mode::grg;
  std::size_t total = 0;
  std::size_t correct = 0;
  std::map<Difficulty, TierScore> per_difficulty;
  std::vector<TranscriptEntry> transcript;  // benchmark order

  double accuracy() const noexcept { return total == 0 ? 0.0 : static_cast<double>(correct) / total; }
};

/// Answers every question once through engine::answer with the rendered
/// stem and options as the query. Generator failures count as abstentions.
EvalReport run_eval(const std::vector<McqQuestion>& questions, engine::Mode mode, const engine::Resources& res,
                    const engine::EngineOptions& options, engine::GeneratorClient& generator);

nlohmann::json report_to_json(const EvalReport& report);

/// Plain-text table: one row per difficulty tier plus the overall row.
std::string report_table(const EvalReport& report);

}  // namespace grg::evalbench
