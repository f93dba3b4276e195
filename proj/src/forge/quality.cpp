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

#include "grg/forge/quality.hpp"

#include <cmath>
#include <set>

#include "grg/common/error.hpp"
#include "grg/common/text.hpp"
#include "grg/forge/qa.hpp"

namespace grg::forge {

RecordVerdict StubRecordJudge::judge(const SourcedRecord& record) {
  if (!is_grounded(record.record.output, record.source_text)) return {0.0, "ungrounded"};
  const std::size_t n = text::utf8_length(text::trim(record.record.output));
  if (n < config_.min_answer_chars || n > config_.max_answer_chars) return {0.0, "length"};
  return {1.0, ""};
}

QualityReport assess_quality(const std::vector<SourcedRecord>& records, RecordJudge& judge, double min_score) {
  if (!(min_score >= 0.0 && min_score <= 1.0)) {
    throw Error(ErrorKind::contract, "min_score must be in [0,1], got " + std::to_string(min_score));
  }
  QualityReport report;
  std::set<std::string> seen;
  for (const auto& r : records) {
    auto norm = [](const std::string& s) { return text::collapse_whitespace(text::to_lower(s)); };
    const std::string key = norm(r.record.instruction) + '\x1f' + norm(r.record.input) + '\x1f' + norm(r.record.output);
    if (!seen.insert(key).second) {
      report.rejected.push_back({r, "duplicate"});
      continue;
    }
    RecordVerdict v;
    try {
      v = judge.judge(r);
    } catch (const std::exception& e) {
      report.rejected.push_back({r, std::string("judge-error: ") + e.what()});
      continue;
    }
    if (std::isfinite(v.score) && v.score >= min_score) {
      report.kept.push_back(r);
    } else {
      report.rejected.push_back({r, v.reason.empty() ? "low-score" : v.reason});
    }
  }
  return report;
}

}  // namespace grg::forge
