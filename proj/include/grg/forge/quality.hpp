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
#include <string>
#include <vector>

#include "grg/forge/records.hpp"

namespace grg::forge {

struct RecordVerdict {
  double score = 0.0;  // in [0, 1]
  std::string reason;  // why the score is low; empty for a clean record
};

/// Scores one record against its source. Failures are Error(adapter).
class RecordJudge {
 public:
  virtual ~RecordJudge() = default;
  virtual std::string name() const = 0;
  virtual RecordVerdict judge(const SourcedRecord& record) = 0;
};

struct StubRecordJudgeConfig {
  std::size_t min_answer_chars = 3;
  std::size_t max_answer_chars = 400;
};

/// Score 1 for a grounded answer whose length (code points) is within
/// bounds, else 0 with reason "ungrounded" or "length".
class StubRecordJudge final : public RecordJudge {
 public:
  explicit StubRecordJudge(StubRecordJudgeConfig config = {}) : config_(config) {}
  std::string name() const override { return "stub-record-judge"; }
  RecordVerdict judge(const SourcedRecord& record) override;

 private:
  StubRecordJudgeConfig config_;
};

struct Rejection {
  SourcedRecord record;
  std::string reason;
};

struct QualityReport {
  std::vector<SourcedRecord> kept;
  std::vector<Rejection> rejected;
};

/// Partitions records in input order. Later copies of a record (same
/// instruction, input and output up to case and whitespace) are rejected
/// as "duplicate" before the judge sees them; the rest are kept when the
/// judge scores them >= min_score. Judge failures reject with a reason
/// starting "judge-error". Throws Error(contract) unless min_score is in [0, 1].
QualityReport assess_quality(const std::vector<SourcedRecord>& records, RecordJudge& judge, double min_score);

}  // namespace grg::forge
