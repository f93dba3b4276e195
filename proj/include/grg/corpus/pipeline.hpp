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

#include <string>
#include <vector>

#include "grg/corpus/dedup.hpp"
#include "grg/corpus/judge.hpp"
#include "grg/corpus/manifest.hpp"
#include "grg/corpus/types.hpp"

namespace grg::corpus {

struct PipelineConfig {
  std::vector<std::string> keywords;
  std::vector<std::string> denylist;
  bool keyword_filter_enabled = true;
  bool judge_filter_enabled = true;
  DedupConfig dedup;
  /// Per-document stages run on this many threads; results are identical to
  /// a sequential run.
  std::size_t workers = 1;
  /// A run with more load failures than this fraction of the input fails.
  double max_load_failure_ratio = 0.5;
};

struct PreprocessResult {
  std::vector<CleanDocument> docs;
  FilterReport report;
};

/// load -> strip_markup -> keyword_filter -> judge_filter -> dedup -> harmful
///
/// Per-document failures (unresolvable locator, judge error) are recorded
/// and the run continues. Throws Error(config) when the keyword filter is
/// enabled with no keywords or the judge filter is enabled without a judge,
/// and Error(io) when more than max_load_failure_ratio of the documents fail
/// to load.
PreprocessResult preprocess(const CorpusManifest& manifest, const PipelineConfig& config, JudgeClient* judge);

}  // namespace grg::corpus
