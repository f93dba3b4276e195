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

#include "grg/corpus/pipeline.hpp"

#include <optional>

#include "grg/common/error.hpp"
#include "grg/common/io.hpp"
#include "grg/common/text.hpp"
#include "grg/corpus/filters.hpp"
#include "grg/corpus/markup.hpp"

namespace grg::corpus {

namespace {

// Outcome of the per-document stages that run before the dedup barrier.
struct DocOutcome {
  std::optional<CleanDocument> doc;
  std::string dropped_at;  // stage name when dropped
  std::optional<QuarantineEntry> quarantine;
  std::optional<LoadIssue> load_error;
};

DocOutcome run_document_stages(const ManifestEntry& entry, const CorpusManifest& manifest,
                               const PipelineConfig& config, const TermMatcher& keywords, JudgeClient* judge) {
  DocOutcome out;
  RawDocument raw;
  try {
    raw = load_document(entry, manifest.base_dir);
  } catch (const Error& e) {
    out.load_error = LoadIssue{entry.doc_id, e.what()};
    out.dropped_at = stage::load;
    return out;
  }

  CleanDocument doc;
  doc.doc_id = raw.doc_id;
  doc.kind = raw.kind;
  doc.title = strip_markup(raw.title);
  doc.body = strip_markup(raw.body);
  doc.attachments = std::move(raw.attachments);
  doc.meta = std::move(raw.meta);
  doc.record(stage::load, "keep", entry.locator.starts_with("inline:") ? "inline" : entry.locator);

  if (doc.body.empty() && doc.attachments.empty()) {
    doc.record(stage::markup, "drop", "empty after markup removal");
    out.dropped_at = stage::markup;
    return out;
  }
  doc.record(stage::markup, "keep",
             std::to_string(raw.body.size()) + " -> " + std::to_string(doc.body.size()) + " bytes");

  if (config.keyword_filter_enabled) {
    const auto decision = keyword_filter(doc, keywords);
    if (!decision.keep) {
      doc.record(stage::keyword, "drop", "no keyword match");
      out.dropped_at = stage::keyword;
      return out;
    }
    doc.record(stage::keyword, "keep", text::join(decision.matched, ","));
  } else {
    doc.record(stage::keyword, "skipped", "disabled");
  }

  if (config.judge_filter_enabled) {
    const auto decision = judge_filter(doc, *judge);
    if (decision.outcome == JudgeDecision::Outcome::quarantine) {
      out.quarantine = QuarantineEntry{doc.doc_id, std::string(stage::judge), decision.reason};
      return out;
    }
    if (decision.outcome == JudgeDecision::Outcome::drop) {
      out.dropped_at = stage::judge;
      return out;
    }
  } else {
    doc.record(stage::judge, "skipped", "disabled");
  }

  out.doc = std::move(doc);
  return out;
}

}  // namespace

PreprocessResult preprocess(const CorpusManifest& manifest, const PipelineConfig& config, JudgeClient* judge) {
  const TermMatcher keywords(config.keywords);
  const TermMatcher denylist(config.denylist);
  if (config.keyword_filter_enabled && keywords.empty()) {
    throw Error(ErrorKind::config, "keyword filter enabled but the keyword set is empty");
  }
  if (config.judge_filter_enabled && judge == nullptr) {
    throw Error(ErrorKind::config, "judge filter enabled but no judge configured");
  }

  PreprocessResult result;
  auto& report = result.report;
  const std::size_t n = manifest.entries.size();
  report.input_count = n;

  std::vector<DocOutcome> outcomes(n);
  io::parallel_for(n, config.workers, [&](std::size_t i) {
    outcomes[i] = run_document_stages(manifest.entries[i], manifest, config, keywords, judge);
  });

  std::vector<CleanDocument> survivors;
  for (auto& o : outcomes) {
    if (o.load_error) report.load_errors.push_back(std::move(*o.load_error));
    if (o.quarantine) {
      report.quarantined.push_back(std::move(*o.quarantine));
    } else if (!o.dropped_at.empty()) {
      ++report.dropped_by_stage[o.dropped_at];
    } else {
      survivors.push_back(std::move(*o.doc));
    }
  }

  if (n > 0 && static_cast<double>(report.load_errors.size()) > config.max_load_failure_ratio * static_cast<double>(n)) {
    throw Error(ErrorKind::io, std::to_string(report.load_errors.size()) + " of " + std::to_string(n) +
                                   " documents failed to load (first: " + report.load_errors.front().message + ")");
  }

  auto deduped = dedup(std::move(survivors), config.dedup);
  report.duplicate_clusters = std::move(deduped.report.duplicate_clusters);
  for (const auto& [s, c] : deduped.report.dropped_by_stage) report.dropped_by_stage[s] += c;

  for (auto& doc : deduped.kept) {
    const auto decision = harmful_screen(doc, denylist);
    if (!decision.keep) {
      ++report.dropped_by_stage[std::string(stage::harmful)];
      continue;
    }
    doc.record(stage::harmful, "keep", denylist.empty() ? "no denylist" : "");
    result.docs.push_back(std::move(doc));
  }
  report.kept_count = result.docs.size();
  return result;
}

}  // namespace grg::corpus
