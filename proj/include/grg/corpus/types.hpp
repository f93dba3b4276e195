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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace grg::corpus {

enum class SourceKind { standard_3gpp, standard_ieee, patent, paper, code, wiki, other };

std::string_view to_string(SourceKind kind) noexcept;
/// Throws Error(format) on unknown names.
SourceKind parse_source_kind(std::string_view name);

struct ImageRef {
  std::string path;
  std::optional<std::string> alt;

  bool operator==(const ImageRef&) const = default;
};

using Meta = std::map<std::string, std::string>;

struct RawDocument {
  std::string doc_id;
  SourceKind kind = SourceKind::other;
  std::string title;
  std::string body;
  std::vector<ImageRef> attachments;
  Meta meta;
};

/// Stage names as they appear in traces and reports.
namespace stage {
inline constexpr std::string_view load = "load";
inline constexpr std::string_view markup = "markup";
inline constexpr std::string_view keyword = "keyword";
inline constexpr std::string_view judge = "judge";
inline constexpr std::string_view dedup = "dedup";
inline constexpr std::string_view harmful = "harmful";
}  // namespace stage

struct TraceEntry {
  std::string stage;
  std::string decision;  // keep | drop | skipped | quarantine
  std::string detail;

  bool operator==(const TraceEntry&) const = default;
};

struct CleanDocument {
  std::string doc_id;
  SourceKind kind = SourceKind::other;
  std::string title;
  std::string body;
  std::vector<ImageRef> attachments;
  Meta meta;
  std::vector<TraceEntry> filter_trace;

  /// Appends a trace entry. Throws Error(contract) if the stage is already
  /// recorded.
  void record(std::string_view stage, std::string_view decision, std::string detail = {});
  bool has_stage(std::string_view stage) const noexcept;

  bool operator==(const CleanDocument&) const = default;
};

struct ManifestEntry {
  std::string doc_id;
  SourceKind kind = SourceKind::other;
  std::string locator;
  Meta meta;

  bool operator==(const ManifestEntry&) const = default;
};

struct QuarantineEntry {
  std::string doc_id;
  std::string stage;
  std::string reason;
};

struct LoadIssue {
  std::string doc_id;
  std::string message;
};

struct FilterReport {
  std::size_t input_count = 0;
  std::size_t kept_count = 0;
  std::map<std::string, std::size_t> dropped_by_stage;
  /// Each cluster is sorted; the first id is the retained representative.
  std::vector<std::vector<std::string>> duplicate_clusters;
  std::vector<QuarantineEntry> quarantined;
  std::vector<LoadIssue> load_errors;

  std::size_t dropped_total() const noexcept;
  /// input_count == kept + dropped + quarantined
  bool conserved() const noexcept;
};

void to_json(nlohmann::json& j, const ImageRef& v);
void from_json(const nlohmann::json& j, ImageRef& v);
void to_json(nlohmann::json& j, const TraceEntry& v);
void from_json(const nlohmann::json& j, TraceEntry& v);
void to_json(nlohmann::json& j, const CleanDocument& v);
void from_json(const nlohmann::json& j, CleanDocument& v);
void to_json(nlohmann::json& j, const FilterReport& v);
void from_json(const nlohmann::json& j, FilterReport& v);

std::string to_jsonl(const std::vector<CleanDocument>& docs);
std::vector<CleanDocument> clean_documents_from_jsonl(std::string_view content);

}  // namespace grg::corpus
