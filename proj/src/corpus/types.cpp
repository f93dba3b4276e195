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

#include "grg/corpus/types.hpp"

#include <array>
#include <utility>

#include "grg/common/error.hpp"
#include "grg/common/io.hpp"

namespace grg::corpus {

namespace {

constexpr std::array<std::pair<SourceKind, std::string_view>, 7> kKindNames{{
    {SourceKind::standard_3gpp, "standard_3gpp"},
    {SourceKind::standard_ieee, "standard_ieee"},
    {SourceKind::patent, "patent"},
    {SourceKind::paper, "paper"},
    {SourceKind::code, "code"},
    {SourceKind::wiki, "wiki"},
    {SourceKind::other, "other"},
}};

}  // namespace

std::string_view to_string(SourceKind kind) noexcept {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "other";
}

SourceKind parse_source_kind(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  throw Error(ErrorKind::format, "unknown source_kind '" + std::string(name) + "'");
}

void CleanDocument::record(std::string_view stage, std::string_view decision, std::string detail) {
  if (has_stage(stage)) {
    throw Error(ErrorKind::contract,
                "stage '" + std::string(stage) + "' already recorded for " + doc_id);
  }
  filter_trace.push_back({std::string(stage), std::string(decision), std::move(detail)});
}

bool CleanDocument::has_stage(std::string_view stage) const noexcept {
  for (const auto& t : filter_trace) {
    if (t.stage == stage) return true;
  }
  return false;
}

std::size_t FilterReport::dropped_total() const noexcept {
  std::size_t n = 0;
  for (const auto& [_, c] : dropped_by_stage) n += c;
  return n;
}

bool FilterReport::conserved() const noexcept {
  return input_count == kept_count + dropped_total() + quarantined.size();
}

void to_json(nlohmann::json& j, const ImageRef& v) {
  j = nlohmann::json{{"path", v.path}};
  if (v.alt) j["alt"] = *v.alt;
}

void from_json(const nlohmann::json& j, ImageRef& v) {
  v.path = j.at("path").get<std::string>();
  if (auto it = j.find("alt"); it != j.end() && !it->is_null()) v.alt = it->get<std::string>();
}

void to_json(nlohmann::json& j, const TraceEntry& v) {
  j = nlohmann::json{{"stage", v.stage}, {"decision", v.decision}, {"detail", v.detail}};
}

void from_json(const nlohmann::json& j, TraceEntry& v) {
  v.stage = j.at("stage").get<std::string>();
  v.decision = j.at("decision").get<std::string>();
  v.detail = j.value("detail", "");
}

void to_json(nlohmann::json& j, const CleanDocument& v) {
  j = nlohmann::json{{"doc_id", v.doc_id},
                     {"source_kind", to_string(v.kind)},
                     {"title", v.title},
                     {"body", v.body},
                     {"attachments", v.attachments},
                     {"meta", v.meta},
                     {"filter_trace", v.filter_trace}};
}

void from_json(const nlohmann::json& j, CleanDocument& v) {
  v.doc_id = j.at("doc_id").get<std::string>();
  v.kind = parse_source_kind(j.at("source_kind").get<std::string>());
  v.title = j.value("title", "");
  v.body = j.at("body").get<std::string>();
  v.attachments = j.value("attachments", std::vector<ImageRef>{});
  v.meta = j.value("meta", Meta{});
  v.filter_trace = j.value("filter_trace", std::vector<TraceEntry>{});
}

void to_json(nlohmann::json& j, const FilterReport& v) {
  nlohmann::json quarantine = nlohmann::json::array();
  for (const auto& q : v.quarantined) {
    quarantine.push_back({{"doc_id", q.doc_id}, {"stage", q.stage}, {"reason", q.reason}});
  }
  nlohmann::json load_errors = nlohmann::json::array();
  for (const auto& e : v.load_errors) {
    load_errors.push_back({{"doc_id", e.doc_id}, {"message", e.message}});
  }
  j = nlohmann::json{{"input_count", v.input_count},
                     {"kept_count", v.kept_count},
                     {"dropped_by_stage", v.dropped_by_stage},
                     {"duplicate_clusters", v.duplicate_clusters},
                     {"quarantined", quarantine},
                     {"load_errors", load_errors}};
}

void from_json(const nlohmann::json& j, FilterReport& v) {
  v.input_count = j.at("input_count").get<std::size_t>();
  v.kept_count = j.at("kept_count").get<std::size_t>();
  v.dropped_by_stage = j.at("dropped_by_stage").get<std::map<std::string, std::size_t>>();
  v.duplicate_clusters = j.at("duplicate_clusters").get<std::vector<std::vector<std::string>>>();
  v.quarantined.clear();
  for (const auto& q : j.value("quarantined", nlohmann::json::array())) {
    v.quarantined.push_back({q.at("doc_id"), q.at("stage"), q.at("reason")});
  }
  v.load_errors.clear();
  for (const auto& e : j.value("load_errors", nlohmann::json::array())) {
    v.load_errors.push_back({e.at("doc_id"), e.at("message")});
  }
}

std::string to_jsonl(const std::vector<CleanDocument>& docs) {
  std::string out;
  for (const auto& d : docs) {
    out += nlohmann::json(d).dump();
    out += '\n';
  }
  return out;
}

std::vector<CleanDocument> clean_documents_from_jsonl(std::string_view content) {
  std::vector<CleanDocument> docs;
  io::for_each_line(content, [&](std::size_t line_no, std::string_view line) {
    try {
      docs.push_back(nlohmann::json::parse(line).get<CleanDocument>());
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::format, "clean corpus line " + std::to_string(line_no) + ": " + e.what());
    }
  });
  return docs;
}

}  // namespace grg::corpus
