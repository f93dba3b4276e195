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

#include "grg/corpus/manifest.hpp"

#include <unordered_set>

#include "grg/common/error.hpp"
#include "grg/common/io.hpp"
#include "grg/common/text.hpp"

namespace grg::corpus {

namespace fs = std::filesystem;

namespace {

constexpr std::string_view kInlinePrefix = "inline:";

Meta meta_from_json(const nlohmann::json& j) {
  Meta meta;
  if (j.is_null()) return meta;
  if (!j.is_object()) throw Error(ErrorKind::format, "meta must be an object");
  for (const auto& [k, v] : j.items()) meta[k] = v.is_string() ? v.get<std::string>() : v.dump();
  return meta;
}

}  // namespace

std::map<SourceKind, std::size_t> CorpusManifest::counts_by_kind() const {
  std::map<SourceKind, std::size_t> counts;
  for (const auto& e : entries) ++counts[e.kind];
  return counts;
}

CorpusManifest parse_manifest(std::string_view content, fs::path base_dir) {
  CorpusManifest m;
  m.base_dir = std::move(base_dir);
  std::unordered_set<std::string> seen;
  io::for_each_line(content, [&](std::size_t line_no, std::string_view line) {
    const auto where = "manifest line " + std::to_string(line_no) + ": ";
    ManifestEntry e;
    try {
      const auto j = nlohmann::json::parse(line);
      e.doc_id = j.at("doc_id").get<std::string>();
      e.kind = parse_source_kind(j.at("source_kind").get<std::string>());
      e.locator = j.at("locator").get<std::string>();
      e.meta = meta_from_json(j.value("meta", nlohmann::json()));
    } catch (const nlohmann::json::exception& ex) {
      throw Error(ErrorKind::format, where + ex.what());
    } catch (const Error& ex) {
      throw Error(ErrorKind::format, where + ex.what());
    }
    if (e.doc_id.empty()) throw Error(ErrorKind::format, where + "empty doc_id");
    if (e.locator.empty()) throw Error(ErrorKind::format, where + "empty locator");
    if (!seen.insert(e.doc_id).second) throw Error(ErrorKind::format, where + "duplicate doc_id '" + e.doc_id + "'");
    m.entries.push_back(std::move(e));
  });
  return m;
}

CorpusManifest load_manifest(const fs::path& path) {
  return parse_manifest(io::read_file(path), path.parent_path());
}

std::string to_jsonl(const CorpusManifest& manifest) {
  std::string out;
  for (const auto& e : manifest.entries) {
    nlohmann::json j{{"doc_id", e.doc_id}, {"source_kind", to_string(e.kind)}, {"locator", e.locator}};
    if (!e.meta.empty()) j["meta"] = e.meta;
    out += j.dump();
    out += '\n';
  }
  return out;
}

RawDocument load_document(const ManifestEntry& entry, const fs::path& base_dir) {
  RawDocument doc;
  doc.doc_id = entry.doc_id;
  doc.kind = entry.kind;
  doc.meta = entry.meta;
  if (auto it = entry.meta.find("title"); it != entry.meta.end()) doc.title = it->second;

  if (entry.locator.starts_with(kInlinePrefix)) {
    doc.body = entry.locator.substr(kInlinePrefix.size());
  } else {
    const fs::path path = base_dir / entry.locator;
    const std::string content = io::read_file(path);
    if (path.extension() == ".json") {
      try {
        const auto j = nlohmann::json::parse(content);
        doc.title = j.value("title", doc.title);
        doc.body = j.value("body", "");
        doc.attachments = j.value("attachments", std::vector<ImageRef>{});
      } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorKind::format, path.string() + ": " + ex.what());
      }
    } else {
      doc.body = content;
    }
  }
  doc.title = text::sanitize_utf8(doc.title);
  doc.body = text::sanitize_utf8(doc.body);
  if (doc.body.empty() && doc.attachments.empty()) {
    throw Error(ErrorKind::format, "document '" + doc.doc_id + "' has neither body nor attachments");
  }
  return doc;
}

}  // namespace grg::corpus
