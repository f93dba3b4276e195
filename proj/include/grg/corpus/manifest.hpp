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

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "grg/corpus/types.hpp"

namespace grg::corpus {

/// Manifest lines are JSON objects:
///   {"doc_id": "...", "source_kind": "standard_3gpp", "locator": "...", "meta": {...}}
///
/// Locators are either `inline:<body text>` or a path relative to the
/// manifest's directory. `.json` files hold {"title", "body", "attachments"};
/// any other file is the body itself, with the title taken from meta.title.
struct CorpusManifest {
  std::vector<ManifestEntry> entries;
  std::filesystem::path base_dir;

  std::map<SourceKind, std::size_t> counts_by_kind() const;
};

/// Throws Error(format) with the line number on malformed lines, duplicate
/// doc_ids or empty ids.
CorpusManifest parse_manifest(std::string_view content, std::filesystem::path base_dir = {});
CorpusManifest load_manifest(const std::filesystem::path& path);
std::string to_jsonl(const CorpusManifest& manifest);

/// Resolves a locator. Throws Error(io) or Error(format) on failure.
RawDocument load_document(const ManifestEntry& entry, const std::filesystem::path& base_dir);

}  // namespace grg::corpus
