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
#include <string_view>
#include <vector>

#include <json.hpp>

#include "grg/corpus/types.hpp"

namespace grg::embed {

/// Half-open range of Unicode code point offsets into a document body.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t size() const noexcept { return end - start; }
  bool operator==(const Span&) const = default;
};

struct Chunk {
  std::string chunk_id;  // doc_id + "#" + ordinal
  std::string doc_id;
  Span span;
  std::string text;

  bool operator==(const Chunk&) const = default;
};

struct ChunkPolicy {
  std::size_t target_chars = 1200;
  std::size_t overlap_chars = 200;
  /// Split points move back to just after a whitespace character when one
  /// lies within this many characters; otherwise the split is hard.
  std::size_t snap_window = 40;
};

std::string make_chunk_id(std::string_view doc_id, std::size_t ordinal);

/// Splits `body` into chunks of at most target_chars code points. Each chunk
/// after the first starts exactly overlap_chars before the previous chunk's
/// end. Empty bodies give no chunks. Throws Error(contract) unless
/// target_chars > overlap_chars.
std::vector<Chunk> chunk_text(std::string_view doc_id, std::string_view body, const ChunkPolicy& policy);
std::vector<Chunk> chunk_document(const corpus::CleanDocument& doc, const ChunkPolicy& policy);

void to_json(nlohmann::json& j, const Chunk& c);
void from_json(const nlohmann::json& j, Chunk& c);

std::string chunks_to_jsonl(const std::vector<Chunk>& chunks);
std::vector<Chunk> chunks_from_jsonl(std::string_view content);

}  // namespace grg::embed
