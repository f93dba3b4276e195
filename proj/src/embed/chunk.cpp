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

#include "grg/embed/chunk.hpp"

#include <algorithm>

#include "grg/common/error.hpp"
#include "grg/common/io.hpp"
#include "grg/common/text.hpp"

namespace grg::embed {

std::string make_chunk_id(std::string_view doc_id, std::size_t ordinal) {
  std::string id(doc_id);
  id += '#';
  id += std::to_string(ordinal);
  return id;
}

std::vector<Chunk> chunk_text(std::string_view doc_id, std::string_view body, const ChunkPolicy& policy) {
  if (policy.target_chars <= policy.overlap_chars) {
    throw Error(ErrorKind::contract, "chunk policy needs target_chars > overlap_chars");
  }
  std::vector<Chunk> chunks;
  const auto offsets = text::utf8_offsets(body);
  const std::size_t n = offsets.size() - 1;
  if (n == 0) return chunks;

  auto emit = [&](std::size_t start, std::size_t end) {
    Chunk c;
    c.chunk_id = make_chunk_id(doc_id, chunks.size());
    c.doc_id = std::string(doc_id);
    c.span = {start, end};
    c.text = std::string(body.substr(offsets[start], offsets[end] - offsets[start]));
    chunks.push_back(std::move(c));
  };

  std::size_t start = 0;
  while (n - start > policy.target_chars) {
    const std::size_t hard_end = start + policy.target_chars;
    // The next chunk starts at end - overlap, which must stay ahead of start.
    const std::size_t lowest = std::max(start + policy.overlap_chars + 1,
                                        hard_end > policy.snap_window ? hard_end - policy.snap_window : 0);
    std::size_t end = hard_end;
    for (std::size_t p = hard_end; p >= lowest && p > start; --p) {
      if (text::is_space(body[offsets[p - 1]])) {
        end = p;
        break;
      }
    }
    emit(start, end);
    start = end - policy.overlap_chars;
  }
  emit(start, n);
  return chunks;
}

std::vector<Chunk> chunk_document(const corpus::CleanDocument& doc, const ChunkPolicy& policy) {
  return chunk_text(doc.doc_id, doc.body, policy);
}

void to_json(nlohmann::json& j, const Chunk& c) {
  j = nlohmann::json{{"chunk_id", c.chunk_id},
                     {"doc_id", c.doc_id},
                     {"span", {c.span.start, c.span.end}},
                     {"text", c.text}};
}

void from_json(const nlohmann::json& j, Chunk& c) {
  c.chunk_id = j.at("chunk_id").get<std::string>();
  c.doc_id = j.at("doc_id").get<std::string>();
  const auto& span = j.at("span");
  c.span = {span.at(0).get<std::size_t>(), span.at(1).get<std::size_t>()};
  c.text = j.at("text").get<std::string>();
}

std::string chunks_to_jsonl(const std::vector<Chunk>& chunks) {
  std::string out;
  for (const auto& c : chunks) {
    out += nlohmann::json(c).dump();
    out += '\n';
  }
  return out;
}

std::vector<Chunk> chunks_from_jsonl(std::string_view content) {
  std::vector<Chunk> chunks;
  io::for_each_line(content, [&](std::size_t line_no, std::string_view line) {
    try {
      chunks.push_back(nlohmann::json::parse(line).get<Chunk>());
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::format, "chunk store line " + std::to_string(line_no) + ": " + e.what());
    }
  });
  return chunks;
}

}  // namespace grg::embed
