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
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "grg/common/error.hpp"
#include "grg/embed/chunk.hpp"
#include "grg/embed/embedding.hpp"
#include "grg/engine/context.hpp"
#include "grg/engine/generator.hpp"
#include "grg/kgraph/extractor.hpp"
#include "grg/kgraph/graph.hpp"
#include "grg/mmio/vision.hpp"
#include "grg/vindex/index.hpp"

namespace grg::engine {

/// base: no retrieval. rag: chunks only. grg: chunks plus graph facts.
enum class Mode { base, rag, grg };

std::string_view to_string(Mode mode) noexcept;
/// Throws Error(config) on an unknown name.
Mode parse_mode(std::string_view name);

struct EngineOptions {
  std::size_t k = 8;
  int depth = 1;
  std::size_t budget_chars = 6000;
  bool facts_first = true;
  double ocr_threshold = mmio::kDefaultOcrThreshold;
  std::string system_preamble =
      "Answer the telecommunications question using the context when it is relevant.";
};

/// Read-only stores plus adapters. Pointers are borrowed; graph, captioner
/// and ocr may be null.
struct Resources {
  const std::map<std::string, embed::Chunk>* chunks = nullptr;
  const vindex::VectorIndex* index = nullptr;
  const kgraph::KnowledgeGraph* graph = nullptr;
  embed::Embedder* embedder = nullptr;
  kgraph::ExtractorClient* extractor = nullptr;
  mmio::CaptionerClient* captioner = nullptr;
  mmio::OcrClient* ocr = nullptr;
};

/// Embed, search, hydrate. Throws Error(contract) on empty query text or
/// k == 0, Error(not_found) when a hit has no stored chunk.
LocalContext retrieve_local(std::string_view query_text, embed::Embedder& embedder, const vindex::VectorIndex& index,
                            const std::map<std::string, embed::Chunk>& chunks, std::size_t k);

struct QueryEntities {
  std::vector<std::string> entity_ids;  // sorted, unique
  std::vector<std::string> notices;
};

/// Resolves the extractor's mention candidates with the graph's alias
/// normalization.
QueryEntities extract_query_entities(std::string_view query_text, kgraph::ExtractorClient& extractor,
                                     const kgraph::KnowledgeGraph& graph);

/// Neighborhood of the seeds rendered as facts. No seeds gives an empty
/// context.
GlobalContext retrieve_global(const std::vector<std::string>& entity_ids, const kgraph::KnowledgeGraph& graph,
                              int depth);

struct Query {
  std::string text;
  std::vector<mmio::ImageInput> images;
};

struct Answer {
  std::string answer;
  std::string generator;
  Mode mode = Mode::grg;
  AssembledContext context;
  std::vector<vindex::SearchHit> hits;  // everything retrieved, kept or not
  std::string fused_query;
  std::vector<std::string> query_entities;
  std::vector<std::string> notices;
  nlohmann::json usage = nlohmann::json::object();
};

/// Thrown when the generator fails; carries the assembled context so the
/// caller can retry generation without retrieving again.
class GenerationFailure : public Error {
 public:
  GenerationFailure(const std::string& message, bool retryable, AssembledContext context, std::string fused_query);
  const AssembledContext& context() const noexcept { return context_; }
  const std::string& fused_query() const noexcept { return fused_query_; }

 private:
  AssembledContext context_;
  std::string fused_query_;
};

/// Builds the context for a mode. The rag context is the grg assembly with
/// the facts block removed, so context(rag) is always a subset of
/// context(grg) for the same budget.
AssembledContext build_context(const std::string& fused_query, Mode mode, const Resources& res,
                               const EngineOptions& options, Answer& diagnostics);

/// Full pipeline: fuse images into the query, retrieve per mode, assemble,
/// generate. Pure given deterministic adapters.
Answer answer(const Query& query, Mode mode, const Resources& res, const EngineOptions& options,
              GeneratorClient& generator);

void to_json(nlohmann::json& j, const Answer& a);

}  // namespace grg::engine
