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

#include "grg/engine/engine.hpp"

#include <algorithm>
#include <set>

#include "grg/common/text.hpp"

namespace grg::engine {

using nlohmann::json;

std::string_view to_string(Mode mode) noexcept {
  switch (mode) {
    case Mode::base: return "base";
    case Mode::rag: return "rag";
    case Mode::grg: return "grg";
  }
  return "grg";
}

Mode parse_mode(std::string_view name) {
  if (name == "base") return Mode::base;
  if (name == "rag") return Mode::rag;
  if (name == "grg") return Mode::grg;
  throw Error(ErrorKind::config, "unknown mode '" + std::string(name) + "' (expected base, rag or grg)");
}

LocalContext retrieve_local(std::string_view query_text, embed::Embedder& embedder, const vindex::VectorIndex& index,
                            const std::map<std::string, embed::Chunk>& chunks, std::size_t k) {
  if (text::trim(query_text).empty()) throw Error(ErrorKind::contract, "query text is empty");
  if (k == 0) throw Error(ErrorKind::contract, "retrieval needs k >= 1");
  LocalContext local;
  local.hits = index.search(embed::embed_text(query_text, embedder), k);
  for (const auto& hit : local.hits) {
    auto it = chunks.find(hit.chunk_id);
    if (it == chunks.end()) throw Error(ErrorKind::not_found, "indexed chunk '" + hit.chunk_id + "' is not stored");
    local.texts.emplace(hit.chunk_id, it->second.text);
  }
  return local;
}

QueryEntities extract_query_entities(std::string_view query_text, kgraph::ExtractorClient& extractor,
                                     const kgraph::KnowledgeGraph& graph) {
  QueryEntities out;
  std::set<std::string> ids;
  std::size_t unresolved = 0;
  for (const auto& candidate : extractor.mention_candidates(query_text)) {
    if (auto id = graph.resolve(candidate)) {
      ids.insert(*id);
    } else {
      ++unresolved;
    }
  }
  out.entity_ids.assign(ids.begin(), ids.end());
  if (ids.empty()) {
    out.notices.push_back("no graph entities found in query");
  } else if (unresolved > 0) {
    out.notices.push_back(std::to_string(unresolved) + " unresolved mention candidate(s) dropped");
  }
  return out;
}

GlobalContext retrieve_global(const std::vector<std::string>& entity_ids, const kgraph::KnowledgeGraph& graph,
                              int depth) {
  if (entity_ids.empty()) {
    if (depth != 1 && depth != 2) throw Error(ErrorKind::contract, "neighborhood depth must be 1 or 2");
    return {};
  }
  return make_global_context(kgraph::neighborhood(graph, entity_ids, depth).subgraph);
}

GenerationFailure::GenerationFailure(const std::string& message, bool retryable, AssembledContext context,
                                     std::string fused_query)
    : Error(ErrorKind::adapter, message, retryable), context_(std::move(context)), fused_query_(std::move(fused_query)) {}

AssembledContext build_context(const std::string& fused_query, Mode mode, const Resources& res,
                               const EngineOptions& options, Answer& diagnostics) {
  if (mode == Mode::base) {
    AssembledContext empty;
    empty.budget_chars = options.budget_chars;
    return empty;
  }
  if (!res.index || !res.chunks || !res.embedder) {
    throw Error(ErrorKind::conflict, "retrieval stores are not loaded");
  }
  const LocalContext local = retrieve_local(fused_query, *res.embedder, *res.index, *res.chunks, options.k);
  diagnostics.hits = local.hits;

  GlobalContext global;
  if (res.graph && res.extractor && !res.graph->empty()) {
    auto entities = extract_query_entities(fused_query, *res.extractor, *res.graph);
    global = retrieve_global(entities.entity_ids, *res.graph, options.depth);
    if (mode == Mode::grg) {
      diagnostics.query_entities = std::move(entities.entity_ids);
      for (auto& n : entities.notices) diagnostics.notices.push_back(std::move(n));
    }
  } else if (mode == Mode::grg) {
    diagnostics.notices.push_back("graph store not loaded; answering without graph facts");
  }

  AssembledContext context = assemble_context(local, global, options.budget_chars, options.facts_first);
  return mode == Mode::rag ? context.without_facts() : context;
}

Answer answer(const Query& query, Mode mode, const Resources& res, const EngineOptions& options,
              GeneratorClient& generator) {
  Answer out;
  out.mode = mode;
  if (query.images.empty()) {
    out.fused_query = mmio::fuse_query(query.text, std::nullopt, {});
  } else {
    auto reading = mmio::read_images(query.images, res.captioner, res.ocr, options.ocr_threshold);
    out.notices = std::move(reading.notices);
    out.fused_query = mmio::fuse_query(query.text, reading.images);
  }
  out.context = build_context(out.fused_query, mode, res, options, out);

  GenerationRequest request{options.system_preamble, out.context.blocks, out.fused_query};
  GenerationResponse response;
  try {
    response = generator.generate(request);
  } catch (const Error& e) {
    throw GenerationFailure("generator '" + generator.name() + "' failed: " + e.what(), e.retryable(), out.context,
                            out.fused_query);
  } catch (const std::exception& e) {
    throw GenerationFailure("generator '" + generator.name() + "' failed: " + e.what(), false, out.context,
                            out.fused_query);
  }
  if (text::trim(response.answer).empty()) {
    throw GenerationFailure("generator '" + generator.name() + "' returned an empty answer", true, out.context,
                            out.fused_query);
  }
  out.answer = std::move(response.answer);
  out.generator = response.generator.empty() ? generator.name() : std::move(response.generator);
  out.usage = std::move(response.usage);
  return out;
}

void to_json(json& j, const Answer& a) {
  j = json{{"answer", a.answer},
           {"generator", a.generator},
           {"mode", to_string(a.mode)},
           {"context", a.context},
           {"diagnostics",
            {{"fused_query", a.fused_query}, {"query_entities", a.query_entities}, {"notices", a.notices}}},
           {"usage", a.usage}};
}

}  // namespace grg::engine
