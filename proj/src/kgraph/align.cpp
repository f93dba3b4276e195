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

#include "grg/kgraph/align.hpp"

#include <algorithm>
#include <tuple>

#include "grg/common/error.hpp"
#include "grg/common/text.hpp"

namespace grg::kgraph {

namespace {

// Most frequent key; ties go to the smallest key (map order).
std::string plurality(const std::map<std::string, std::size_t>& counts, const std::string& fallback) {
  std::string best = fallback;
  std::size_t best_count = 0;
  for (const auto& [key, n] : counts) {
    if (n > best_count) {
      best = key;
      best_count = n;
    }
  }
  return best;
}

}  // namespace

Alignment align_entities(const std::vector<EntityMention>& mentions) {
  struct Group {
    std::map<std::string, std::size_t> surfaces;
    std::map<std::string, std::size_t> types;
    ChunkIdSet provenance;
    std::vector<std::string> raw;
  };
  std::map<std::string, Group> groups;
  for (const auto& m : mentions) {
    const std::string cleaned = text::collapse_whitespace(m.surface);
    if (cleaned.empty()) continue;
    Group& g = groups[normalize_surface(cleaned)];
    ++g.surfaces[cleaned];
    if (!m.type_hint.empty()) ++g.types[m.type_hint];
    if (!m.chunk_id.empty()) g.provenance.insert(m.chunk_id);
    g.raw.push_back(m.surface);
  }

  Alignment out;
  for (auto& [key, g] : groups) {
    Entity e;
    e.canonical_name = plurality(g.surfaces, key);
    e.type = plurality(g.types, "entity");
    e.entity_id = entity_id_for(e.canonical_name, e.type);
    for (const auto& [surface, _] : g.surfaces) e.aliases.insert(surface);
    e.provenance = std::move(g.provenance);
    for (const auto& raw : g.raw) out.surface_to_id[raw] = e.entity_id;
    out.entities.emplace(e.entity_id, std::move(e));
  }
  return out;
}

GraphBuild build_graph(const std::vector<embed::Chunk>& chunks, ExtractorClient& client,
                       const GraphBuildOptions& options) {
  if (chunks.empty()) throw Error(ErrorKind::contract, "graph build needs at least one chunk");
  GraphBuild build;
  build.report.chunks = chunks.size();

  std::vector<Triple> triples;
  std::vector<EntityMention> mentions;
  for (const auto& chunk : chunks) {
    auto result = extract_triples(chunk, client, options.max_attempts);
    for (auto& w : result.warnings) build.report.warnings.push_back(chunk.chunk_id + ": " + w);
    if (!result.extracted) {
      build.report.unextracted.push_back(chunk.chunk_id);
      continue;
    }
    for (auto& t : result.triples) {
      mentions.push_back(t.subject);
      mentions.push_back(t.object);
      triples.push_back(std::move(t));
    }
  }

  Alignment alignment = align_entities(mentions);
  std::map<std::tuple<std::string, std::string, std::string>, Relation> merged;
  for (const auto& t : triples) {
    const std::string& s = alignment.surface_to_id.at(t.subject.surface);
    const std::string& o = alignment.surface_to_id.at(t.object.surface);
    if (s == o) {
      ++build.report.self_loops_dropped;
      build.report.warnings.push_back(t.subject.chunk_id + ": self-loop (" + t.subject.surface + ", " + t.predicate +
                                      ", " + t.object.surface + ") dropped");
      continue;
    }
    ++build.report.triples_accepted;
    auto [it, fresh] = merged.try_emplace({s, t.predicate, o});
    Relation& r = it->second;
    if (fresh) {
      r.subject_id = s;
      r.predicate = t.predicate;
      r.object_id = o;
      r.confidence = t.confidence;
    } else {
      r.confidence = std::max(r.confidence, t.confidence);
    }
    r.provenance.insert(t.subject.chunk_id);
  }

  // Entities only seen in dropped self-loops still carry provenance, so they
  // stay in the graph as isolated nodes.
  std::vector<Relation> relations;
  relations.reserve(merged.size());
  for (auto& [_, r] : merged) relations.push_back(std::move(r));
  build.graph = KnowledgeGraph(std::move(alignment.entities), std::move(relations));
  return build;
}

}  // namespace grg::kgraph
