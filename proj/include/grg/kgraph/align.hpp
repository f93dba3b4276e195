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
#include <vector>

#include "grg/embed/chunk.hpp"
#include "grg/kgraph/extractor.hpp"
#include "grg/kgraph/graph.hpp"

namespace grg::kgraph {

struct Alignment {
  std::map<std::string, Entity> entities;           // by entity_id
  std::map<std::string, std::string> surface_to_id;  // surface as given -> entity_id
};

/// Groups mentions by normalize_surface. The canonical name is the most
/// frequent whitespace-collapsed surface (ties: lexicographically smallest),
/// the type the most frequent non-empty hint (ties likewise, default
/// "entity"). Deterministic for a given multiset of mentions.
Alignment align_entities(const std::vector<EntityMention>& mentions);

struct GraphBuildOptions {
  int max_attempts = 3;
};

struct GraphBuildReport {
  std::size_t chunks = 0;
  std::size_t triples_accepted = 0;
  std::size_t self_loops_dropped = 0;
  std::vector<std::string> unextracted;  // chunk ids, input order
  std::vector<std::string> warnings;
};

struct GraphBuild {
  KnowledgeGraph graph;
  GraphBuildReport report;
};

/// Extract, align and merge. Relations sharing (subject, predicate, object)
/// merge into one with the union of provenance and the max confidence.
/// Throws Error(contract) on an empty chunk set.
GraphBuild build_graph(const std::vector<embed::Chunk>& chunks, ExtractorClient& client,
                       const GraphBuildOptions& options = {});

}  // namespace grg::kgraph
