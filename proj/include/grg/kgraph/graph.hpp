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

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace grg::kgraph {

using ChunkIdSet = std::set<std::string>;

struct Entity {
  std::string entity_id;
  std::string canonical_name;
  std::string type;
  std::set<std::string> aliases;
  ChunkIdSet provenance;

  bool operator==(const Entity&) const = default;
};

struct Relation {
  std::string subject_id;
  std::string predicate;
  std::string object_id;
  double confidence = 1.0;
  ChunkIdSet provenance;

  bool operator==(const Relation&) const = default;
};

/// Alignment key: lowercase, trim, collapse internal whitespace, then drop a
/// trailing "s" when the result is longer than three characters.
std::string normalize_surface(std::string_view surface);

/// Stable id from (normalized canonical name, type): "e" + 16 hex digits of
/// FNV-1a 64.
std::string entity_id_for(std::string_view canonical_name, std::string_view type);

/// Entities keyed by id plus relations sorted by (subject, predicate,
/// object), with adjacency in both directions. Construction checks the
/// invariants: unique non-empty ids, canonical name among the aliases,
/// non-empty provenance, confidence in [0, 1], no self-loops, no duplicate
/// (subject, predicate, object) triples, and every endpoint resolvable.
class KnowledgeGraph {
 public:
  KnowledgeGraph() = default;
  /// Throws Error(format) when an invariant does not hold.
  KnowledgeGraph(std::map<std::string, Entity> entities, std::vector<Relation> relations);

  const std::map<std::string, Entity>& entities() const noexcept { return entities_; }
  const std::vector<Relation>& relations() const noexcept { return relations_; }
  bool empty() const noexcept { return entities_.empty(); }

  const Entity* find(std::string_view id) const;
  /// Relation indices with the entity as subject / object.
  const std::vector<std::size_t>& outgoing(std::string_view id) const;
  const std::vector<std::size_t>& incoming(std::string_view id) const;

  /// Entity whose normalized name equals normalize_surface(surface).
  std::optional<std::string> resolve(std::string_view surface) const;

  /// Re-verifies every invariant; throws Error(format) on violation.
  void check_integrity() const;

  bool operator==(const KnowledgeGraph& other) const {
    return entities_ == other.entities_ && relations_ == other.relations_;
  }

 private:
  void index();

  std::map<std::string, Entity> entities_;
  std::vector<Relation> relations_;
  std::unordered_map<std::string, std::vector<std::size_t>> out_;
  std::unordered_map<std::string, std::vector<std::size_t>> in_;
  std::unordered_map<std::string, std::string> by_name_;
};

struct Neighborhood {
  KnowledgeGraph subgraph;
  std::vector<std::string> notices;
};

/// Entities within `depth` undirected hops of any seed, plus every relation
/// whose endpoints are both in that set. Unknown seeds are skipped with a
/// notice. Throws Error(contract) unless depth is 1 or 2.
Neighborhood neighborhood(const KnowledgeGraph& graph, const std::vector<std::string>& seeds, int depth);

}  // namespace grg::kgraph
