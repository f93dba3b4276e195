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

#include <json.hpp>

#include "grg/kgraph/graph.hpp"
#include "grg/vindex/index.hpp"

namespace grg::engine {

struct LocalContext {
  std::vector<vindex::SearchHit> hits;     // rank order
  std::map<std::string, std::string> texts;  // chunk_id -> text, one per hit
};

struct GlobalContext {
  kgraph::KnowledgeGraph subgraph;
  std::vector<std::string> facts;  // one per relation, relation order
};

/// "A —predicate→ B [source: c1, c2]" using canonical names.
std::string render_fact(const kgraph::KnowledgeGraph& graph, const kgraph::Relation& r);

/// One fact line per relation in (subject id, predicate, object id) order.
GlobalContext make_global_context(kgraph::KnowledgeGraph subgraph);

enum class BlockKind { facts, chunk };

struct ContextBlock {
  BlockKind kind = BlockKind::chunk;
  std::string id;  // "facts" or the chunk id
  std::string text;
  std::size_t chars = 0;  // code points of text

  bool operator==(const ContextBlock&) const = default;
};

struct TruncationEntry {
  BlockKind kind = BlockKind::chunk;
  std::string id;  // chunk id, or the dropped fact line
  std::size_t chars = 0;

  bool operator==(const TruncationEntry&) const = default;
};

/// Budget and totals count code points of block text; the labels a prompt
/// template adds around blocks are not counted.
struct AssembledContext {
  std::vector<ContextBlock> blocks;
  std::size_t total_chars = 0;
  std::size_t budget_chars = 0;
  std::vector<TruncationEntry> truncation;

  bool empty() const noexcept { return blocks.empty(); }
  /// Removes the facts block and every fact truncation entry.
  AssembledContext without_facts() const;
};

inline constexpr std::size_t kMinBudgetChars = 256;

/// Facts block (fact lines joined by '\n') then one block per chunk in rank
/// order, or chunks first when facts_first is false. Over budget, whole
/// chunks go first from the lowest rank up, then fact lines from the end.
/// Throws Error(contract) if budget_chars < 256 or if facts exist but not
/// even the first fact line fits.
AssembledContext assemble_context(const LocalContext& local, const GlobalContext& global, std::size_t budget_chars,
                                  bool facts_first = true);

std::string_view to_string(BlockKind kind) noexcept;

void to_json(nlohmann::json& j, const ContextBlock& b);
void to_json(nlohmann::json& j, const TruncationEntry& t);
void to_json(nlohmann::json& j, const AssembledContext& c);

}  // namespace grg::engine
