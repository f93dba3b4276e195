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

#include "grg/engine/context.hpp"

#include <optional>

#include "grg/common/error.hpp"
#include "grg/common/text.hpp"

namespace grg::engine {

using nlohmann::json;

std::string render_fact(const kgraph::KnowledgeGraph& graph, const kgraph::Relation& r) {
  auto name = [&graph](const std::string& id) {
    const auto* e = graph.find(id);
    return e ? e->canonical_name : id;
  };
  std::vector<std::string> sources(r.provenance.begin(), r.provenance.end());
  return name(r.subject_id) + " —" + r.predicate + "→ " + name(r.object_id) + " [source: " +
         text::join(sources, ", ") + "]";
}

GlobalContext make_global_context(kgraph::KnowledgeGraph subgraph) {
  GlobalContext g;
  g.subgraph = std::move(subgraph);
  g.facts.reserve(g.subgraph.relations().size());
  for (const auto& r : g.subgraph.relations()) g.facts.push_back(render_fact(g.subgraph, r));
  return g;
}

std::string_view to_string(BlockKind kind) noexcept { return kind == BlockKind::facts ? "facts" : "chunk"; }

AssembledContext AssembledContext::without_facts() const {
  AssembledContext out;
  out.budget_chars = budget_chars;
  for (const auto& b : blocks) {
    if (b.kind == BlockKind::facts) continue;
    out.blocks.push_back(b);
    out.total_chars += b.chars;
  }
  for (const auto& t : truncation) {
    if (t.kind != BlockKind::facts) out.truncation.push_back(t);
  }
  return out;
}

AssembledContext assemble_context(const LocalContext& local, const GlobalContext& global, std::size_t budget_chars,
                                  bool facts_first) {
  if (budget_chars < kMinBudgetChars) {
    throw Error(ErrorKind::contract, "context budget must be at least " + std::to_string(kMinBudgetChars) +
                                         " chars, got " + std::to_string(budget_chars));
  }
  AssembledContext out;
  out.budget_chars = budget_chars;

  std::vector<std::size_t> fact_chars;
  std::size_t facts_total = 0;
  for (const auto& f : global.facts) {
    fact_chars.push_back(text::utf8_length(f));
    facts_total += fact_chars.back() + (fact_chars.size() > 1 ? 1 : 0);  // '\n' separators
  }
  std::vector<ContextBlock> chunks;
  std::size_t chunks_total = 0;
  for (const auto& hit : local.hits) {
    auto it = local.texts.find(hit.chunk_id);
    if (it == local.texts.end()) throw Error(ErrorKind::contract, "no text for hit '" + hit.chunk_id + "'");
    ContextBlock b{BlockKind::chunk, hit.chunk_id, it->second, text::utf8_length(it->second)};
    chunks_total += b.chars;
    chunks.push_back(std::move(b));
  }

  while (facts_total + chunks_total > budget_chars && !chunks.empty()) {
    out.truncation.push_back({BlockKind::chunk, chunks.back().id, chunks.back().chars});
    chunks_total -= chunks.back().chars;
    chunks.pop_back();
  }
  std::size_t kept_facts = global.facts.size();
  while (facts_total > budget_chars && kept_facts > 0) {
    --kept_facts;
    if (kept_facts == 0) {
      throw Error(ErrorKind::contract, "context budget of " + std::to_string(budget_chars) +
                                           " chars cannot hold a single fact line");
    }
    out.truncation.push_back({BlockKind::facts, global.facts[kept_facts], fact_chars[kept_facts]});
    facts_total -= fact_chars[kept_facts] + 1;
  }

  std::optional<ContextBlock> facts;
  if (kept_facts > 0) {
    std::vector<std::string> lines(global.facts.begin(), global.facts.begin() + static_cast<std::ptrdiff_t>(kept_facts));
    facts = ContextBlock{BlockKind::facts, "facts", text::join(lines, "\n"), facts_total};
  }
  if (facts && facts_first) out.blocks.push_back(*facts);
  for (auto& c : chunks) out.blocks.push_back(std::move(c));
  if (facts && !facts_first) out.blocks.push_back(*facts);
  out.total_chars = facts_total + chunks_total;
  return out;
}

void to_json(json& j, const ContextBlock& b) {
  j = json{{"kind", to_string(b.kind)}, {"id", b.id}, {"text", b.text}, {"chars", b.chars}};
}

void to_json(json& j, const TruncationEntry& t) {
  j = json{{"kind", to_string(t.kind)}, {"id", t.id}, {"chars", t.chars}};
}

void to_json(json& j, const AssembledContext& c) {
  j = json{{"blocks", c.blocks},
           {"total_chars", c.total_chars},
           {"budget_chars", c.budget_chars},
           {"truncation", c.truncation}};
}

}  // namespace grg::engine
