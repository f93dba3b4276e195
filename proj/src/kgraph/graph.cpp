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

#include "grg/kgraph/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <tuple>

#include "grg/common/error.hpp"
#include "grg/common/text.hpp"

namespace grg::kgraph {

namespace {

const std::vector<std::size_t> kNoEdges;

auto triple_key(const Relation& r) { return std::tie(r.subject_id, r.predicate, r.object_id); }

[[noreturn]] void broken(const std::string& what) { throw Error(ErrorKind::format, "graph integrity: " + what); }

}  // namespace

std::string normalize_surface(std::string_view surface) {
  std::string s = text::collapse_whitespace(text::to_lower(surface));
  if (s.size() > 3 && s.back() == 's') s.pop_back();
  return s;
}

std::string entity_id_for(std::string_view canonical_name, std::string_view type) {
  std::string key = normalize_surface(canonical_name);
  key.push_back('\x1f');
  key.append(type);
  return "e" + text::hex64(text::fnv1a64(key));
}

KnowledgeGraph::KnowledgeGraph(std::map<std::string, Entity> entities, std::vector<Relation> relations)
    : entities_(std::move(entities)), relations_(std::move(relations)) {
  std::sort(relations_.begin(), relations_.end(),
            [](const Relation& a, const Relation& b) { return triple_key(a) < triple_key(b); });
  check_integrity();
  index();
}

void KnowledgeGraph::index() {
  out_.clear();
  in_.clear();
  by_name_.clear();
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    out_[relations_[i].subject_id].push_back(i);
    in_[relations_[i].object_id].push_back(i);
  }
  // Map iteration is id-ordered, so a name shared by two entities resolves to
  // the smaller id.
  for (const auto& [id, e] : entities_) {
    by_name_.try_emplace(normalize_surface(e.canonical_name), id);
    for (const auto& alias : e.aliases) by_name_.try_emplace(normalize_surface(alias), id);
  }
}

void KnowledgeGraph::check_integrity() const {
  for (const auto& [id, e] : entities_) {
    if (id.empty() || id != e.entity_id) broken("entity key '" + id + "' does not match its id");
    if (e.canonical_name.empty()) broken("entity '" + id + "' has no canonical name");
    if (!e.aliases.contains(e.canonical_name)) broken("entity '" + id + "' canonical name is not an alias");
    if (e.provenance.empty()) broken("entity '" + id + "' has no provenance");
  }
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    const Relation& r = relations_[i];
    if (!entities_.contains(r.subject_id)) broken("dangling subject '" + r.subject_id + "'");
    if (!entities_.contains(r.object_id)) broken("dangling object '" + r.object_id + "'");
    if (r.subject_id == r.object_id) broken("self-loop on '" + r.subject_id + "'");
    if (r.predicate.empty()) broken("empty predicate");
    if (!std::isfinite(r.confidence) || r.confidence < 0.0 || r.confidence > 1.0) broken("confidence out of [0,1]");
    if (r.provenance.empty()) broken("relation without provenance");
    if (i > 0 && triple_key(relations_[i - 1]) == triple_key(r)) {
      broken("duplicate relation " + r.subject_id + " " + r.predicate + " " + r.object_id);
    }
  }
}

const Entity* KnowledgeGraph::find(std::string_view id) const {
  auto it = entities_.find(std::string(id));
  return it == entities_.end() ? nullptr : &it->second;
}

const std::vector<std::size_t>& KnowledgeGraph::outgoing(std::string_view id) const {
  auto it = out_.find(std::string(id));
  return it == out_.end() ? kNoEdges : it->second;
}

const std::vector<std::size_t>& KnowledgeGraph::incoming(std::string_view id) const {
  auto it = in_.find(std::string(id));
  return it == in_.end() ? kNoEdges : it->second;
}

std::optional<std::string> KnowledgeGraph::resolve(std::string_view surface) const {
  auto it = by_name_.find(normalize_surface(surface));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

Neighborhood neighborhood(const KnowledgeGraph& graph, const std::vector<std::string>& seeds, int depth) {
  if (depth != 1 && depth != 2) {
    throw Error(ErrorKind::contract, "neighborhood depth must be 1 or 2, got " + std::to_string(depth));
  }
  Neighborhood result;
  std::map<std::string, int> dist;
  std::deque<std::string> queue;
  for (const auto& s : seeds) {
    if (!graph.find(s)) {
      result.notices.push_back("unknown entity '" + s + "' skipped");
      continue;
    }
    if (dist.emplace(s, 0).second) queue.push_back(s);
  }
  while (!queue.empty()) {
    const std::string cur = std::move(queue.front());
    queue.pop_front();
    const int d = dist[cur];
    if (d == depth) continue;
    auto visit = [&](const std::string& next) {
      if (dist.emplace(next, d + 1).second) queue.push_back(next);
    };
    for (std::size_t i : graph.outgoing(cur)) visit(graph.relations()[i].object_id);
    for (std::size_t i : graph.incoming(cur)) visit(graph.relations()[i].subject_id);
  }

  std::map<std::string, Entity> entities;
  for (const auto& [id, _] : dist) entities.emplace(id, *graph.find(id));
  std::vector<Relation> relations;
  for (const auto& r : graph.relations()) {
    if (dist.contains(r.subject_id) && dist.contains(r.object_id)) relations.push_back(r);
  }
  result.subgraph = KnowledgeGraph(std::move(entities), std::move(relations));
  return result;
}

}  // namespace grg::kgraph
