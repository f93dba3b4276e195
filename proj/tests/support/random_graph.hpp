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
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "grg/kgraph/graph.hpp"
#include "oracles.hpp"

namespace grg::testing {

/// Random graph over `n` nodes with about `edges` distinct non-loop
/// relations, plus the same graph as a plain edge list for the oracle.
inline std::pair<kgraph::KnowledgeGraph, OracleGraph> random_graph(std::mt19937_64& rng, std::size_t n,
                                                                   std::size_t edges) {
  OracleGraph og;
  std::map<std::string, kgraph::Entity> entities;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string id = "n" + std::to_string(i);
    og.nodes.push_back(id);
    entities.emplace(id, kgraph::Entity{id, "node " + std::to_string(i), "entity", {"node " + std::to_string(i)}, {"c"}});
  }
  static const char* preds[] = {"links", "feeds", "controls"};
  std::set<std::tuple<std::string, std::string, std::string>> seen;
  std::vector<kgraph::Relation> relations;
  for (std::size_t k = 0; k < edges; ++k) {
    const std::size_t a = rng() % n;
    const std::size_t b = rng() % n;
    if (a == b) continue;
    auto key = std::make_tuple(og.nodes[a], std::string(preds[rng() % 3]), og.nodes[b]);
    if (!seen.insert(key).second) continue;
    og.edges.push_back(key);
    relations.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), 1.0, {"c"}});
  }
  return {kgraph::KnowledgeGraph(std::move(entities), std::move(relations)), std::move(og)};
}

}  // namespace grg::testing
