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

#include <filesystem>
#include <string>

#include <json.hpp>

#include "grg/kgraph/graph.hpp"

namespace grg::kgraph {

inline constexpr int kGraphSchemaVersion = 1;

void to_json(nlohmann::json& j, const Entity& e);
void from_json(const nlohmann::json& j, Entity& e);
void to_json(nlohmann::json& j, const Relation& r);
void from_json(const nlohmann::json& j, Relation& r);

/// {"schema_version": 1, "entities": [...by id], "relations": [...sorted]}
nlohmann::json graph_to_json(const KnowledgeGraph& graph);
/// Throws Error(format) on a schema version mismatch, a missing field or a
/// broken invariant.
KnowledgeGraph graph_from_json(const nlohmann::json& j);

void write_graph(const KnowledgeGraph& graph, const std::filesystem::path& path);
KnowledgeGraph read_graph(const std::filesystem::path& path);

/// openCypher-style MERGE statements, one per line: nodes first, then edges.
std::string graph_to_statements(const KnowledgeGraph& graph);

}  // namespace grg::kgraph
