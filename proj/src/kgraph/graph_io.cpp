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

#include "grg/kgraph/graph_io.hpp"

#include "grg/common/error.hpp"
#include "grg/common/io.hpp"

namespace grg::kgraph {

using nlohmann::json;

void to_json(json& j, const Entity& e) {
  j = json{{"entity_id", e.entity_id},
           {"canonical_name", e.canonical_name},
           {"type", e.type},
           {"aliases", e.aliases},
           {"provenance", e.provenance}};
}

void from_json(const json& j, Entity& e) {
  j.at("entity_id").get_to(e.entity_id);
  j.at("canonical_name").get_to(e.canonical_name);
  j.at("type").get_to(e.type);
  j.at("aliases").get_to(e.aliases);
  j.at("provenance").get_to(e.provenance);
}

void to_json(json& j, const Relation& r) {
  j = json{{"subject_id", r.subject_id},
           {"predicate", r.predicate},
           {"object_id", r.object_id},
           {"confidence", r.confidence},
           {"provenance", r.provenance}};
}

void from_json(const json& j, Relation& r) {
  j.at("subject_id").get_to(r.subject_id);
  j.at("predicate").get_to(r.predicate);
  j.at("object_id").get_to(r.object_id);
  j.at("confidence").get_to(r.confidence);
  j.at("provenance").get_to(r.provenance);
}

json graph_to_json(const KnowledgeGraph& graph) {
  json entities = json::array();
  for (const auto& [_, e] : graph.entities()) entities.push_back(e);
  return json{{"schema_version", kGraphSchemaVersion}, {"entities", entities}, {"relations", graph.relations()}};
}

KnowledgeGraph graph_from_json(const json& j) {
  try {
    const int version = j.at("schema_version").get<int>();
    if (version != kGraphSchemaVersion) {
      throw Error(ErrorKind::format, "graph schema version mismatch: file has " + std::to_string(version) +
                                         ", expected " + std::to_string(kGraphSchemaVersion));
    }
    std::map<std::string, Entity> entities;
    for (const auto& item : j.at("entities")) {
      auto e = item.get<Entity>();
      const std::string id = e.entity_id;
      if (!entities.emplace(id, std::move(e)).second) {
        throw Error(ErrorKind::format, "duplicate entity id '" + id + "'");
      }
    }
    return KnowledgeGraph(std::move(entities), j.at("relations").get<std::vector<Relation>>());
  } catch (const json::exception& e) {
    throw Error(ErrorKind::format, std::string("malformed graph export: ") + e.what());
  }
}

void write_graph(const KnowledgeGraph& graph, const std::filesystem::path& path) {
  io::write_file(path, graph_to_json(graph).dump(1) + "\n");
}

KnowledgeGraph read_graph(const std::filesystem::path& path) {
  const std::string content = io::read_file(path);
  json j;
  try {
    j = json::parse(content);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::format, path.string() + ": " + e.what());
  }
  try {
    return graph_from_json(j);
  } catch (const Error& e) {
    throw Error(ErrorKind::format, path.string() + ": " + e.what());
  }
}

std::string graph_to_statements(const KnowledgeGraph& graph) {
  auto lit = [](const auto& v) { return json(v).dump(); };
  std::string out;
  for (const auto& [id, e] : graph.entities()) {
    out += "MERGE (n:Entity {id: " + lit(id) + "}) SET n.name = " + lit(e.canonical_name) +
           ", n.type = " + lit(e.type) + ", n.aliases = " + lit(e.aliases) +
           ", n.provenance = " + lit(e.provenance) + ";\n";
  }
  for (const auto& r : graph.relations()) {
    out += "MATCH (s:Entity {id: " + lit(r.subject_id) + "}), (o:Entity {id: " + lit(r.object_id) +
           "}) MERGE (s)-[r:RELATES {predicate: " + lit(r.predicate) + "}]->(o) SET r.confidence = " +
           lit(r.confidence) + ", r.provenance = " + lit(r.provenance) + ";\n";
  }
  return out;
}

}  // namespace grg::kgraph
