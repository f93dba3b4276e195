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

#include "grg/gateway/config.hpp"

#include <cstdlib>
#include <set>

#include "grg/common/error.hpp"
#include "grg/common/io.hpp"

namespace grg::gateway {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::config, "config: " + what); }

void only_keys(const json& j, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) bad(where + " must be an object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, _] : j.items()) {
    if (!ok.contains(key)) bad("unknown key '" + key + "' in " + where);
  }
}

template <typename T>
void read(const json& j, const char* key, T& out, const std::string& where) {
  if (!j.contains(key)) return;
  try {
    j.at(key).get_to(out);
  } catch (const json::exception&) {
    bad(where + "." + key + " has the wrong type");
  }
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
  std::filesystem::path path(p);
  return path.is_absolute() ? path : base / path;
}

std::filesystem::path existing_file(const std::filesystem::path& base, const std::string& p, const std::string& where) {
  auto path = resolve(base, p);
  if (!std::filesystem::is_regular_file(path)) bad(where + " refers to missing file '" + path.string() + "'");
  return path;
}

void in_unit_interval(double v, const std::string& where) {
  if (!(v >= 0.0 && v <= 1.0)) bad(where + " must be in [0,1]");
}

AdapterConfig parse_adapter(const json& j, const std::filesystem::path& base, const std::string& where,
                            AdapterConfig current, bool may_be_none) {
  only_keys(j, where,
            {"kind", "fixture", "base_url", "path", "model", "api_key_env", "timeout_seconds", "max_attempts",
             "temperature", "max_tokens"});
  read(j, "kind", current.kind, where);
  if (current.kind != "stub" && current.kind != "http" && !(may_be_none && current.kind == "none")) {
    bad(where + ".kind must be " + std::string(may_be_none ? "stub, http or none" : "stub or http"));
  }
  if (j.contains("fixture")) current.fixture = existing_file(base, j.at("fixture").get<std::string>(), where + ".fixture");
  auto& ep = current.chat.endpoint;
  read(j, "base_url", ep.base_url, where);
  read(j, "path", ep.path, where);
  read(j, "api_key_env", ep.api_key_env, where);
  read(j, "timeout_seconds", ep.timeout_seconds, where);
  read(j, "max_attempts", ep.max_attempts, where);
  read(j, "model", current.chat.model, where);
  read(j, "temperature", current.chat.temperature, where);
  read(j, "max_tokens", current.chat.max_tokens, where);
  if (current.kind == "http" && current.chat.model.empty()) bad(where + " of kind http needs a model");
  if (ep.timeout_seconds <= 0 || ep.max_attempts <= 0) bad(where + " timeout and attempts must be positive");
  return current;
}

std::vector<std::string> terms(const json& j, const char* list_key, const char* file_key,
                               const std::filesystem::path& base, const std::string& where) {
  std::vector<std::string> out;
  read(j, list_key, out, where);
  if (j.contains(file_key)) {
    auto file = existing_file(base, j.at(file_key).get<std::string>(), where + "." + file_key);
    for (auto& t : io::read_term_list(file)) out.push_back(std::move(t));
  }
  return out;
}

void apply_env(EngineConfig& c) {
  if (const char* root = std::getenv(kStoreRootEnv); root && *root) c.store_root = root;
}

}  // namespace

EngineConfig config_from_json(const json& j, const std::filesystem::path& base_dir) {
  only_keys(j, "config",
            {"store_root", "corpus", "judge_stub", "chunking", "embedder", "index", "extractor_stub", "engine", "forge",
             "adapters"});
  EngineConfig c;
  if (j.contains("store_root")) c.store_root = resolve(base_dir, j.at("store_root").get<std::string>());

  if (j.contains("corpus")) {
    const auto& s = j.at("corpus");
    only_keys(s, "corpus",
              {"keywords", "keywords_file", "denylist", "denylist_file", "keyword_filter", "judge_filter", "dedup",
               "workers", "max_load_failure_ratio"});
    auto& p = c.pipeline;
    p.keywords = terms(s, "keywords", "keywords_file", base_dir, "corpus");
    p.denylist = terms(s, "denylist", "denylist_file", base_dir, "corpus");
    read(s, "keyword_filter", p.keyword_filter_enabled, "corpus");
    read(s, "judge_filter", p.judge_filter_enabled, "corpus");
    read(s, "workers", p.workers, "corpus");
    read(s, "max_load_failure_ratio", p.max_load_failure_ratio, "corpus");
    if (s.contains("dedup")) {
      only_keys(s.at("dedup"), "corpus.dedup", {"shingle_words", "near_threshold"});
      read(s.at("dedup"), "shingle_words", p.dedup.shingle_words, "corpus.dedup");
      read(s.at("dedup"), "near_threshold", p.dedup.near_threshold, "corpus.dedup");
    }
    if (p.workers == 0) bad("corpus.workers must be at least 1");
    if (p.dedup.shingle_words == 0) bad("corpus.dedup.shingle_words must be at least 1");
    if (!(p.dedup.near_threshold > 0.0 && p.dedup.near_threshold <= 1.0)) bad("corpus.dedup.near_threshold must be in (0,1]");
    in_unit_interval(p.max_load_failure_ratio, "corpus.max_load_failure_ratio");
  }

  if (j.contains("judge_stub")) {
    const auto& s = j.at("judge_stub");
    only_keys(s, "judge_stub", {"topics", "min_type_token_ratio", "ttr_window", "min_tokens_for_quality"});
    read(s, "topics", c.judge_stub.topics, "judge_stub");
    read(s, "min_type_token_ratio", c.judge_stub.min_type_token_ratio, "judge_stub");
    read(s, "ttr_window", c.judge_stub.ttr_window, "judge_stub");
    read(s, "min_tokens_for_quality", c.judge_stub.min_tokens_for_quality, "judge_stub");
    in_unit_interval(c.judge_stub.min_type_token_ratio, "judge_stub.min_type_token_ratio");
    if (c.judge_stub.ttr_window == 0) bad("judge_stub.ttr_window must be positive");
  }

  if (j.contains("chunking")) {
    const auto& s = j.at("chunking");
    only_keys(s, "chunking", {"target_chars", "overlap_chars", "snap_window"});
    read(s, "target_chars", c.chunking.target_chars, "chunking");
    read(s, "overlap_chars", c.chunking.overlap_chars, "chunking");
    read(s, "snap_window", c.chunking.snap_window, "chunking");
  }
  if (c.chunking.target_chars <= c.chunking.overlap_chars) bad("chunking.target_chars must exceed overlap_chars");

  if (j.contains("embedder")) {
    const auto& s = j.at("embedder");
    only_keys(s, "embedder", {"kind", "dim", "base_url", "path", "model", "api_key_env", "timeout_seconds", "max_attempts"});
    read(s, "kind", c.embedder.kind, "embedder");
    read(s, "dim", c.embedder.dim, "embedder");
    read(s, "model", c.embedder.model, "embedder");
    read(s, "base_url", c.embedder.endpoint.base_url, "embedder");
    read(s, "path", c.embedder.endpoint.path, "embedder");
    read(s, "api_key_env", c.embedder.endpoint.api_key_env, "embedder");
    read(s, "timeout_seconds", c.embedder.endpoint.timeout_seconds, "embedder");
    read(s, "max_attempts", c.embedder.endpoint.max_attempts, "embedder");
    if (c.embedder.kind != "hashed-trigram" && c.embedder.kind != "http") {
      bad("embedder.kind must be hashed-trigram or http");
    }
  }
  if (c.embedder.kind == "hashed-trigram" && c.embedder.dim < 16) bad("embedder.dim must be at least 16");
  if (c.embedder.dim == 0) bad("embedder.dim must be positive");

  if (j.contains("index")) {
    const auto& s = j.at("index");
    only_keys(s, "index", {"mode", "m", "ef_construction", "ef_search", "seed"});
    if (s.contains("mode")) c.index_mode = vindex::parse_index_mode(s.at("mode").get<std::string>());
    read(s, "m", c.small_world.m, "index");
    read(s, "ef_construction", c.small_world.ef_construction, "index");
    read(s, "ef_search", c.small_world.ef_search, "index");
    read(s, "seed", c.small_world.seed, "index");
    if (c.small_world.m < 2 || c.small_world.ef_construction == 0 || c.small_world.ef_search == 0) {
      bad("index needs m >= 2 and positive ef values");
    }
  }

  if (j.contains("extractor_stub")) {
    const auto& s = j.at("extractor_stub");
    only_keys(s, "extractor_stub", {"rules", "types", "default_type", "max_entity_words", "max_attempts"});
    if (s.contains("rules")) {
      c.extractor_stub.rules.clear();
      for (const auto& r : s.at("rules")) {
        c.extractor_stub.rules.push_back({r.at("verb").get<std::string>(), r.at("predicate").get<std::string>()});
      }
    }
    read(s, "types", c.extractor_stub.types, "extractor_stub");
    read(s, "default_type", c.extractor_stub.default_type, "extractor_stub");
    read(s, "max_entity_words", c.extractor_stub.max_entity_words, "extractor_stub");
    read(s, "max_attempts", c.extract_attempts, "extractor_stub");
    if (c.extract_attempts < 1) bad("extractor_stub.max_attempts must be at least 1");
  }

  if (j.contains("engine")) {
    const auto& s = j.at("engine");
    only_keys(s, "engine", {"k", "depth", "budget_chars", "facts_first", "ocr_threshold", "system_preamble", "mode"});
    read(s, "k", c.engine.k, "engine");
    read(s, "depth", c.engine.depth, "engine");
    read(s, "budget_chars", c.engine.budget_chars, "engine");
    read(s, "facts_first", c.engine.facts_first, "engine");
    read(s, "ocr_threshold", c.engine.ocr_threshold, "engine");
    read(s, "system_preamble", c.engine.system_preamble, "engine");
    if (s.contains("mode")) c.default_mode = engine::parse_mode(s.at("mode").get<std::string>());
  }
  if (c.engine.k == 0) bad("engine.k must be at least 1");
  if (c.engine.depth != 1 && c.engine.depth != 2) bad("engine.depth must be 1 or 2");
  if (c.engine.budget_chars < engine::kMinBudgetChars) bad("engine.budget_chars must be at least 256");
  in_unit_interval(c.engine.ocr_threshold, "engine.ocr_threshold");

  if (j.contains("forge")) {
    const auto& s = j.at("forge");
    only_keys(s, "forge", {"instruction", "min_score"});
    read(s, "instruction", c.forge_instruction, "forge");
    read(s, "min_score", c.forge_min_score, "forge");
    in_unit_interval(c.forge_min_score, "forge.min_score");
    if (c.forge_instruction.empty()) bad("forge.instruction must not be empty");
  }

  if (j.contains("adapters")) {
    const auto& s = j.at("adapters");
    only_keys(s, "adapters", {"generator", "judge", "extractor", "qa", "record_judge", "captioner", "ocr"});
    auto apply = [&](const char* key, AdapterConfig& target, bool may_be_none) {
      if (s.contains(key)) target = parse_adapter(s.at(key), base_dir, std::string("adapters.") + key, target, may_be_none);
    };
    apply("generator", c.generator, false);
    apply("judge", c.judge, true);
    apply("extractor", c.extractor, false);
    apply("qa", c.qa, false);
    apply("record_judge", c.record_judge, false);
    apply("captioner", c.captioner, true);
    apply("ocr", c.ocr, true);
  }
  if (c.captioner.kind == "stub" && c.captioner.fixture.empty()) bad("adapters.captioner stub needs a fixture file");
  if (c.ocr.kind == "stub" && c.ocr.fixture.empty()) bad("adapters.ocr stub needs a fixture file");
  return c;
}

EngineConfig load_config(const std::filesystem::path& path) {
  json j;
  try {
    j = json::parse(io::read_file(path));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::config, "config " + path.string() + " is not valid JSON: " + e.what());
  } catch (const Error& e) {
    throw Error(ErrorKind::config, std::string("cannot read config: ") + e.what());
  }
  EngineConfig c;
  try {
    c = config_from_json(j, path.parent_path());
  } catch (const json::exception& e) {
    bad(path.string() + ": " + e.what());
  }
  apply_env(c);
  return c;
}

EngineConfig default_config() {
  EngineConfig c;
  apply_env(c);
  return c;
}

}  // namespace grg::gateway
