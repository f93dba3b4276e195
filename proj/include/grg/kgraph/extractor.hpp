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
#include <string_view>
#include <vector>

#include "grg/embed/chunk.hpp"

namespace grg::kgraph {

struct EntityMention {
  std::string surface;
  std::string type_hint;
  std::string chunk_id;  // empty for mentions found in a query

  bool operator==(const EntityMention&) const = default;
};

/// Unvalidated extractor output.
struct RawTriple {
  std::string subject;
  std::string subject_type;
  std::string predicate;
  std::string object;
  std::string object_type;
  double confidence = 1.0;
};

struct ExtractorReply {
  std::vector<RawTriple> triples;
  std::size_t malformed = 0;  // items the backend could not even decode
};

/// Backend that proposes triples for a chunk and entity mentions for a query.
/// Transport failures are reported as Error(adapter) with retryable set.
class ExtractorClient {
 public:
  virtual ~ExtractorClient() = default;
  virtual std::string name() const = 0;
  virtual ExtractorReply extract(std::string_view text) = 0;
  virtual std::vector<std::string> mention_candidates(std::string_view text) = 0;
};

struct Triple {
  EntityMention subject;
  std::string predicate;
  EntityMention object;
  double confidence = 1.0;
};

struct ExtractionResult {
  std::string chunk_id;
  std::vector<Triple> triples;
  std::vector<std::string> warnings;
  bool extracted = true;  // false when the backend kept failing
};

/// Validates backend output for one chunk. Triples with an empty field or a
/// confidence outside [0, 1] are dropped with a warning. Retryable failures
/// are retried up to max_attempts in total; after that, or on a
/// non-retryable failure, the chunk is returned unextracted.
ExtractionResult extract_triples(const embed::Chunk& chunk, ExtractorClient& client, int max_attempts = 3);

/// Lowercased function words that never start or end an entity name.
bool is_stopword(std::string_view lowered_word);

/// All n-grams (n <= max_words) inside maximal runs of non-stopword tokens.
/// Tokens keep internal '-', '/', '.', '_' so names like "802.11" survive.
std::vector<std::string> noun_phrase_candidates(std::string_view text, std::size_t max_words = 4);

struct PatternRule {
  std::string verb;       // matched case-insensitively on word boundaries
  std::string predicate;  // stored predicate
};

struct PatternExtractorConfig {
  std::vector<PatternRule> rules;
  /// normalize_surface(name) -> type; unknown names get default_type.
  std::map<std::string, std::string> types;
  std::string default_type = "entity";
  std::size_t max_entity_words = 4;
};

/// Deterministic rule-based extractor. Within each sentence a rule
/// "X <verb> Y" yields (X, predicate, Y, 1.0), where X is the trailing run
/// of non-stopword tokens before the verb and Y the leading run after it.
class PatternExtractor final : public ExtractorClient {
 public:
  explicit PatternExtractor(PatternExtractorConfig config);
  std::string name() const override { return "pattern"; }
  ExtractorReply extract(std::string_view text) override;
  std::vector<std::string> mention_candidates(std::string_view text) override;

  /// A handful of protocol verbs ("selects", "serves", "controls", ...).
  static std::vector<PatternRule> default_rules();

 private:
  PatternExtractorConfig config_;
};

}  // namespace grg::kgraph
