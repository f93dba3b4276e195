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
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "grg/adapters/chat_client.hpp"
#include "grg/corpus/judge.hpp"
#include "grg/embed/embedding.hpp"
#include "grg/engine/generator.hpp"
#include "grg/forge/qa.hpp"
#include "grg/forge/quality.hpp"
#include "grg/kgraph/extractor.hpp"

// Chat-backed implementations of the pluggable contracts. Each one sends a
// fixed instruction as the system message and parses a JSON reply; the
// prompts live in the .cpp next to their parsers.
namespace grg::adapters {

/// The first JSON value (object or array) embedded in free text, e.g. a
/// reply wrapped in prose or code fences. Throws Error(adapter) if none
/// parses.
nlohmann::json extract_json(std::string_view reply);

class LlmGenerator final : public engine::GeneratorClient {
 public:
  explicit LlmGenerator(ChatSettings settings) : chat_(std::move(settings)) {}
  std::string name() const override { return "llm:" + chat_.settings().model; }
  engine::GenerationResponse generate(const engine::GenerationRequest& request) override;

 private:
  ChatClient chat_;
};

/// Replies with the judge wire format; the raw reply is returned so
/// judge_filter records it verbatim.
class LlmJudge final : public corpus::JudgeClient {
 public:
  explicit LlmJudge(ChatSettings settings, std::size_t max_body_chars = 4000)
      : chat_(std::move(settings)), max_body_chars_(max_body_chars) {}
  std::string name() const override { return "llm-judge:" + chat_.settings().model; }
  std::string assess(const corpus::CleanDocument& doc) override;

 private:
  ChatClient chat_;
  std::size_t max_body_chars_;
};

/// Triples as a JSON array of {subject, subject_type, predicate, object,
/// object_type, confidence}; items that do not decode count as malformed.
/// Query mentions use the same noun-phrase candidates as the stub.
class LlmExtractor final : public kgraph::ExtractorClient {
 public:
  explicit LlmExtractor(ChatSettings settings) : chat_(std::move(settings)) {}
  std::string name() const override { return "llm-extractor:" + chat_.settings().model; }
  kgraph::ExtractorReply extract(std::string_view text) override;
  std::vector<std::string> mention_candidates(std::string_view text) override;

  static kgraph::ExtractorReply parse_reply(std::string_view reply);

 private:
  ChatClient chat_;
};

/// Pairs as a JSON array of {question, answer}.
class LlmQaGenerator final : public forge::QaGeneratorClient {
 public:
  explicit LlmQaGenerator(ChatSettings settings) : chat_(std::move(settings)) {}
  std::string name() const override { return "llm-qa:" + chat_.settings().model; }
  std::vector<forge::QaPair> generate(std::string_view chunk_text, std::string_view instruction) override;

 private:
  ChatClient chat_;
};

/// Verdict as {score, reason}.
class LlmRecordJudge final : public forge::RecordJudge {
 public:
  explicit LlmRecordJudge(ChatSettings settings) : chat_(std::move(settings)) {}
  std::string name() const override { return "llm-record-judge:" + chat_.settings().model; }
  forge::RecordVerdict judge(const forge::SourcedRecord& record) override;

 private:
  ChatClient chat_;
};

/// OpenAI-compatible embeddings endpoint: {"model", "input"} ->
/// {"data": [{"embedding": [...]}]}.
class HttpEmbedder final : public embed::Embedder {
 public:
  HttpEmbedder(HttpEndpoint endpoint, std::string model, std::size_t dim);
  std::string name() const override { return "http:" + model_; }
  std::size_t dim() const override { return dim_; }
  std::vector<float> embed_raw(std::string_view text) override;
  bool concurrent_safe() const override { return true; }

 private:
  HttpEndpoint endpoint_;
  std::string model_;
  std::size_t dim_;
};

}  // namespace grg::adapters
