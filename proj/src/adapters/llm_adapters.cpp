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

#include "grg/adapters/llm_adapters.hpp"

#include "grg/common/error.hpp"
#include "grg/common/text.hpp"

namespace grg::adapters {

using nlohmann::json;

namespace {

constexpr const char* kJudgePrompt =
    "You screen documents for a telecommunications corpus. Reply with JSON only: "
    "{\"verdict\": \"keep\"} if the document is relevant, well-formed technical text, otherwise "
    "{\"verdict\": \"drop\", \"reason\": \"<short reason>\"}.";

constexpr const char* kExtractPrompt =
    "Extract factual relations from the text. Reply with a JSON array only, each item "
    "{\"subject\": str, \"subject_type\": str, \"predicate\": str, \"object\": str, "
    "\"object_type\": str, \"confidence\": number in [0,1]}. Use entity names exactly as written.";

constexpr const char* kQaPrompt =
    "Write question/answer pairs answerable from the passage. The answer must be copied from the "
    "passage. Reply with a JSON array only, each item {\"question\": str, \"answer\": str}.";

constexpr const char* kRecordJudgePrompt =
    "Rate the instruction record against its source passage for accuracy and relevance. Reply with "
    "JSON only: {\"score\": number in [0,1], \"reason\": str}.";

std::string truncate_chars(std::string_view s, std::size_t max_chars) {
  const auto offsets = text::utf8_offsets(s);
  if (offsets.size() - 1 <= max_chars) return std::string(s);
  return std::string(s.substr(0, offsets[max_chars]));
}

}  // namespace

json extract_json(std::string_view reply) {
  for (std::size_t start = 0; start < reply.size(); ++start) {
    if (reply[start] != '{' && reply[start] != '[') continue;
    const char close = reply[start] == '{' ? '}' : ']';
    for (std::size_t end = reply.rfind(close); end != std::string_view::npos && end > start;
         end = end == 0 ? std::string_view::npos : reply.rfind(close, end - 1)) {
      try {
        return json::parse(reply.substr(start, end - start + 1));
      } catch (const json::exception&) {
      }
    }
  }
  throw Error(ErrorKind::adapter, "reply contains no JSON value: " + std::string(reply.substr(0, 120)));
}

engine::GenerationResponse LlmGenerator::generate(const engine::GenerationRequest& request) {
  engine::GenerationRequest body = request;
  body.system_preamble.clear();
  auto reply = chat_.complete(request.system_preamble, body.render());
  return {std::move(reply.content), name(), std::move(reply.usage)};
}

std::string LlmJudge::assess(const corpus::CleanDocument& doc) {
  const std::string user = "Title: " + doc.title + "\n\n" + truncate_chars(doc.body, max_body_chars_);
  return chat_.complete(kJudgePrompt, user).content;
}

kgraph::ExtractorReply LlmExtractor::parse_reply(std::string_view reply) {
  kgraph::ExtractorReply out;
  const json items = extract_json(reply);
  if (!items.is_array()) throw Error(ErrorKind::adapter, "extractor reply is not a JSON array");
  for (const auto& item : items) {
    try {
      kgraph::RawTriple t;
      t.subject = item.at("subject").get<std::string>();
      t.predicate = item.at("predicate").get<std::string>();
      t.object = item.at("object").get<std::string>();
      t.subject_type = item.value("subject_type", "");
      t.object_type = item.value("object_type", "");
      t.confidence = item.value("confidence", 1.0);
      out.triples.push_back(std::move(t));
    } catch (const json::exception&) {
      ++out.malformed;
    }
  }
  return out;
}

kgraph::ExtractorReply LlmExtractor::extract(std::string_view text) {
  return parse_reply(chat_.complete(kExtractPrompt, std::string(text)).content);
}

std::vector<std::string> LlmExtractor::mention_candidates(std::string_view text) {
  return kgraph::noun_phrase_candidates(text);
}

std::vector<forge::QaPair> LlmQaGenerator::generate(std::string_view chunk_text, std::string_view instruction) {
  const std::string user = "Task: " + std::string(instruction) + "\n\nPassage:\n" + std::string(chunk_text);
  const json items = extract_json(chat_.complete(kQaPrompt, user).content);
  if (!items.is_array()) throw Error(ErrorKind::adapter, "qa reply is not a JSON array");
  std::vector<forge::QaPair> out;
  for (const auto& item : items) {
    if (!item.is_object() || !item.contains("question") || !item.contains("answer")) continue;
    if (!item["question"].is_string() || !item["answer"].is_string()) continue;
    out.push_back({item["question"].get<std::string>(), item["answer"].get<std::string>(), true});
  }
  return out;
}

forge::RecordVerdict LlmRecordJudge::judge(const forge::SourcedRecord& record) {
  const std::string user = "Source:\n" + record.source_text + "\n\nRecord:\n" + forge::record_to_line(record.record);
  const json verdict = extract_json(chat_.complete(kRecordJudgePrompt, user).content);
  try {
    forge::RecordVerdict v;
    v.score = verdict.at("score").get<double>();
    v.reason = verdict.value("reason", "");
    return v;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::adapter, std::string("record judge reply lacks a score: ") + e.what());
  }
}

HttpEmbedder::HttpEmbedder(HttpEndpoint endpoint, std::string model, std::size_t dim)
    : endpoint_(std::move(endpoint)), model_(std::move(model)), dim_(dim) {
  if (dim_ == 0) throw Error(ErrorKind::config, "http embedder needs a positive dim");
}

std::vector<float> HttpEmbedder::embed_raw(std::string_view text) {
  const json reply = post_json(endpoint_, {{"model", model_}, {"input", std::string(text)}});
  try {
    return reply.at("data").at(0).at("embedding").get<std::vector<float>>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::adapter, std::string("embedding reply lacks data[0].embedding: ") + e.what());
  }
}

}  // namespace grg::adapters
