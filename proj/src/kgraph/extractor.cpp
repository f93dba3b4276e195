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

#include "grg/kgraph/extractor.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "grg/common/error.hpp"
#include "grg/common/text.hpp"
#include "grg/kgraph/graph.hpp"

namespace grg::kgraph {

namespace {

const std::set<std::string, std::less<>> kStopwords = {
    "a",       "about", "all",   "also",   "am",     "among", "an",    "and",   "another", "any",   "are",
    "as",      "at",    "be",    "been",   "being",  "both",  "but",   "by",    "can",     "could", "did",
    "do",      "does",  "done",  "during", "each",   "either", "every", "for",  "from",    "had",   "has",
    "have",    "he",    "her",   "here",   "his",    "how",   "i",     "if",    "in",      "into",  "is",
    "it",      "its",   "may",   "me",     "might",  "must",  "my",    "neither", "no",    "nor",   "not",
    "of",      "on",    "onto",  "or",     "other",  "our",   "over",  "she",   "shall",   "should", "so",
    "some",    "such",  "than",  "that",   "the",    "their", "them",  "then",  "there",   "these", "they",
    "this",    "those", "through", "to",   "under",  "via",   "was",   "we",    "were",    "what",  "when",
    "where",   "whether", "which", "who",  "whom",   "whose", "why",   "will",  "with",    "would", "you",
    "your",
};

const std::set<std::string, std::less<>> kDeterminers = {"a", "an", "the"};

bool is_connector(char c) { return c == '-' || c == '/' || c == '.' || c == '_'; }

struct Token {
  std::string text;
  std::string lowered;
  bool break_before = false;  // punctuation between this token and the previous one
};

// Word-byte runs joined by single connectors; any other non-space byte is a
// phrase break.
std::vector<Token> tokenize(std::string_view s, bool* trailing_break = nullptr) {
  std::vector<Token> out;
  bool pending_break = false;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (text::is_word_byte(c)) {
      std::size_t j = i;
      while (j < s.size()) {
        if (text::is_word_byte(s[j])) {
          ++j;
        } else if (is_connector(s[j]) && j + 1 < s.size() && text::is_word_byte(s[j + 1])) {
          ++j;
        } else {
          break;
        }
      }
      Token t;
      t.text = std::string(s.substr(i, j - i));
      t.lowered = text::to_lower(t.text);
      t.break_before = pending_break;
      out.push_back(std::move(t));
      pending_break = false;
      i = j;
    } else {
      if (!text::is_space(c)) pending_break = true;
      ++i;
    }
  }
  if (trailing_break) *trailing_break = pending_break;
  return out;
}

std::string join_tokens(const std::vector<Token>& toks, std::size_t from, std::size_t to) {
  std::string out;
  for (std::size_t i = from; i < to; ++i) {
    if (i > from) out.push_back(' ');
    out += toks[i].text;
  }
  return out;
}

std::vector<std::string> sentences(std::string_view body) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    bool end = i == body.size() || body[i] == '\n';
    if (!end && (body[i] == '.' || body[i] == '!' || body[i] == '?' || body[i] == ';')) {
      end = i + 1 == body.size() || text::is_space(body[i + 1]);
    }
    if (!end) continue;
    std::string s = text::collapse_whitespace(body.substr(start, i - start));
    if (!s.empty()) out.push_back(std::move(s));
    start = i + 1;
  }
  return out;
}

bool boundary(std::string_view s, std::size_t pos) {
  if (pos >= s.size()) return true;
  return !text::is_word_byte(s[pos]);
}

std::string clean_field(std::string_view s) { return text::collapse_whitespace(s); }

std::string clean_predicate(std::string_view s) {
  std::string p = text::collapse_whitespace(text::to_lower(s));
  std::replace(p.begin(), p.end(), ' ', '_');
  return p;
}

}  // namespace

bool is_stopword(std::string_view lowered_word) { return kStopwords.contains(lowered_word); }

std::vector<std::string> noun_phrase_candidates(std::string_view text, std::size_t max_words) {
  const auto toks = tokenize(text);
  std::vector<std::string> out;
  std::set<std::string> seen;
  std::size_t i = 0;
  while (i < toks.size()) {
    if (is_stopword(toks[i].lowered)) {
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    while (j < toks.size() && !toks[j].break_before && !is_stopword(toks[j].lowered)) ++j;
    for (std::size_t a = i; a < j; ++a) {
      for (std::size_t n = std::min(max_words, j - a); n >= 1; --n) {
        std::string phrase = join_tokens(toks, a, a + n);
        if (seen.insert(phrase).second) out.push_back(std::move(phrase));
      }
    }
    i = j;
  }
  return out;
}

PatternExtractor::PatternExtractor(PatternExtractorConfig config) : config_(std::move(config)) {
  if (config_.rules.empty()) throw Error(ErrorKind::config, "pattern extractor needs at least one rule");
  for (auto& r : config_.rules) {
    r.verb = text::collapse_whitespace(text::to_lower(r.verb));
    if (r.verb.empty() || r.predicate.empty()) throw Error(ErrorKind::config, "pattern rule with empty verb");
  }
  if (config_.max_entity_words == 0) throw Error(ErrorKind::config, "max_entity_words must be positive");
}

std::vector<PatternRule> PatternExtractor::default_rules() {
  return {
      {"selects", "selects"},       {"controls", "controls"},     {"manages", "manages"},
      {"allocates", "allocates"},   {"forwards", "forwards"},     {"authenticates", "authenticates"},
      {"triggers", "triggers"},     {"supports", "supports"},     {"hosts", "hosts"},
      {"serves", "serves"},         {"connects to", "connects_to"}, {"is part of", "part_of"},
      {"interfaces with", "interfaces_with"},
  };
}

ExtractorReply PatternExtractor::extract(std::string_view body) {
  ExtractorReply reply;
  auto type_of = [this](const std::string& name) {
    auto it = config_.types.find(normalize_surface(name));
    return it == config_.types.end() ? config_.default_type : it->second;
  };
  for (const auto& sentence : sentences(body)) {
    const std::string lowered = text::to_lower(sentence);
    for (const auto& rule : config_.rules) {
      for (std::size_t pos = lowered.find(rule.verb); pos != std::string::npos;
           pos = lowered.find(rule.verb, pos + 1)) {
        const std::size_t end = pos + rule.verb.size();
        if ((pos > 0 && !boundary(lowered, pos - 1)) || !boundary(lowered, end)) continue;

        bool trailing_break = false;
        const auto left = tokenize(std::string_view(sentence).substr(0, pos), &trailing_break);
        if (trailing_break || left.empty()) continue;
        std::size_t s_begin = left.size();
        while (s_begin > 0 && !is_stopword(left[s_begin - 1].lowered) &&
               left.size() - s_begin < config_.max_entity_words) {
          --s_begin;
          if (left[s_begin].break_before) break;
        }
        if (s_begin == left.size()) continue;

        const auto right = tokenize(std::string_view(sentence).substr(end));
        std::size_t o_begin = 0;
        if (!right.empty() && right[0].break_before) continue;
        while (o_begin < right.size() && kDeterminers.contains(right[o_begin].lowered)) ++o_begin;
        std::size_t o_end = o_begin;
        while (o_end < right.size() && !is_stopword(right[o_end].lowered) &&
               o_end - o_begin < config_.max_entity_words && (o_end == o_begin || !right[o_end].break_before)) {
          ++o_end;
        }
        if (o_end == o_begin) continue;

        RawTriple t;
        t.subject = join_tokens(left, s_begin, left.size());
        t.object = join_tokens(right, o_begin, o_end);
        t.predicate = rule.predicate;
        t.subject_type = type_of(t.subject);
        t.object_type = type_of(t.object);
        t.confidence = 1.0;
        reply.triples.push_back(std::move(t));
      }
    }
  }
  return reply;
}

std::vector<std::string> PatternExtractor::mention_candidates(std::string_view text) {
  return noun_phrase_candidates(text, config_.max_entity_words);
}

ExtractionResult extract_triples(const embed::Chunk& chunk, ExtractorClient& client, int max_attempts) {
  ExtractionResult result;
  result.chunk_id = chunk.chunk_id;
  ExtractorReply reply;
  for (int attempt = 1;; ++attempt) {
    try {
      reply = client.extract(chunk.text);
      break;
    } catch (const Error& e) {
      if (e.retryable() && attempt < max_attempts) continue;
      result.extracted = false;
      result.warnings.push_back("extraction failed after " + std::to_string(attempt) + " attempt(s): " + e.what());
      return result;
    } catch (const std::exception& e) {
      result.extracted = false;
      result.warnings.push_back(std::string("extraction failed: ") + e.what());
      return result;
    }
  }
  if (reply.malformed > 0) {
    result.warnings.push_back(std::to_string(reply.malformed) + " malformed item(s) in extractor output");
  }
  for (const auto& raw : reply.triples) {
    Triple t;
    t.subject = {clean_field(raw.subject), clean_field(raw.subject_type), chunk.chunk_id};
    t.object = {clean_field(raw.object), clean_field(raw.object_type), chunk.chunk_id};
    t.predicate = clean_predicate(raw.predicate);
    t.confidence = raw.confidence;
    if (t.subject.surface.empty() || t.object.surface.empty() || t.predicate.empty()) {
      result.warnings.push_back("triple with an empty field dropped");
      continue;
    }
    if (!std::isfinite(t.confidence) || t.confidence < 0.0 || t.confidence > 1.0) {
      result.warnings.push_back("triple (" + t.subject.surface + ", " + t.predicate + ", " + t.object.surface +
                                ") has confidence outside [0,1]; dropped");
      continue;
    }
    result.triples.push_back(std::move(t));
  }
  return result;
}

}  // namespace grg::kgraph
