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

#include "grg/forge/qa.hpp"

#include "grg/common/error.hpp"
#include "grg/common/text.hpp"

namespace grg::forge {

namespace {

// Sentences end at '.', '!' or '?' followed by whitespace or the end. The
// terminator stays with its sentence.
std::vector<std::string_view> sentences(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if ((c == '.' || c == '!' || c == '?') && (i + 1 == s.size() || text::is_space(s[i + 1]))) {
      auto sentence = text::trim(s.substr(start, i + 1 - start));
      if (!sentence.empty()) out.push_back(sentence);
      start = i + 1;
    }
  }
  return out;
}

std::string subject_phrase(std::string_view x) {
  std::string s(text::trim(x));
  if (s.starts_with("The ") || s.starts_with("A ") || s.starts_with("An ")) s[0] = static_cast<char>(s[0] - 'A' + 'a');
  return s;
}

// Position of " <verb> " in s, or npos.
std::size_t find_verb(std::string_view s, std::string_view verb) {
  const std::string needle = " " + std::string(verb) + " ";
  return s.find(needle);
}

}  // namespace

bool is_grounded(std::string_view answer, std::string_view source) {
  return !text::trim(answer).empty() && text::icontains(source, text::trim(answer));
}

std::vector<QaPair> StubQaGenerator::generate(std::string_view chunk_text, std::string_view) {
  std::vector<QaPair> out;
  for (auto sentence : sentences(chunk_text)) {
    if (sentence.back() != '.') continue;
    const std::string_view body = sentence.substr(0, sentence.size() - 1);
    if (body.find('\n') != std::string_view::npos) continue;
    if (auto pos = find_verb(body, "serves as"); pos != std::string_view::npos && pos > 0) {
      out.push_back({"What is the purpose of " + subject_phrase(body.substr(0, pos)) + "?", std::string(sentence), true});
      continue;
    }
    if (auto pos = find_verb(body, "is"); pos != std::string_view::npos && pos > 0) {
      const auto x = text::trim(body.substr(0, pos));
      const auto y = text::trim(body.substr(pos + 4));
      if (x.empty() || y.empty()) continue;
      out.push_back({"What is " + subject_phrase(x) + "?", std::string(y), true});
    }
  }
  return out;
}

GeneratedQa generate_qa(const embed::Chunk& chunk, QaGeneratorClient& generator, std::string_view instruction) {
  GeneratedQa result;
  if (text::trim(chunk.text).empty()) return result;
  try {
    result.pairs = generator.generate(chunk.text, instruction);
  } catch (const std::exception& e) {
    result.notices.push_back(chunk.chunk_id + ": qa generator '" + generator.name() + "' failed, chunk skipped: " +
                             e.what());
    return result;
  }
  for (auto& p : result.pairs) {
    p.grounded = is_grounded(p.answer, chunk.text);
    if (!p.grounded) result.notices.push_back(chunk.chunk_id + ": ungrounded answer flagged: " + p.answer);
  }
  return result;
}

}  // namespace grg::forge
