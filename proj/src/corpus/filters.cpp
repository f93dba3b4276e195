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

#include "grg/corpus/filters.hpp"

#include <algorithm>

#include "grg/common/error.hpp"
#include "grg/common/text.hpp"

namespace grg::corpus {

TermMatcher::TermMatcher(const std::vector<std::string>& terms) {
  for (const auto& t : terms) {
    auto norm = text::to_lower(text::collapse_whitespace(t));
    if (!norm.empty()) terms_.push_back(std::move(norm));
  }
  std::sort(terms_.begin(), terms_.end());
  terms_.erase(std::unique(terms_.begin(), terms_.end()), terms_.end());
}

std::vector<std::string> TermMatcher::matches(std::initializer_list<std::string_view> texts) const {
  std::vector<std::string> lowered;
  lowered.reserve(texts.size());
  for (auto t : texts) {
    // Multi-word terms are stored with single spaces; match against the same
    // collapsed form.
    lowered.push_back(text::to_lower(text::collapse_whitespace(t)));
  }
  std::vector<std::string> out;
  for (const auto& term : terms_) {
    for (const auto& t : lowered) {
      if (text::contains_word(t, term)) {
        out.push_back(term);
        break;
      }
    }
  }
  return out;
}

KeywordDecision keyword_filter(const CleanDocument& doc, const TermMatcher& keywords) {
  if (keywords.empty()) throw Error(ErrorKind::config, "keyword filter needs a non-empty keyword set");
  KeywordDecision d;
  d.matched = keywords.matches({doc.title, doc.body});
  d.keep = !d.matched.empty();
  return d;
}

KeywordDecision keyword_filter(const CleanDocument& doc, const std::set<std::string>& keywords) {
  return keyword_filter(doc, TermMatcher({keywords.begin(), keywords.end()}));
}

HarmfulDecision harmful_screen(const CleanDocument& doc, const TermMatcher& denylist) {
  HarmfulDecision d;
  if (denylist.empty()) return d;
  d.hits = denylist.matches({doc.title, doc.body});
  d.keep = d.hits.empty();
  return d;
}

}  // namespace grg::corpus
