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

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "grg/corpus/types.hpp"

namespace grg::corpus {

/// Case-insensitive whole-word matcher over a fixed term set. Terms may
/// span several words ("pdu session"); word boundaries are any non-word
/// byte, so "mimo" matches inside "MIMO-OFDM".
class TermMatcher {
 public:
  explicit TermMatcher(const std::vector<std::string>& terms);

  /// Sorted, deduplicated lowercase terms found in any of the texts.
  std::vector<std::string> matches(std::initializer_list<std::string_view> texts) const;

  bool empty() const noexcept { return terms_.empty(); }
  const std::vector<std::string>& terms() const noexcept { return terms_; }

 private:
  std::vector<std::string> terms_;  // lowercase, sorted, unique
};

struct KeywordDecision {
  bool keep = false;
  std::vector<std::string> matched;
};

/// Throws Error(config) on an empty keyword set.
KeywordDecision keyword_filter(const CleanDocument& doc, const std::set<std::string>& keywords);
KeywordDecision keyword_filter(const CleanDocument& doc, const TermMatcher& keywords);

/// Denylist scan. An empty denylist keeps everything.
struct HarmfulDecision {
  bool keep = true;
  std::vector<std::string> hits;
};

HarmfulDecision harmful_screen(const CleanDocument& doc, const TermMatcher& denylist);

}  // namespace grg::corpus
