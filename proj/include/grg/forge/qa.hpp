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

#include <string>
#include <string_view>
#include <vector>

#include "grg/embed/chunk.hpp"
#include "grg/forge/records.hpp"

namespace grg::forge {

/// Question/answer proposer. Failures are reported as Error(adapter).
class QaGeneratorClient {
 public:
  virtual ~QaGeneratorClient() = default;
  virtual std::string name() const = 0;
  virtual std::vector<QaPair> generate(std::string_view chunk_text, std::string_view instruction) = 0;
};

/// Case-insensitive containment of the answer in the source text.
bool is_grounded(std::string_view answer, std::string_view source);

/// Deterministic generator over declarative sentences:
///   "X serves as Y."  -> ("What is the purpose of x?", the whole sentence)
///   "X is Y."         -> ("What is X?", "Y")
/// A leading article of X ("The", "A", "An") is lowercased inside the
/// question. Every answer is a substring of the input.
class StubQaGenerator final : public QaGeneratorClient {
 public:
  std::string name() const override { return "stub-qa"; }
  std::vector<QaPair> generate(std::string_view chunk_text, std::string_view instruction) override;
};

struct GeneratedQa {
  std::vector<QaPair> pairs;
  std::vector<std::string> notices;
};

/// Runs the generator and flags (not drops) ungrounded answers. A failing
/// generator yields no pairs and a notice.
GeneratedQa generate_qa(const embed::Chunk& chunk, QaGeneratorClient& generator, std::string_view instruction);

}  // namespace grg::forge
