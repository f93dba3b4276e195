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
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace grg::embed {

struct EmbeddingVector {
  std::vector<float> values;
  bool normalized = false;

  std::size_t dim() const noexcept { return values.size(); }
  bool operator==(const EmbeddingVector&) const = default;
};

/// Text encoder backend. Implementations must be deterministic within a
/// process: the same text always yields the same vector. They report
/// transport or model failures by throwing grg::Error(adapter).
class Embedder {
 public:
  virtual ~Embedder() = default;
  virtual std::string name() const = 0;
  virtual std::size_t dim() const = 0;
  /// Unnormalized backend output of length dim().
  virtual std::vector<float> embed_raw(std::string_view text) = 0;
  /// True if embed_raw may be called from several threads at once.
  virtual bool concurrent_safe() const { return false; }
};

/// Deterministic vector returned for empty text (and for text the backend
/// maps to the zero vector): every component 1/sqrt(dim).
EmbeddingVector empty_text_sentinel(std::size_t dim);

/// Encodes `text` and L2-normalizes the result. Backend errors are rethrown
/// as retryable Error(adapter) carrying the backend diagnostic; a wrong
/// output length or non-finite value is also an adapter error.
EmbeddingVector embed_text(std::string_view text, Embedder& embedder);

/// Reference embedder: lowercase, split on non-alphanumerics, hash each
/// character trigram of each token (tokens shorter than three characters
/// hash whole) into [0, dim) with seeded FNV-1a, count. Pure and
/// platform-independent. Throws Error(contract) if dim < 16.
class HashedTrigramEmbedder final : public Embedder {
 public:
  explicit HashedTrigramEmbedder(std::size_t dim);

  std::string name() const override { return "hashed-trigram"; }
  std::size_t dim() const override { return dim_; }
  std::vector<float> embed_raw(std::string_view text) override;
  bool concurrent_safe() const override { return true; }

  static constexpr std::string_view kSeed = "grg-trigram-v1";

 private:
  std::size_t dim_;
};

std::unique_ptr<Embedder> test_embedder(std::size_t dim);

/// Cosine similarity clamped to [-1, 1]; 0 when either vector is zero.
/// Throws Error(contract) on a dimension mismatch.
double cosine(const EmbeddingVector& a, const EmbeddingVector& b);
double cosine(std::span<const float> a, std::span<const float> b);

/// Dot product accumulated in double.
double dot(std::span<const float> a, std::span<const float> b) noexcept;

void l2_normalize(std::vector<float>& values) noexcept;

}  // namespace grg::embed
