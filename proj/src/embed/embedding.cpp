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

#include "grg/embed/embedding.hpp"

#include <algorithm>
#include <cmath>

#include "grg/common/error.hpp"
#include "grg/common/text.hpp"

namespace grg::embed {

double dot(std::span<const float> a, std::span<const float> b) noexcept {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<double>(a[i]) * static_cast<double>(b[i]);
  return s;
}

void l2_normalize(std::vector<float>& values) noexcept {
  const double norm = std::sqrt(dot(values, values));
  if (norm == 0.0) return;
  for (float& v : values) v = static_cast<float>(static_cast<double>(v) / norm);
}

EmbeddingVector empty_text_sentinel(std::size_t dim) {
  EmbeddingVector v;
  v.values.assign(dim, static_cast<float>(1.0 / std::sqrt(static_cast<double>(dim))));
  v.normalized = true;
  return v;
}

EmbeddingVector embed_text(std::string_view text, Embedder& embedder) {
  const std::size_t dim = embedder.dim();
  if (text.empty()) return empty_text_sentinel(dim);
  EmbeddingVector v;
  try {
    v.values = embedder.embed_raw(text);
  } catch (const Error& e) {
    throw Error(ErrorKind::adapter, "embedder '" + embedder.name() + "' failed: " + e.what(), true);
  } catch (const std::exception& e) {
    throw Error(ErrorKind::adapter, "embedder '" + embedder.name() + "' failed: " + e.what(), true);
  }
  if (v.values.size() != dim) {
    throw Error(ErrorKind::adapter, "embedder '" + embedder.name() + "' returned " + std::to_string(v.values.size()) +
                                        " values, expected " + std::to_string(dim));
  }
  if (!std::all_of(v.values.begin(), v.values.end(), [](float x) { return std::isfinite(x); })) {
    throw Error(ErrorKind::adapter, "embedder '" + embedder.name() + "' returned a non-finite value");
  }
  if (std::all_of(v.values.begin(), v.values.end(), [](float x) { return x == 0.0f; })) {
    return empty_text_sentinel(dim);
  }
  l2_normalize(v.values);
  v.normalized = true;
  return v;
}

HashedTrigramEmbedder::HashedTrigramEmbedder(std::size_t dim) : dim_(dim) {
  if (dim < 16) throw Error(ErrorKind::contract, "test embedder needs dim >= 16");
}

std::vector<float> HashedTrigramEmbedder::embed_raw(std::string_view input) {
  static constexpr std::uint64_t basis = text::fnv1a64(kSeed);
  std::vector<float> counts(dim_, 0.0f);
  auto add = [&](std::string_view gram) { counts[text::fnv1a64(gram, basis) % dim_] += 1.0f; };
  for (const auto& token : text::words(input)) {
    if (token.size() < 3) {
      add(token);
      continue;
    }
    for (std::size_t i = 0; i + 3 <= token.size(); ++i) add(std::string_view(token).substr(i, 3));
  }
  return counts;
}

std::unique_ptr<Embedder> test_embedder(std::size_t dim) {
  return std::make_unique<HashedTrigramEmbedder>(dim);
}

double cosine(std::span<const float> a, std::span<const float> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::contract,
                "cosine of vectors with dims " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
  }
  const double na = dot(a, a);
  const double nb = dot(b, b);
  if (na == 0.0 || nb == 0.0) return 0.0;
  return std::clamp(dot(a, b) / (std::sqrt(na) * std::sqrt(nb)), -1.0, 1.0);
}

double cosine(const EmbeddingVector& a, const EmbeddingVector& b) {
  return cosine(std::span<const float>(a.values), std::span<const float>(b.values));
}

}  // namespace grg::embed
