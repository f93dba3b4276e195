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
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "grg/embed/embedding.hpp"
#include "grg/vindex/small_world.hpp"

namespace grg::vindex {

enum class IndexMode { exact, approximate };

std::string_view to_string(IndexMode mode) noexcept;
IndexMode parse_index_mode(std::string_view name);

struct SearchHit {
  std::string chunk_id;
  double score = 0.0;
  std::size_t rank = 0;  // 1-based

  bool operator==(const SearchHit&) const = default;
};

/// Top-k cosine index over normalized chunk vectors.
///
/// Hits are ordered by (score desc, chunk_id asc) with dense 1-based ranks.
/// Exact mode scans every vector; approximate mode walks a small-world
/// graph and is only as good as its recall. The index is immutable once
/// built.
class VectorIndex {
 public:
  using Entry = std::pair<std::string, embed::EmbeddingVector>;

  /// Throws Error(contract) on an empty input, a duplicate id (named in the
  /// message), mismatched dimensions or vectors that are not unit length.
  static VectorIndex build(std::vector<Entry> entries, IndexMode mode, const SmallWorldParams& params = {});

  /// Throws Error(contract) if k == 0 or the query dimension differs.
  std::vector<SearchHit> search(const embed::EmbeddingVector& query, std::size_t k) const;

  std::size_t size() const noexcept { return ids_.size(); }
  std::size_t dim() const noexcept { return dim_; }
  IndexMode mode() const noexcept { return mode_; }
  const std::vector<std::string>& ids() const noexcept { return ids_; }
  std::span<const float> vector(std::size_t i) const { return std::span<const float>(data_).subspan(i * dim_, dim_); }
  bool contains(std::string_view id) const;
  const std::optional<SmallWorldGraph>& graph() const noexcept { return graph_; }

  /// Vector section ("GRGV") followed by the index section ("GRGI").
  void persist(const std::filesystem::path& path) const;
  /// Throws Error(format) on bad magic/version or a truncated file.
  static VectorIndex load(const std::filesystem::path& path);

 private:
  std::vector<SearchHit> rank(std::vector<std::pair<double, std::uint32_t>> scored, std::size_t k) const;

  std::size_t dim_ = 0;
  IndexMode mode_ = IndexMode::exact;
  std::vector<std::string> ids_;
  std::vector<float> data_;  // row-major, size() x dim_
  std::unordered_map<std::string, std::size_t> positions_;
  std::optional<SmallWorldGraph> graph_;
};

}  // namespace grg::vindex
