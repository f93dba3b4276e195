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

#include "grg/vindex/index.hpp"

#include <algorithm>
#include <cmath>

#include "grg/common/error.hpp"

namespace grg::vindex {

namespace {

constexpr double kUnitTolerance = 1e-4;  // float32 normalization slack

}  // namespace

std::string_view to_string(IndexMode mode) noexcept {
  return mode == IndexMode::exact ? "exact" : "approximate";
}

IndexMode parse_index_mode(std::string_view name) {
  if (name == "exact") return IndexMode::exact;
  if (name == "approximate") return IndexMode::approximate;
  throw Error(ErrorKind::config, "unknown index mode '" + std::string(name) + "'");
}

VectorIndex VectorIndex::build(std::vector<Entry> entries, IndexMode mode, const SmallWorldParams& params) {
  if (entries.empty()) throw Error(ErrorKind::contract, "cannot build an index from zero vectors");
  VectorIndex index;
  index.mode_ = mode;
  index.dim_ = entries.front().second.dim();
  if (index.dim_ == 0) throw Error(ErrorKind::contract, "vectors must have a positive dimension");
  index.ids_.reserve(entries.size());
  index.data_.reserve(entries.size() * index.dim_);
  for (auto& [id, vec] : entries) {
    if (vec.dim() != index.dim_) {
      throw Error(ErrorKind::contract, "vector '" + id + "' has dim " + std::to_string(vec.dim()) + ", expected " +
                                           std::to_string(index.dim_));
    }
    const double norm = std::sqrt(embed::dot(vec.values, vec.values));
    if (std::abs(norm - 1.0) > kUnitTolerance) {
      throw Error(ErrorKind::contract, "vector '" + id + "' is not unit length (norm " + std::to_string(norm) + ")");
    }
    if (!index.positions_.emplace(id, index.ids_.size()).second) {
      throw Error(ErrorKind::contract, "duplicate chunk_id '" + id + "'");
    }
    index.ids_.push_back(std::move(id));
    index.data_.insert(index.data_.end(), vec.values.begin(), vec.values.end());
  }
  if (mode == IndexMode::approximate) index.graph_ = SmallWorldGraph::build(index.data_, index.dim_, params);
  return index;
}

bool VectorIndex::contains(std::string_view id) const {
  return positions_.find(std::string(id)) != positions_.end();
}

std::vector<SearchHit> VectorIndex::rank(std::vector<std::pair<double, std::uint32_t>> scored, std::size_t k) const {
  for (auto& s : scored) s.first = std::clamp(s.first, -1.0, 1.0);
  auto order = [this](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : ids_[a.second] < ids_[b.second];
  };
  k = std::min(k, scored.size());
  std::partial_sort(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(k), scored.end(), order);
  std::vector<SearchHit> hits;
  hits.reserve(k);
  for (std::size_t i = 0; i < k; ++i) hits.push_back({ids_[scored[i].second], scored[i].first, i + 1});
  return hits;
}

std::vector<SearchHit> VectorIndex::search(const embed::EmbeddingVector& query, std::size_t k) const {
  if (k == 0) throw Error(ErrorKind::contract, "search needs k >= 1");
  if (query.dim() != dim_) {
    throw Error(ErrorKind::contract, "query has dim " + std::to_string(query.dim()) + ", index has " +
                                         std::to_string(dim_));
  }
  std::vector<float> q = query.values;
  if (!query.normalized) embed::l2_normalize(q);

  std::vector<std::pair<double, std::uint32_t>> scored;
  if (mode_ == IndexMode::exact) {
    scored.reserve(size());
    for (std::uint32_t i = 0; i < size(); ++i) scored.emplace_back(embed::dot(q, vector(i)), i);
  } else {
    // Over-fetch so float-equal scores at the cut can be re-ordered by id.
    scored = graph_->search(data_, dim_, q, std::min(size(), k + 8));
  }
  return rank(std::move(scored), k);
}

}  // namespace grg::vindex
