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

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "grg/common/binary.hpp"

namespace grg::vindex {

struct SmallWorldParams {
  std::uint32_t m = 16;                 // links per node on upper layers; layer 0 keeps 2*m
  std::uint32_t ef_construction = 128;  // beam width while inserting
  std::uint32_t ef_search = 64;         // beam width while querying
  std::uint64_t seed = 0x5eed'5eedULL;  // layer assignment

  bool operator==(const SmallWorldParams&) const = default;
};

/// Hierarchical navigable small-world graph over row-major, L2-normalized
/// vectors. Similarity is the dot product. The graph stores node indices
/// only; the caller owns the vector data and passes it to every query.
///
/// Building is deterministic for a given insertion order and seed, and the
/// graph is immutable afterwards, so concurrent searches are safe.
class SmallWorldGraph {
 public:
  SmallWorldGraph() = default;

  static SmallWorldGraph build(std::span<const float> data, std::size_t dim, const SmallWorldParams& params);

  /// Up to `k` (similarity, node) pairs, best first. Ties in similarity are
  /// left in node order; callers apply their own tie-break.
  std::vector<std::pair<double, std::uint32_t>> search(std::span<const float> data, std::size_t dim,
                                                       std::span<const float> query, std::size_t k) const;

  const SmallWorldParams& params() const noexcept { return params_; }
  std::size_t size() const noexcept { return links_.size(); }
  /// links()[node][layer] -> neighbor nodes
  const std::vector<std::vector<std::vector<std::uint32_t>>>& links() const noexcept { return links_; }

  void encode(binary::Writer& out) const;
  /// Validates neighbor ids against `node_count`.
  static SmallWorldGraph decode(binary::Reader& in, std::size_t node_count);

  bool operator==(const SmallWorldGraph&) const = default;

 private:
  using Scored = std::pair<double, std::uint32_t>;

  std::vector<Scored> search_layer(std::span<const float> data, std::size_t dim, std::span<const float> query,
                                   const std::vector<Scored>& entry, std::size_t ef, std::size_t layer) const;
  std::vector<std::uint32_t> select_neighbors(std::span<const float> data, std::size_t dim,
                                              std::vector<Scored> candidates, std::size_t limit) const;

  SmallWorldParams params_;
  std::vector<std::vector<std::vector<std::uint32_t>>> links_;
  std::uint32_t entry_ = 0;
  std::uint32_t top_layer_ = 0;
};

}  // namespace grg::vindex
