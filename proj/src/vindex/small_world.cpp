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

#include "grg/vindex/small_world.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <random>

#include "grg/common/error.hpp"
#include "grg/embed/embedding.hpp"

namespace grg::vindex {

namespace {

constexpr std::uint32_t kMaxLayer = 16;

std::span<const float> row(std::span<const float> data, std::size_t dim, std::uint32_t i) {
  return data.subspan(static_cast<std::size_t>(i) * dim, dim);
}

bool better(const std::pair<double, std::uint32_t>& a, const std::pair<double, std::uint32_t>& b) {
  return a.first != b.first ? a.first > b.first : a.second < b.second;
}

}  // namespace

std::vector<SmallWorldGraph::Scored> SmallWorldGraph::search_layer(std::span<const float> data, std::size_t dim,
                                                                   std::span<const float> query,
                                                                   const std::vector<Scored>& entry, std::size_t ef,
                                                                   std::size_t layer) const {
  std::vector<char> visited(links_.size(), 0);
  // Best candidate on top.
  std::priority_queue<Scored> frontier;
  // Worst kept result on top.
  std::priority_queue<Scored, std::vector<Scored>, std::greater<>> kept;
  for (const auto& e : entry) {
    if (visited[e.second]) continue;
    visited[e.second] = 1;
    frontier.push(e);
    kept.push(e);
    if (kept.size() > ef) kept.pop();
  }
  while (!frontier.empty()) {
    const Scored current = frontier.top();
    if (kept.size() >= ef && current.first < kept.top().first) break;
    frontier.pop();
    for (std::uint32_t nb : links_[current.second][layer]) {
      if (visited[nb]) continue;
      visited[nb] = 1;
      const double s = embed::dot(query, row(data, dim, nb));
      if (kept.size() < ef || s > kept.top().first) {
        frontier.emplace(s, nb);
        kept.emplace(s, nb);
        if (kept.size() > ef) kept.pop();
      }
    }
  }
  std::vector<Scored> out;
  out.reserve(kept.size());
  while (!kept.empty()) {
    out.push_back(kept.top());
    kept.pop();
  }
  std::sort(out.begin(), out.end(), better);
  return out;
}

// Diversity heuristic: keep a candidate only if it is closer to the base
// node than to every neighbor already kept, then top up with the pruned
// candidates in score order.
std::vector<std::uint32_t> SmallWorldGraph::select_neighbors(std::span<const float> data, std::size_t dim,
                                                             std::vector<Scored> candidates,
                                                             std::size_t limit) const {
  std::sort(candidates.begin(), candidates.end(), better);
  std::vector<std::uint32_t> chosen;
  std::vector<std::uint32_t> pruned;
  for (const auto& [score, id] : candidates) {
    if (chosen.size() >= limit) break;
    bool diverse = true;
    for (std::uint32_t r : chosen) {
      if (embed::dot(row(data, dim, id), row(data, dim, r)) > score) {
        diverse = false;
        break;
      }
    }
    (diverse ? chosen : pruned).push_back(id);
  }
  for (std::uint32_t p : pruned) {
    if (chosen.size() >= limit) break;
    chosen.push_back(p);
  }
  return chosen;
}

SmallWorldGraph SmallWorldGraph::build(std::span<const float> data, std::size_t dim, const SmallWorldParams& params) {
  if (params.m < 2 || params.ef_construction == 0 || params.ef_search == 0) {
    throw Error(ErrorKind::config, "small-world params need m >= 2 and positive beam widths");
  }
  SmallWorldGraph g;
  g.params_ = params;
  const std::size_t n = dim == 0 ? 0 : data.size() / dim;
  g.links_.resize(n);
  if (n == 0) return g;

  // Layer draws use raw 64-bit output so builds match across standard
  // library implementations.
  std::mt19937_64 rng(params.seed);
  const double level_scale = 1.0 / std::log(static_cast<double>(params.m));
  const std::size_t upper_limit = params.m;
  const std::size_t base_limit = 2 * static_cast<std::size_t>(params.m);

  for (std::uint32_t q = 0; q < n; ++q) {
    const double u = (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
    const auto level = std::min<std::uint32_t>(kMaxLayer, static_cast<std::uint32_t>(-std::log(u) * level_scale));
    g.links_[q].resize(level + 1);
    if (q == 0) {
      g.entry_ = 0;
      g.top_layer_ = level;
      continue;
    }
    const auto query = row(data, dim, q);
    std::vector<Scored> entry{{embed::dot(query, row(data, dim, g.entry_)), g.entry_}};
    for (std::uint32_t layer = g.top_layer_; layer > level; --layer) {
      entry = g.search_layer(data, dim, query, entry, 1, layer);
    }
    for (int layer = static_cast<int>(std::min(level, g.top_layer_)); layer >= 0; --layer) {
      const auto found = g.search_layer(data, dim, query, entry, params.ef_construction, layer);
      const std::size_t limit = layer == 0 ? base_limit : upper_limit;
      auto neighbors = g.select_neighbors(data, dim, found, params.m);
      g.links_[q][layer] = neighbors;
      for (std::uint32_t e : neighbors) {
        auto& back = g.links_[e][layer];
        back.push_back(q);
        if (back.size() > limit) {
          std::vector<Scored> scored;
          scored.reserve(back.size());
          const auto base = row(data, dim, e);
          for (std::uint32_t x : back) scored.emplace_back(embed::dot(base, row(data, dim, x)), x);
          back = g.select_neighbors(data, dim, std::move(scored), limit);
        }
      }
      entry = found;
    }
    if (level > g.top_layer_) {
      g.top_layer_ = level;
      g.entry_ = q;
    }
  }
  return g;
}

std::vector<std::pair<double, std::uint32_t>> SmallWorldGraph::search(std::span<const float> data, std::size_t dim,
                                                                      std::span<const float> query,
                                                                      std::size_t k) const {
  if (links_.empty() || k == 0) return {};
  std::vector<Scored> entry{{embed::dot(query, row(data, dim, entry_)), entry_}};
  for (std::uint32_t layer = top_layer_; layer > 0; --layer) entry = search_layer(data, dim, query, entry, 1, layer);
  auto found = search_layer(data, dim, query, entry, std::max<std::size_t>(params_.ef_search, k), 0);
  if (found.size() > k) found.resize(k);
  return found;
}

void SmallWorldGraph::encode(binary::Writer& out) const {
  out.le(params_.m);
  out.le(params_.ef_construction);
  out.le(params_.ef_search);
  out.le(params_.seed);
  out.le(entry_);
  out.le(top_layer_);
  for (const auto& layers : links_) {
    out.le(static_cast<std::uint32_t>(layers.size()));
    for (const auto& nbs : layers) {
      out.le(static_cast<std::uint32_t>(nbs.size()));
      for (std::uint32_t nb : nbs) out.le(nb);
    }
  }
}

SmallWorldGraph SmallWorldGraph::decode(binary::Reader& in, std::size_t node_count) {
  SmallWorldGraph g;
  g.params_.m = in.le<std::uint32_t>();
  g.params_.ef_construction = in.le<std::uint32_t>();
  g.params_.ef_search = in.le<std::uint32_t>();
  g.params_.seed = in.le<std::uint64_t>();
  g.entry_ = in.le<std::uint32_t>();
  g.top_layer_ = in.le<std::uint32_t>();
  if (node_count > 0 && g.entry_ >= node_count) throw Error(ErrorKind::format, "graph entry point out of range");
  if (g.top_layer_ > kMaxLayer) throw Error(ErrorKind::format, "graph layer count out of range");
  g.links_.resize(node_count);
  for (auto& layers : g.links_) {
    const auto layer_count = in.le<std::uint32_t>();
    if (layer_count == 0 || layer_count > kMaxLayer + 1) throw Error(ErrorKind::format, "bad node layer count");
    layers.resize(layer_count);
    for (auto& nbs : layers) {
      const auto count = in.le<std::uint32_t>();
      if (count > node_count) throw Error(ErrorKind::format, "bad neighbor count");
      nbs.resize(count);
      for (auto& nb : nbs) {
        nb = in.le<std::uint32_t>();
        if (nb >= node_count) throw Error(ErrorKind::format, "neighbor id out of range");
      }
    }
  }
  if (node_count > 0 && g.links_[g.entry_].size() != g.top_layer_ + 1) {
    throw Error(ErrorKind::format, "graph entry point does not reach the top layer");
  }
  return g;
}

}  // namespace grg::vindex
