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

#include "grg/corpus/dedup.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "grg/common/error.hpp"
#include "grg/common/text.hpp"

namespace grg::corpus {

namespace {

class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

std::size_t intersection_size(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) noexcept {
  std::size_t i = 0, j = 0, n = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

// Prefix length for a Jaccard join at threshold t: any pair with J >= t
// shares at least one token within both prefixes under a common total order.
std::size_t prefix_length(std::size_t size, double t) {
  const auto required = static_cast<std::size_t>(std::ceil(t * static_cast<double>(size) - 1e-9));
  return size - std::min(size, required) + 1;
}

// Returns index pairs (i, j) into `sets` with jaccard >= t.
std::vector<std::pair<std::size_t, std::size_t>> similarity_join(const std::vector<std::vector<std::uint64_t>>& sets,
                                                                 double t) {
  std::unordered_map<std::uint64_t, std::size_t> freq;
  for (const auto& s : sets) {
    for (auto h : s) ++freq[h];
  }
  auto rarer = [&](std::uint64_t a, std::uint64_t b) {
    const auto fa = freq[a], fb = freq[b];
    return fa != fb ? fa < fb : a < b;
  };
  std::vector<std::vector<std::uint64_t>> ordered(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    ordered[i] = sets[i];
    std::sort(ordered[i].begin(), ordered[i].end(), rarer);
  }
  std::vector<std::size_t> by_size(sets.size());
  std::iota(by_size.begin(), by_size.end(), 0);
  std::stable_sort(by_size.begin(), by_size.end(),
                   [&](std::size_t a, std::size_t b) { return sets[a].size() < sets[b].size(); });

  std::unordered_map<std::uint64_t, std::vector<std::size_t>> index;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t id : by_size) {
    const auto& s = ordered[id];
    if (s.empty()) continue;
    const std::size_t prefix = std::min(prefix_length(s.size(), t), s.size());
    std::unordered_set<std::size_t> candidates;
    for (std::size_t p = 0; p < prefix; ++p) {
      if (auto it = index.find(s[p]); it != index.end()) candidates.insert(it->second.begin(), it->second.end());
    }
    std::vector<std::size_t> sorted_candidates(candidates.begin(), candidates.end());
    std::sort(sorted_candidates.begin(), sorted_candidates.end());
    for (std::size_t c : sorted_candidates) {
      if (static_cast<double>(sets[c].size()) < t * static_cast<double>(s.size()) - 1e-9) continue;
      if (jaccard(sets[id], sets[c]) >= t - 1e-12) pairs.emplace_back(std::min(id, c), std::max(id, c));
    }
    for (std::size_t p = 0; p < prefix; ++p) index[s[p]].push_back(id);
  }
  return pairs;
}

}  // namespace

std::vector<std::uint64_t> shingle_hashes(std::string_view body, std::size_t w) {
  const auto tokens = text::words(body);
  std::vector<std::uint64_t> out;
  if (tokens.empty() || w == 0) return out;
  const std::size_t width = std::min(w, tokens.size());
  for (std::size_t i = 0; i + width <= tokens.size(); ++i) {
    std::uint64_t h = text::kFnvOffset;
    for (std::size_t k = 0; k < width; ++k) {
      if (k) h = text::fnv1a64(" ", h);
      h = text::fnv1a64(tokens[i + k], h);
    }
    out.push_back(h);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double jaccard(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) noexcept {
  if (a.empty() && b.empty()) return 0.0;
  const std::size_t inter = intersection_size(a, b);
  return static_cast<double>(inter) / static_cast<double>(a.size() + b.size() - inter);
}

DedupResult dedup(std::vector<CleanDocument> docs, const DedupConfig& config) {
  {
    std::unordered_set<std::string_view> ids;
    for (const auto& d : docs) {
      if (!ids.insert(d.doc_id).second) throw Error(ErrorKind::contract, "duplicate doc_id '" + d.doc_id + "'");
    }
  }
  const std::size_t n = docs.size();
  DisjointSet groups(n);

  // Exact duplicates: identical non-empty bodies. Empty bodies belong to
  // attachment-only documents and are never considered equal.
  std::map<std::string_view, std::size_t> first_with_body;
  std::vector<std::size_t> distinct;
  for (std::size_t i = 0; i < n; ++i) {
    if (docs[i].body.empty()) continue;
    auto [it, inserted] = first_with_body.emplace(docs[i].body, i);
    if (inserted) {
      distinct.push_back(i);
    } else {
      groups.unite(it->second, i);
    }
  }

  std::vector<std::vector<std::uint64_t>> sets;
  sets.reserve(distinct.size());
  for (std::size_t i : distinct) sets.push_back(shingle_hashes(docs[i].body, config.shingle_words));
  for (auto [a, b] : similarity_join(sets, config.near_threshold)) groups.unite(distinct[a], distinct[b]);

  std::map<std::size_t, std::vector<std::size_t>> components;
  for (std::size_t i = 0; i < n; ++i) components[groups.find(i)].push_back(i);

  std::vector<bool> keep(n, true);
  std::vector<std::string> cluster_note(n);
  DedupResult result;
  for (const auto& [_, members] : components) {
    if (members.size() < 2) continue;
    std::vector<std::string> ids;
    for (std::size_t m : members) ids.push_back(docs[m].doc_id);
    std::sort(ids.begin(), ids.end());
    for (std::size_t m : members) {
      if (docs[m].doc_id != ids.front()) {
        keep[m] = false;
      } else {
        cluster_note[m] = "representative of {" + text::join(ids, ",") + "}";
      }
    }
    result.report.duplicate_clusters.push_back(std::move(ids));
  }
  std::sort(result.report.duplicate_clusters.begin(), result.report.duplicate_clusters.end());

  result.report.input_count = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (!keep[i]) continue;
    auto& doc = docs[i];
    std::erase_if(doc.filter_trace, [](const TraceEntry& t) { return t.stage == stage::dedup; });
    doc.record(stage::dedup, "keep", cluster_note[i]);
    result.kept.push_back(std::move(doc));
  }
  result.report.kept_count = result.kept.size();
  if (const std::size_t dropped = n - result.kept.size(); dropped > 0) {
    result.report.dropped_by_stage[std::string(stage::dedup)] = dropped;
  }
  return result;
}

}  // namespace grg::corpus
