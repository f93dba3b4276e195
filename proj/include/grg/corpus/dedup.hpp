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
#include <string_view>
#include <utility>
#include <vector>

#include "grg/corpus/types.hpp"

namespace grg::corpus {

struct DedupConfig {
  std::size_t shingle_words = 8;
  double near_threshold = 0.9;
};

/// Sorted, unique hashes of the w-word shingles of `body` (lowercased word
/// tokens). Bodies shorter than w words yield one shingle of all words.
std::vector<std::uint64_t> shingle_hashes(std::string_view body, std::size_t w);

/// Jaccard similarity of two sorted unique sets; 0 when both are empty.
double jaccard(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) noexcept;

struct DedupResult {
  std::vector<CleanDocument> kept;
  FilterReport report;
};

/// Collapses exact duplicates (identical non-empty body) and near duplicates
/// (shingle Jaccard >= threshold). Clusters are the connected components of
/// the duplicate relation; each keeps only its lexicographically smallest
/// doc_id. Kept documents retain input order. Candidate pairs come from an
/// exact prefix-filtered similarity join, so no qualifying pair is missed.
///
/// Throws Error(contract) on repeated doc_ids.
DedupResult dedup(std::vector<CleanDocument> docs, const DedupConfig& config = {});

}  // namespace grg::corpus
