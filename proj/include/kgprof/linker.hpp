// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kgprof/labels.hpp"
#include "kgprof/parallel.hpp"
#include "kgprof/similarity.hpp"

namespace kgprof {

struct BlockingOptions {
  bool enabled = true;
  // A token block bigger than this on either side is deterministically
  // subsampled to the cap; stop-word-like tokens would otherwise go quadratic.
  size_t maxBlockSide = 4096;
  std::function<void(const std::string&)> warn;  // optional sink for warnings
};

// Candidate pairs are positions into the two label maps, sorted and unique.
using CandidatePairs = std::vector<std::pair<uint32_t, uint32_t>>;

namespace linker_detail {

inline std::unordered_map<std::string, std::vector<uint32_t>> token_index(const LabelMap& m) {
  std::unordered_map<std::string, std::vector<uint32_t>> idx;
  for (uint32_t pos = 0; pos < m.size(); ++pos) {
    for (const auto& label : m.labels[pos]) {
      for (const auto& tok : label.tokens) {
        auto& bucket = idx[tok];
        if (bucket.empty() || bucket.back() != pos) bucket.push_back(pos);
      }
    }
  }
  return idx;
}

inline std::unordered_map<std::string, std::vector<uint32_t>> exact_index(const LabelMap& m) {
  std::unordered_map<std::string, std::vector<uint32_t>> idx;
  for (uint32_t pos = 0; pos < m.size(); ++pos) {
    for (const auto& label : m.labels[pos]) {
      auto& bucket = idx[label.text];
      if (bucket.empty() || bucket.back() != pos) bucket.push_back(pos);
    }
  }
  return idx;
}

// Deterministic subsample: the RNG is seeded from the block key, so repeated
// runs pick the same positions.
inline std::vector<uint32_t> subsample(const std::vector<uint32_t>& v, size_t cap,
                                       const std::string& key) {
  if (v.size() <= cap) return v;
  std::vector<uint32_t> out = v;
  std::mt19937 rng(static_cast<uint32_t>(std::hash<std::string>{}(key)));
  std::shuffle(out.begin(), out.end(), rng);
  out.resize(cap);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace linker_detail

// Pairs sharing at least one normalized token, plus an exact-label hash join
// so equality matches are never missed. Without blocking: the full cross
// product.
inline CandidatePairs generate_candidates(const LabelMap& a, const LabelMap& b,
                                          const BlockingOptions& opts = {}) {
  CandidatePairs pairs;
  if (!opts.enabled) {
    pairs.reserve(a.size() * b.size());
    for (uint32_t i = 0; i < a.size(); ++i) {
      for (uint32_t j = 0; j < b.size(); ++j) pairs.emplace_back(i, j);
    }
    return pairs;
  }

  const auto tokens_a = linker_detail::token_index(a);
  const auto tokens_b = linker_detail::token_index(b);
  for (const auto& [tok, list_a] : tokens_a) {
    auto it = tokens_b.find(tok);
    if (it == tokens_b.end()) continue;
    const auto& list_b = it->second;
    if (list_a.size() > opts.maxBlockSide || list_b.size() > opts.maxBlockSide) {
      if (opts.warn) {
        opts.warn("token block '" + tok + "' capped at " + std::to_string(opts.maxBlockSide) +
                  " per side (" + std::to_string(list_a.size()) + "x" +
                  std::to_string(list_b.size()) + ")");
      }
      auto sa = linker_detail::subsample(list_a, opts.maxBlockSide, tok);
      auto sb = linker_detail::subsample(list_b, opts.maxBlockSide, tok);
      for (uint32_t i : sa)
        for (uint32_t j : sb) pairs.emplace_back(i, j);
      continue;
    }
    for (uint32_t i : list_a)
      for (uint32_t j : list_b) pairs.emplace_back(i, j);
  }

  // Exact-label join, never capped.
  const auto exact_a = linker_detail::exact_index(a);
  const auto exact_b = linker_detail::exact_index(b);
  for (const auto& [text, list_a] : exact_a) {
    auto it = exact_b.find(text);
    if (it == exact_b.end()) continue;
    for (uint32_t i : list_a)
      for (uint32_t j : it->second) pairs.emplace_back(i, j);
  }

  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

using MeasureMask = std::array<bool, kMeasureCount>;

inline MeasureMask measures_of(const std::vector<HeuristicConfig>& grid) {
  MeasureMask mask{};
  for (const auto& c : grid) mask[static_cast<size_t>(c.measure)] = true;
  return mask;
}

// Best similarity per candidate pair for the masked measures, computed once;
// thresholds are applied afterwards. Embarrassingly parallel over the
// candidate list.
inline std::vector<std::array<double, kMeasureCount>> score_candidates(
    const LabelMap& a, const LabelMap& b, const CandidatePairs& candidates,
    const MeasureMask& mask, unsigned jobs = 1) {
  std::vector<std::array<double, kMeasureCount>> scores(candidates.size());
  parallel_for(candidates.size(), jobs, [&](size_t k) {
    const auto& [i, j] = candidates[k];
    auto& best = scores[k];
    best.fill(0.0);
    for (const auto& la : a.labels[i]) {
      for (const auto& lb : b.labels[j]) {
        for (size_t m = 0; m < kMeasureCount; ++m) {
          if (!mask[m]) continue;
          best[m] = std::max(best[m], similarity(static_cast<Measure>(m), la, lb));
        }
      }
    }
  });
  return scores;
}

struct ScoredPair {
  TermId entityA;
  TermId entityB;
  double score;
};

// Links one heuristic accepts: candidates whose best label-pair similarity
// reaches the threshold. No 1:1 constraint; an entity may appear repeatedly.
struct CandidateLinkSet {
  HeuristicConfig heuristic;
  std::vector<ScoredPair> pairs;  // ordered by (entityA, entityB)

  uint64_t size_f() const { return pairs.size(); }
};

inline CandidateLinkSet select_links(
    const HeuristicConfig& config, const LabelMap& a, const LabelMap& b,
    const CandidatePairs& candidates,
    const std::vector<std::array<double, kMeasureCount>>& scores) {
  CandidateLinkSet out{config, {}};
  const size_t m = static_cast<size_t>(config.measure);
  for (size_t k = 0; k < candidates.size(); ++k) {
    if (scores[k][m] >= config.threshold) {
      out.pairs.push_back(
          {a.instances[candidates[k].first], b.instances[candidates[k].second], scores[k][m]});
    }
  }
  return out;
}

// One-shot convenience for a single heuristic.
inline CandidateLinkSet match(const HeuristicConfig& config, const LabelMap& a, const LabelMap& b,
                              const BlockingOptions& opts = {}, unsigned jobs = 1) {
  const CandidatePairs candidates = generate_candidates(a, b, opts);
  const auto scores = score_candidates(a, b, candidates, measures_of({config}), jobs);
  return select_links(config, a, b, candidates, scores);
}

// Evaluates a whole grid over one shared candidate scoring pass.
inline std::vector<CandidateLinkSet> match_grid(const std::vector<HeuristicConfig>& grid,
                                                const LabelMap& a, const LabelMap& b,
                                                const BlockingOptions& opts = {},
                                                unsigned jobs = 1) {
  const CandidatePairs candidates = generate_candidates(a, b, opts);
  const auto scores = score_candidates(a, b, candidates, measures_of(grid), jobs);
  std::vector<CandidateLinkSet> out;
  out.reserve(grid.size());
  for (const auto& config : grid) out.push_back(select_links(config, a, b, candidates, scores));
  return out;
}

}  // namespace kgprof
