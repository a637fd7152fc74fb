// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "kgprof/gold_links.hpp"
#include "kgprof/linker.hpp"

namespace kgprof {

// Precision and recall of one heuristic against the (incomplete) gold links.
// The gold set misses true links, so precision is measured only on the
// gold-covered sub-universe: pairs whose A-side entity has at least one gold
// link. Scoring the rest as wrong would bias P downward.
struct HeuristicEvaluation {
  HeuristicConfig heuristic;
  uint64_t sizeF = 0;
  std::optional<double> precision;  // |F_eval ∩ G| / |F_eval|
  std::optional<double> recall;     // |F ∩ G| / |G|
  std::optional<double> estimate;   // |F| * P / R
  std::string exclusionReason;      // empty when included

  bool excluded() const { return !exclusionReason.empty(); }
};

struct PairStatistics {
  std::optional<double> gainFraction;          // smaller graph's entities absent from the larger
  std::optional<double> estimateToLargerRatio; // estimate over the larger graph's size
  std::optional<double> linkageCompleteness;   // |G| / estimate, capped at 1
  bool gainClamped = false;                    // estimate exceeded the smaller graph
};

struct OverlapEstimate {
  std::vector<HeuristicEvaluation> perHeuristic;
  std::optional<double> aggregate;  // mean estimate over non-excluded heuristics
  uint64_t goldSize = 0;
  uint64_t sizeA = 0;  // instance counts
  uint64_t sizeB = 0;
  PairStatistics stats;
};

inline HeuristicEvaluation evaluate_heuristic(const CandidateLinkSet& links,
                                              const GoldLinkSet& gold) {
  HeuristicEvaluation ev;
  ev.heuristic = links.heuristic;
  ev.sizeF = links.size_f();

  std::unordered_set<TermId> gold_covered_a;
  for (const auto& [a, b] : gold.pairs) gold_covered_a.insert(a);

  uint64_t f_eval = 0, f_plus = 0;
  for (const auto& pr : links.pairs) {
    if (!gold_covered_a.count(pr.entityA)) continue;
    ++f_eval;
    if (gold.contains({pr.entityA, pr.entityB})) ++f_plus;
  }
  if (f_eval > 0) ev.precision = static_cast<double>(f_plus) / static_cast<double>(f_eval);
  if (gold.size() > 0) ev.recall = static_cast<double>(f_plus) / static_cast<double>(gold.size());

  if (!ev.precision) ev.exclusionReason = "no links on gold-covered entities";
  else if (!ev.recall) ev.exclusionReason = "empty gold set";
  else if (*ev.recall == 0.0) ev.exclusionReason = "zero recall";
  else ev.estimate = static_cast<double>(ev.sizeF) * *ev.precision / *ev.recall;
  return ev;
}

inline PairStatistics pair_statistics(std::optional<double> estimate, uint64_t sizeA,
                                      uint64_t sizeB, uint64_t goldSize) {
  PairStatistics st;
  if (!estimate || sizeA == 0 || sizeB == 0) return st;
  const double smaller = static_cast<double>(std::min(sizeA, sizeB));
  const double larger = static_cast<double>(std::max(sizeA, sizeB));
  const double overshoot = *estimate - smaller;
  st.gainClamped = overshoot > 0;
  st.gainFraction = std::max(0.0, smaller - *estimate) / smaller;
  st.estimateToLargerRatio = *estimate / larger;
  if (*estimate > 0) {
    st.linkageCompleteness = std::min(1.0, static_cast<double>(goldSize) / *estimate);
  }
  return st;
}

// Full grid evaluation for one graph pair: per-heuristic P/R/estimate, the
// arithmetic-mean aggregate over non-excluded heuristics, and the derived
// pairwise statistics.
inline OverlapEstimate estimate_overlap(const std::vector<CandidateLinkSet>& grid_links,
                                        const GoldLinkSet& gold, uint64_t sizeA, uint64_t sizeB) {
  OverlapEstimate est;
  est.goldSize = gold.size();
  est.sizeA = sizeA;
  est.sizeB = sizeB;

  double sum = 0.0;
  uint64_t included = 0;
  for (const auto& links : grid_links) {
    HeuristicEvaluation ev = evaluate_heuristic(links, gold);
    if (ev.estimate) {
      sum += *ev.estimate;
      ++included;
    }
    est.perHeuristic.push_back(std::move(ev));
  }
  if (included > 0) est.aggregate = sum / static_cast<double>(included);
  est.stats = pair_statistics(est.aggregate, sizeA, sizeB, est.goldSize);
  return est;
}

}  // namespace kgprof
