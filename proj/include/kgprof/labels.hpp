// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "kgprof/dataset_index.hpp"
#include "kgprof/normalize.hpp"
#include "kgprof/partition.hpp"
#include "kgprof/similarity.hpp"

namespace kgprof {

// Normalized labels of every labeled instance of one graph. Instances whose
// label predicates yield nothing usable are excluded from matching and only
// counted.
struct LabelMap {
  std::vector<TermId> instances;                    // labeled instances, sorted
  std::vector<std::vector<PreparedLabel>> labels;   // parallel to instances
  uint64_t unlabeledInstanceCount = 0;

  size_t size() const { return instances.size(); }
};

inline LabelMap extract_labels(const DatasetIndex& index, const TermPartition& p) {
  LabelMap map;
  const auto& preds = index.label_predicate_ids();
  std::vector<std::vector<std::string>> raw(index.term_count());
  for (const auto& t : index.triples()) {
    if (!std::binary_search(preds.begin(), preds.end(), t.p)) continue;
    if (!p.instance(t.s) || !index.dict().term(t.o).is_literal()) continue;
    std::string norm = normalize_label(index.dict().term(t.o).lexical);
    if (!norm.empty()) raw[t.s].push_back(std::move(norm));
  }
  for (TermId id : p.instances) {
    auto& labels = raw[id];
    if (labels.empty()) {
      ++map.unlabeledInstanceCount;
      continue;
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    std::vector<PreparedLabel> prepared;
    prepared.reserve(labels.size());
    for (auto& l : labels) prepared.push_back(PreparedLabel::from_normalized(std::move(l)));
    map.instances.push_back(id);
    map.labels.push_back(std::move(prepared));
  }
  return map;
}

}  // namespace kgprof
