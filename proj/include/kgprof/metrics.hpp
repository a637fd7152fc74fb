// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "kgprof/dataset_index.hpp"
#include "kgprof/expressivity.hpp"
#include "kgprof/hierarchy.hpp"
#include "kgprof/partition.hpp"

namespace kgprof {

struct ProfileReport {
  uint64_t instanceCount = 0;
  uint64_t assertionCount = 0;
  double avgLinkingDegree = 0.0;
  uint64_t medianInDegree = 0;
  uint64_t medianOutDegree = 0;
  uint64_t classCount = 0;
  uint64_t relationCount = 0;
  double avgDepth = 0.0;
  double avgBranching = 0.0;
  std::string expressivity;
  uint64_t dualTypedCount = 0;
};

// Lower median: element at 1-based position ceil(n/2) of the sorted sequence,
// so medians of integer degree sequences stay integers. Empty -> 0.
inline uint64_t lower_median(std::vector<uint32_t> values) {
  if (values.empty()) return 0;
  const size_t rank = (values.size() + 1) / 2 - 1;  // 0-based
  std::nth_element(values.begin(), values.begin() + rank, values.end());
  return values[rank];
}

// Instance and assertion statistics. Medians run over all instances,
// zeros included: ingoing in entity-edge mode, outgoing over all assertions.
inline void general_metrics(const DatasetIndex& index, const TermPartition& p,
                            ProfileReport& report) {
  const DegreeVectors d = compute_degrees(index, p);
  report.instanceCount = p.instances.size();
  report.dualTypedCount = p.dualTyped.size();

  uint64_t assertions = 0, entity_edges = 0;
  std::vector<uint32_t> in_entity, out_all;
  in_entity.reserve(p.instances.size());
  out_all.reserve(p.instances.size());
  for (TermId id : p.instances) {
    assertions += d.outAll[id];
    entity_edges += d.outEntity[id];
    in_entity.push_back(d.inEntity[id]);
    out_all.push_back(d.outAll[id]);
  }
  report.assertionCount = assertions;
  report.avgLinkingDegree =
      p.instances.empty() ? 0.0 : static_cast<double>(entity_edges) / p.instances.size();
  report.medianInDegree = lower_median(std::move(in_entity));
  report.medianOutDegree = lower_median(std::move(out_all));
}

// Schema statistics. Depth is the shortest-path distance from the nearest
// root, averaged over all condensed nodes; branching averages direct-child
// counts over nodes that have children.
inline void schema_metrics(const ClassHierarchy& h, const TermPartition& p,
                           ProfileReport& report) {
  report.classCount = p.classes.size();

  std::vector<TermId> rels;
  rels.reserve(p.objectRelations.size() + p.dataRelations.size());
  std::set_union(p.objectRelations.begin(), p.objectRelations.end(), p.dataRelations.begin(),
                 p.dataRelations.end(), std::back_inserter(rels));
  report.relationCount = rels.size();

  const size_t n = h.node_count();
  if (n == 0) {
    report.avgDepth = 0.0;
    report.avgBranching = 0.0;
    return;
  }
  const std::vector<uint32_t> depth = node_depths(h);
  uint64_t depth_sum = 0;
  for (uint32_t d : depth) depth_sum += d;
  report.avgDepth = static_cast<double>(depth_sum) / n;

  uint64_t child_sum = 0, with_children = 0;
  for (const auto& c : h.children) {
    if (!c.empty()) {
      child_sum += c.size();
      ++with_children;
    }
  }
  report.avgBranching =
      with_children == 0 ? 0.0 : static_cast<double>(child_sum) / with_children;
}

// Full Table-style profile of one graph.
inline ProfileReport profile_graph(const DatasetIndex& index) {
  const TermPartition p = partition_terms(index);
  const ClassHierarchy h = build_hierarchy(index, p);
  ProfileReport report;
  general_metrics(index, p, report);
  schema_metrics(h, p, report);
  report.expressivity = detect_expressivity(index);
  return report;
}

}  // namespace kgprof
