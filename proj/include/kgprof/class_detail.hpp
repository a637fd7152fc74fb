// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kgprof/dataset_index.hpp"
#include "kgprof/hierarchy.hpp"
#include "kgprof/metrics.hpp"
#include "kgprof/partition.hpp"

namespace kgprof {

// Canonical class name -> graph label -> class IRIs of that graph. An empty
// IRI list means the class is absent from that graph.
struct ClassMapping {
  std::map<std::string, std::map<std::string, std::vector<std::string>>> entries;
};

struct ClassDetail {
  std::string canonicalName;
  bool absent = false;
  uint64_t instanceCount = 0;
  double avgDegree = 0.0;
  uint64_t medianIn = 0;
  uint64_t medianOut = 0;
};

// Union of the transitive member populations of the mapped classes.
// Unresolvable IRIs are collected, not fatal.
inline std::vector<TermId> class_members(const DatasetIndex& index, const ClassHierarchy& h,
                                         const std::vector<std::string>& classIris,
                                         std::vector<std::string>* unresolved = nullptr) {
  std::vector<TermId> members;
  for (const auto& iri : classIris) {
    auto id = index.dict().find_iri(iri);
    const auto node = id ? h.nodeOfClass.find(*id) : h.nodeOfClass.end();
    if (!id || node == h.nodeOfClass.end()) {
      if (unresolved) unresolved->push_back(iri);
      continue;
    }
    auto part = h.transitive_instances(node->second);
    std::vector<TermId> merged;
    merged.reserve(members.size() + part.size());
    std::set_union(members.begin(), members.end(), part.begin(), part.end(),
                   std::back_inserter(merged));
    members = std::move(merged);
  }
  return members;
}

// Degree statistics over one member set, same conventions as the profile:
// average over outgoing inter-instance edges, median-in over entity edges,
// median-out over all assertions.
inline ClassDetail class_stats(const DegreeVectors& degrees, const std::vector<TermId>& members,
                               std::string canonicalName) {
  ClassDetail detail;
  detail.canonicalName = std::move(canonicalName);
  if (members.empty()) {
    detail.absent = true;
    return detail;
  }
  uint64_t entity_out = 0;
  std::vector<uint32_t> in_entity, out_all;
  in_entity.reserve(members.size());
  out_all.reserve(members.size());
  for (TermId id : members) {
    entity_out += degrees.outEntity[id];
    in_entity.push_back(degrees.inEntity[id]);
    out_all.push_back(degrees.outAll[id]);
  }
  detail.instanceCount = members.size();
  detail.avgDegree = static_cast<double>(entity_out) / members.size();
  detail.medianIn = lower_median(std::move(in_entity));
  detail.medianOut = lower_median(std::move(out_all));
  return detail;
}

// All canonical classes of a mapping for one graph, in mapping order.
inline std::vector<ClassDetail> class_details_for_graph(
    const DatasetIndex& index, const TermPartition& p, const ClassHierarchy& h,
    const ClassMapping& mapping, const std::string& graphLabel,
    std::vector<std::string>* unresolved = nullptr) {
  const DegreeVectors degrees = compute_degrees(index, p);
  std::vector<ClassDetail> out;
  for (const auto& [name, perGraph] : mapping.entries) {
    auto it = perGraph.find(graphLabel);
    std::vector<TermId> members;
    if (it != perGraph.end()) {
      members = class_members(index, h, it->second, unresolved);
    }
    out.push_back(class_stats(degrees, members, name));
  }
  return out;
}

}  // namespace kgprof
