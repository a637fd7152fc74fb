// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "kgprof/dataset_index.hpp"
#include "kgprof/hierarchy.hpp"
#include "kgprof/partition.hpp"

namespace kgprof {

// Hierarchical class-size data, most abstract class at the root, children
// ordered by descending transitive instance count. `classIri` is empty for
// the synthetic root and for "other" filler nodes.
struct SunburstNode {
  std::string classIri;
  std::string label;
  uint64_t count = 0;
  // Children counts can overlap via multi-typed instances; when their sum
  // exceeds this node's count, the node is flagged and "other" clamps to 0.
  bool childOverlap = false;
  std::vector<SunburstNode> children;
};

namespace sunburst_detail {

inline std::string local_name(const std::string& iri) {
  const size_t hash = iri.rfind('#');
  if (hash != std::string::npos && hash + 1 < iri.size()) return iri.substr(hash + 1);
  const size_t slash = iri.rfind('/');
  if (slash != std::string::npos && slash + 1 < iri.size()) return iri.substr(slash + 1);
  return iri;
}

inline std::string node_label(const DatasetIndex& index, const ClassHierarchy& h, uint32_t node) {
  // Smallest label literal over the node's classes keeps the choice stable.
  std::string best;
  for (TermId cls : h.nodeClasses[node]) {
    for (const auto& t : index.by_subject(cls)) {
      if (!std::binary_search(index.label_predicate_ids().begin(),
                              index.label_predicate_ids().end(), t.p))
        continue;
      const Term& o = index.dict().term(t.o);
      if (!o.is_literal() || o.lexical.empty()) continue;
      if (best.empty() || o.lexical < best) best = o.lexical;
    }
  }
  if (!best.empty()) return best;
  return local_name(index.dict().term(h.nodeClasses[node].front()).lexical);
}

inline SunburstNode build_node(const DatasetIndex& index, const ClassHierarchy& h, uint32_t node,
                               size_t depth, size_t maxDepth, size_t topK);

// Nodes made up purely of rdf/rdfs/owl vocabulary (metaclasses like
// owl:Class) are schema plumbing, not content; they stay out of the chart.
inline bool builtin_only(const DatasetIndex& index, const ClassHierarchy& h, uint32_t node) {
  for (TermId cls : h.nodeClasses[node]) {
    const Term& t = index.dict().term(cls);
    if (!t.is_iri() || !vocab::is_builtin_namespace(t.lexical)) return false;
  }
  return true;
}

inline void attach_children(const DatasetIndex& index, const ClassHierarchy& h,
                            const std::vector<uint32_t>& childNodes, SunburstNode& parent,
                            size_t depth, size_t maxDepth, size_t topK) {
  if (depth >= maxDepth || childNodes.empty()) return;
  std::vector<uint32_t> order;
  order.reserve(childNodes.size());
  for (uint32_t c : childNodes) {
    if (!builtin_only(index, h, c)) order.push_back(c);
  }
  if (order.empty()) return;
  std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
    if (h.transitiveCount[a] != h.transitiveCount[b]) {
      return h.transitiveCount[a] > h.transitiveCount[b];
    }
    return index.dict().term(h.nodeClasses[a].front()).lexical <
           index.dict().term(h.nodeClasses[b].front()).lexical;
  });
  if (order.size() > topK) order.resize(topK);

  uint64_t child_sum = 0;
  for (uint32_t c : order) {
    parent.children.push_back(build_node(index, h, c, depth + 1, maxDepth, topK));
    child_sum += h.transitiveCount[c];
  }
  if (child_sum > parent.count) parent.childOverlap = true;
  const uint64_t other = parent.count > child_sum ? parent.count - child_sum : 0;
  if (other > 0) {
    SunburstNode filler;
    filler.label = "other";
    filler.count = other;
    parent.children.push_back(std::move(filler));
  }
}

inline SunburstNode build_node(const DatasetIndex& index, const ClassHierarchy& h, uint32_t node,
                               size_t depth, size_t maxDepth, size_t topK) {
  SunburstNode out;
  out.classIri = index.dict().term(h.nodeClasses[node].front()).lexical;
  out.label = node_label(index, h, node);
  out.count = h.transitiveCount[node];
  attach_children(index, h, h.children[node], out, depth, maxDepth, topK);
  return out;
}

}  // namespace sunburst_detail

inline SunburstNode build_sunburst(const DatasetIndex& index, const TermPartition& p,
                                   const ClassHierarchy& h, size_t maxDepth = 3,
                                   size_t topK = 12) {
  if (h.topNode) {
    return sunburst_detail::build_node(index, h, *h.topNode, 0, maxDepth, topK);
  }
  // Synthetic root spanning every hierarchy root; counts all instances.
  SunburstNode root;
  root.label = "all instances";
  root.count = p.instances.size();
  sunburst_detail::attach_children(index, h, h.roots, root, 0, maxDepth, topK);
  return root;
}

}  // namespace kgprof
