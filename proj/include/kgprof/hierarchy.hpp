// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "kgprof/dataset_index.hpp"
#include "kgprof/partition.hpp"
#include "kgprof/vocab.hpp"

namespace kgprof {

// Class hierarchy condensed over rdfs:subClassOf cycles. Nodes are strongly
// connected components of class ids; edges run child (subclass) -> parent
// (superclass). If owl:Thing is present it is made the sole root and all
// otherwise-parentless nodes hang beneath it.
struct ClassHierarchy {
  std::vector<std::vector<TermId>> nodeClasses;       // member class ids, sorted
  std::unordered_map<TermId, uint32_t> nodeOfClass;
  std::vector<std::vector<uint32_t>> parents;          // superclass nodes, sorted unique
  std::vector<std::vector<uint32_t>> children;         // subclass nodes, sorted unique
  std::vector<uint32_t> roots;                         // sorted
  std::vector<std::vector<TermId>> directInstances;    // sorted unique, per node
  std::vector<uint64_t> directCount;
  std::vector<uint64_t> transitiveCount;
  std::optional<uint32_t> topNode;                     // owl:Thing's node, if present

  size_t node_count() const { return nodeClasses.size(); }

  // Deduplicated union of direct instances of `node` and all descendants.
  std::vector<TermId> transitive_instances(uint32_t node) const {
    std::vector<TermId> acc;
    std::vector<uint32_t> stack{node};
    std::vector<bool> seen(node_count(), false);
    seen[node] = true;
    while (!stack.empty()) {
      uint32_t cur = stack.back();
      stack.pop_back();
      acc.insert(acc.end(), directInstances[cur].begin(), directInstances[cur].end());
      for (uint32_t c : children[cur]) {
        if (!seen[c]) {
          seen[c] = true;
          stack.push_back(c);
        }
      }
    }
    std::sort(acc.begin(), acc.end());
    acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
    return acc;
  }
};

namespace hierarchy_detail {

// Iterative Tarjan SCC over the subclass edge lists. Returns component id per
// vertex; components come out in reverse topological order of the edge
// direction used (child -> parent).
inline std::vector<uint32_t> tarjan_scc(size_t n, const std::vector<std::vector<uint32_t>>& adj,
                                        uint32_t& comp_count) {
  constexpr uint32_t kUnset = 0xFFFFFFFFu;
  std::vector<uint32_t> index(n, kUnset), lowlink(n, 0), comp(n, kUnset);
  std::vector<bool> on_stack(n, false);
  std::vector<uint32_t> stack;
  uint32_t next_index = 0;
  comp_count = 0;

  struct Frame {
    uint32_t v;
    size_t edge;
  };
  std::vector<Frame> call;

  for (uint32_t start = 0; start < n; ++start) {
    if (index[start] != kUnset) continue;
    call.push_back({start, 0});
    while (!call.empty()) {
      Frame& f = call.back();
      uint32_t v = f.v;
      if (f.edge == 0) {
        index[v] = lowlink[v] = next_index++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      bool descended = false;
      while (f.edge < adj[v].size()) {
        uint32_t w = adj[v][f.edge++];
        if (index[w] == kUnset) {
          call.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[w]) lowlink[v] = std::min(lowlink[v], index[w]);
      }
      if (descended) continue;
      if (lowlink[v] == index[v]) {
        while (true) {
          uint32_t w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = comp_count;
          if (w == v) break;
        }
        ++comp_count;
      }
      call.pop_back();
      if (!call.empty()) {
        uint32_t parent = call.back().v;
        lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
      }
    }
  }
  return comp;
}

}  // namespace hierarchy_detail

inline ClassHierarchy build_hierarchy(const DatasetIndex& index, const TermPartition& p) {
  ClassHierarchy h;
  const auto& classes = p.classes;
  const size_t n_classes = classes.size();

  // Dense renumbering of class ids.
  std::unordered_map<TermId, uint32_t> class_pos;
  class_pos.reserve(n_classes);
  for (uint32_t i = 0; i < n_classes; ++i) class_pos.emplace(classes[i], i);

  const auto subclass_id = index.dict().find_iri(vocab::kRdfsSubClassOf);
  std::vector<std::vector<uint32_t>> up(n_classes);  // subclass -> superclass
  if (subclass_id) {
    for (const auto& t : index.triples()) {
      if (t.p != *subclass_id || t.s == t.o) continue;
      auto si = class_pos.find(t.s);
      auto oi = class_pos.find(t.o);
      if (si == class_pos.end() || oi == class_pos.end()) continue;
      up[si->second].push_back(oi->second);
    }
  }

  uint32_t n_nodes = 0;
  std::vector<uint32_t> comp = hierarchy_detail::tarjan_scc(n_classes, up, n_nodes);

  h.nodeClasses.assign(n_nodes, {});
  for (uint32_t i = 0; i < n_classes; ++i) h.nodeClasses[comp[i]].push_back(classes[i]);
  for (auto& members : h.nodeClasses) std::sort(members.begin(), members.end());
  for (uint32_t node = 0; node < n_nodes; ++node) {
    for (TermId c : h.nodeClasses[node]) h.nodeOfClass.emplace(c, node);
  }

  h.parents.assign(n_nodes, {});
  h.children.assign(n_nodes, {});
  for (uint32_t i = 0; i < n_classes; ++i) {
    for (uint32_t j : up[i]) {
      if (comp[i] != comp[j]) h.parents[comp[i]].push_back(comp[j]);
    }
  }
  for (auto& v : h.parents) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }

  // owl:Thing, when it is a class of this graph, becomes the sole root.
  const auto thing_id = index.dict().find_iri(vocab::kOwlThing);
  if (thing_id && p.cls(*thing_id)) h.topNode = h.nodeOfClass.at(*thing_id);
  for (uint32_t node = 0; node < n_nodes; ++node) {
    if (h.topNode && node != *h.topNode && h.parents[node].empty()) {
      h.parents[node].push_back(*h.topNode);
    }
  }
  for (uint32_t node = 0; node < n_nodes; ++node) {
    for (uint32_t par : h.parents[node]) h.children[par].push_back(node);
    if (h.parents[node].empty()) h.roots.push_back(node);
  }
  for (auto& v : h.children) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }

  // Direct instances per node.
  h.directInstances.assign(n_nodes, {});
  const auto type_id = index.dict().find_iri(vocab::kRdfType);
  if (type_id) {
    for (const auto& t : index.triples()) {
      if (t.p != *type_id || !p.instance(t.s)) continue;
      auto it = h.nodeOfClass.find(t.o);
      if (it != h.nodeOfClass.end()) h.directInstances[it->second].push_back(t.s);
    }
  }
  h.directCount.assign(n_nodes, 0);
  for (uint32_t node = 0; node < n_nodes; ++node) {
    auto& v = h.directInstances[node];
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    h.directCount[node] = v.size();
  }

  // Transitive counts: children before parents, merging sorted sets; child
  // sets are released once every parent has consumed them.
  h.transitiveCount.assign(n_nodes, 0);
  {
    std::vector<uint32_t> indeg(n_nodes, 0);  // unprocessed children
    for (uint32_t node = 0; node < n_nodes; ++node) {
      indeg[node] = static_cast<uint32_t>(h.children[node].size());
    }
    std::vector<uint32_t> order;
    order.reserve(n_nodes);
    for (uint32_t node = 0; node < n_nodes; ++node) {
      if (indeg[node] == 0) order.push_back(node);
    }
    for (size_t head = 0; head < order.size(); ++head) {
      uint32_t node = order[head];
      for (uint32_t par : h.parents[node]) {
        if (--indeg[par] == 0) order.push_back(par);
      }
    }

    std::vector<std::vector<TermId>> acc(n_nodes);
    std::vector<uint32_t> pending_parents(n_nodes, 0);
    for (uint32_t node = 0; node < n_nodes; ++node) {
      pending_parents[node] = static_cast<uint32_t>(h.parents[node].size());
    }
    for (uint32_t node : order) {
      std::vector<TermId> merged = h.directInstances[node];
      for (uint32_t child : h.children[node]) {
        std::vector<TermId> next;
        next.reserve(merged.size() + acc[child].size());
        std::merge(merged.begin(), merged.end(), acc[child].begin(), acc[child].end(),
                   std::back_inserter(next));
        next.erase(std::unique(next.begin(), next.end()), next.end());
        merged = std::move(next);
        if (--pending_parents[child] == 0) {
          acc[child].clear();
          acc[child].shrink_to_fit();
        }
      }
      h.transitiveCount[node] = merged.size();
      acc[node] = std::move(merged);
    }
  }
  return h;
}

// Shortest-path depth of every node from the nearest root (roots are 0).
inline std::vector<uint32_t> node_depths(const ClassHierarchy& h) {
  std::vector<uint32_t> depth(h.node_count(), 0xFFFFFFFFu);
  std::vector<uint32_t> queue = h.roots;
  for (uint32_t r : h.roots) depth[r] = 0;
  for (size_t head = 0; head < queue.size(); ++head) {
    uint32_t node = queue[head];
    for (uint32_t c : h.children[node]) {
      if (depth[c] == 0xFFFFFFFFu) {
        depth[c] = depth[node] + 1;
        queue.push_back(c);
      }
    }
  }
  return depth;
}

}  // namespace kgprof
