// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "kgprof/dataset_index.hpp"
#include "kgprof/ntriples.hpp"
#include "kgprof/partition.hpp"
#include "kgprof/vocab.hpp"

namespace kgprof {

enum class LinkProvenance : uint8_t { Explicit, TransitiveClosure, ExternalMapping };

// The known identity links between two graphs: explicit owl:sameAs statements
// and 2-column CSV mappings, closed transitively across any intermediate
// identifiers, then restricted to (instance of A, instance of B) pairs.
struct GoldLinkSet {
  std::vector<std::pair<TermId, TermId>> pairs;   // sorted unique (A id, B id)
  std::vector<LinkProvenance> provenance;         // parallel to pairs
  uint64_t statementCount = 0;                    // sameAs statements / CSV rows read
  uint64_t unknownIriStatements = 0;              // statements with no endpoint in either graph
  uint64_t ignoredStatements = 0;                 // non-sameAs triples in link files

  bool contains(const std::pair<TermId, TermId>& pr) const {
    return std::binary_search(pairs.begin(), pairs.end(), pr);
  }
  uint64_t size() const { return pairs.size(); }
};

namespace gold_detail {

// Connected components over the sameAs statements, computed by breadth-first
// traversal of the adjacency lists.
struct IdentityGraph {
  std::unordered_map<std::string, uint32_t> node_of;
  std::vector<std::vector<uint32_t>> adj;
  std::vector<const std::string*> iri_of;

  uint32_t node(const std::string& iri) {
    auto [it, inserted] = node_of.try_emplace(iri, static_cast<uint32_t>(adj.size()));
    if (inserted) {
      adj.emplace_back();
      iri_of.push_back(&it->first);
    }
    return it->second;
  }

  void link(const std::string& a, const std::string& b) {
    uint32_t na = node(a), nb = node(b);
    if (na == nb) return;
    adj[na].push_back(nb);
    adj[nb].push_back(na);
  }

  std::vector<uint32_t> components() const {
    constexpr uint32_t kUnset = 0xFFFFFFFFu;
    std::vector<uint32_t> comp(adj.size(), kUnset);
    uint32_t next = 0;
    std::vector<uint32_t> queue;
    for (uint32_t start = 0; start < adj.size(); ++start) {
      if (comp[start] != kUnset) continue;
      comp[start] = next;
      queue.assign(1, start);
      for (size_t head = 0; head < queue.size(); ++head) {
        for (uint32_t nb : adj[queue[head]]) {
          if (comp[nb] == kUnset) {
            comp[nb] = next;
            queue.push_back(nb);
          }
        }
      }
      ++next;
    }
    return comp;
  }
};

inline bool has_suffix(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(),
                                                suffix) == 0;
}

// Minimal 2-column CSV row split; honors double-quoted fields.
inline bool split_csv_pair(const std::string& line, std::string& a, std::string& b) {
  auto read_field = [&](size_t& pos, std::string& out) -> bool {
    out.clear();
    if (pos < line.size() && line[pos] == '"') {
      ++pos;
      while (pos < line.size()) {
        if (line[pos] == '"') {
          if (pos + 1 < line.size() && line[pos + 1] == '"') {
            out += '"';
            pos += 2;
            continue;
          }
          ++pos;
          return true;
        }
        out += line[pos++];
      }
      return false;
    }
    while (pos < line.size() && line[pos] != ',') out += line[pos++];
    return true;
  };
  size_t pos = 0;
  if (!read_field(pos, a)) return false;
  if (pos >= line.size() || line[pos] != ',') return false;
  ++pos;
  if (!read_field(pos, b)) return false;
  return !a.empty() && !b.empty();
}

}  // namespace gold_detail

// Loads gold links from a mix of N-Triples sameAs files (.nt, .nt.gz) and
// 2-column CSV files (.csv). All statements feed the closure, including ones
// over identifiers known to neither graph; those bridge indirect chains.
inline GoldLinkSet load_gold_links(const std::vector<std::string>& files,
                                   const DatasetIndex& indexA, const TermPartition& pa,
                                   const DatasetIndex& indexB, const TermPartition& pb) {
  GoldLinkSet gold;
  gold_detail::IdentityGraph graph;
  // Direct statements, for provenance: explicit sameAs vs external CSV rows.
  std::unordered_set<uint64_t> direct_nt, direct_csv;

  auto known_somewhere = [&](const std::string& iri) {
    return indexA.dict().find_iri(iri).has_value() || indexB.dict().find_iri(iri).has_value();
  };
  auto direct_key = [&](const std::string& a, const std::string& b) -> uint64_t {
    uint64_t ha = std::hash<std::string>{}(a);
    uint64_t hb = std::hash<std::string>{}(b);
    return ha ^ (hb + 0x9e3779b97f4a7c15ULL + (ha << 6) + (ha >> 2));
  };

  for (const auto& path : files) {
    if (gold_detail::has_suffix(path, ".csv")) {
      std::ifstream in(path);
      if (!in) throw std::runtime_error("cannot open " + path);
      std::string line, a, b;
      while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (!gold_detail::split_csv_pair(line, a, b)) {
          ++gold.ignoredStatements;
          continue;
        }
        ++gold.statementCount;
        if (!known_somewhere(a) && !known_somewhere(b)) ++gold.unknownIriStatements;
        graph.link(a, b);
        direct_csv.insert(direct_key(a, b));
        direct_csv.insert(direct_key(b, a));
      }
    } else {
      parse_ntriples_file(path, [&](TripleRecord&& t) {
        if (!t.predicate.is_iri() || t.predicate.lexical != vocab::kOwlSameAs ||
            !t.subject.is_iri() || !t.object.is_iri()) {
          ++gold.ignoredStatements;
          return;
        }
        ++gold.statementCount;
        if (!known_somewhere(t.subject.lexical) && !known_somewhere(t.object.lexical)) {
          ++gold.unknownIriStatements;
        }
        graph.link(t.subject.lexical, t.object.lexical);
        direct_nt.insert(direct_key(t.subject.lexical, t.object.lexical));
        direct_nt.insert(direct_key(t.object.lexical, t.subject.lexical));
      });
    }
  }

  const std::vector<uint32_t> comp = graph.components();
  uint32_t n_comp = 0;
  for (uint32_t c : comp) n_comp = std::max(n_comp, c + 1);

  // Component members that are instances of A / of B.
  std::vector<std::vector<uint32_t>> members_a(n_comp), members_b(n_comp);
  for (uint32_t node = 0; node < comp.size(); ++node) {
    const std::string& iri = *graph.iri_of[node];
    if (auto id = indexA.dict().find_iri(iri); id && pa.instance(*id)) {
      members_a[comp[node]].push_back(node);
    }
    if (auto id = indexB.dict().find_iri(iri); id && pb.instance(*id)) {
      members_b[comp[node]].push_back(node);
    }
  }

  std::vector<std::pair<std::pair<TermId, TermId>, LinkProvenance>> collected;
  for (uint32_t c = 0; c < n_comp; ++c) {
    for (uint32_t na : members_a[c]) {
      const std::string& iri_a = *graph.iri_of[na];
      const TermId id_a = *indexA.dict().find_iri(iri_a);
      for (uint32_t nb : members_b[c]) {
        const std::string& iri_b = *graph.iri_of[nb];
        if (iri_a == iri_b) continue;  // no self-pairs
        const TermId id_b = *indexB.dict().find_iri(iri_b);
        LinkProvenance prov = LinkProvenance::TransitiveClosure;
        const uint64_t key = direct_key(iri_a, iri_b);
        if (direct_nt.count(key)) prov = LinkProvenance::Explicit;
        else if (direct_csv.count(key)) prov = LinkProvenance::ExternalMapping;
        collected.push_back({{id_a, id_b}, prov});
      }
    }
  }
  std::sort(collected.begin(), collected.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (const auto& [pr, prov] : collected) {
    if (!gold.pairs.empty() && gold.pairs.back() == pr) continue;
    gold.pairs.push_back(pr);
    gold.provenance.push_back(prov);
  }
  return gold;
}

}  // namespace kgprof
