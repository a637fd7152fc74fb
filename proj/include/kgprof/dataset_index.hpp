// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "kgprof/ntriples.hpp"
#include "kgprof/term.hpp"
#include "kgprof/vocab.hpp"

namespace kgprof {

using TermId = uint32_t;
inline constexpr TermId kNoTerm = 0xFFFFFFFFu;

struct EncodedTriple {
  TermId s, p, o;
  bool operator==(const EncodedTriple&) const = default;
  auto operator<=>(const EncodedTriple&) const = default;
};

// Bijective term <-> dense id map. Terms are stored once, in the hash map;
// the id vector holds stable pointers into it.
class TermDictionary {
 public:
  TermId intern(const Term& t) {
    auto [it, inserted] = map_.try_emplace(t, static_cast<TermId>(by_id_.size()));
    if (inserted) by_id_.push_back(&it->first);
    return it->second;
  }

  TermId intern(Term&& t) {
    auto [it, inserted] = map_.try_emplace(std::move(t), static_cast<TermId>(by_id_.size()));
    if (inserted) by_id_.push_back(&it->first);
    return it->second;
  }

  std::optional<TermId> find(const Term& t) const {
    auto it = map_.find(t);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<TermId> find_iri(std::string_view iri) const {
    return find(Term::iri(std::string(iri)));
  }

  const Term& term(TermId id) const { return *by_id_[id]; }
  size_t size() const { return by_id_.size(); }

 private:
  std::unordered_map<Term, TermId, TermHash> map_;
  std::vector<const Term*> by_id_;
};

struct IndexConfig {
  std::vector<std::string> labelPredicates = {std::string(vocab::kRdfsLabel)};
  uint64_t maxDistinctTerms = 200'000'000;
};

class IndexCapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dictionary-encoded, deduplicated triple store for one graph. Triples are
// kept sorted by (s,p,o); the object side is reached through a permutation
// sorted by (o,p,s). Immutable once built.
class DatasetIndex {
 public:
  const TermDictionary& dict() const { return dict_; }
  uint64_t triple_count() const { return triples_.size(); }
  size_t term_count() const { return dict_.size(); }
  const std::vector<EncodedTriple>& triples() const { return triples_; }
  const std::vector<TermId>& label_predicate_ids() const { return label_pred_ids_; }
  const std::vector<std::string>& label_predicates() const { return config_.labelPredicates; }
  const IndexConfig& config() const { return config_; }

  // Triples with subject `id`, ordered by (p,o).
  std::span<const EncodedTriple> by_subject(TermId id) const {
    if (id >= spo_off_.size() - 1) return {};
    return {triples_.data() + spo_off_[id], spo_off_[id + 1] - spo_off_[id]};
  }

  // Positions (into triples()) of triples with object `id`, ordered by (p,s).
  std::span<const uint32_t> by_object(TermId id) const {
    if (id >= ops_off_.size() - 1) return {};
    return {ops_perm_.data() + ops_off_[id], ops_off_[id + 1] - ops_off_[id]};
  }

  bool contains(const EncodedTriple& t) const {
    return std::binary_search(triples_.begin(), triples_.end(), t);
  }

 private:
  friend class IndexBuilder;
  friend DatasetIndex load_index_snapshot(const std::string&);

  void finalize() {
    std::sort(triples_.begin(), triples_.end());
    triples_.erase(std::unique(triples_.begin(), triples_.end()), triples_.end());
    triples_.shrink_to_fit();

    const size_t n_terms = dict_.size();
    spo_off_.assign(n_terms + 1, 0);
    for (const auto& t : triples_) ++spo_off_[t.s + 1];
    for (size_t i = 1; i <= n_terms; ++i) spo_off_[i] += spo_off_[i - 1];

    ops_perm_.resize(triples_.size());
    std::vector<uint32_t> counts(n_terms + 1, 0);
    for (const auto& t : triples_) ++counts[t.o + 1];
    for (size_t i = 1; i <= n_terms; ++i) counts[i] += counts[i - 1];
    ops_off_ = counts;
    for (uint32_t i = 0; i < triples_.size(); ++i) {
      ops_perm_[counts[triples_[i].o]++] = i;
    }
    // The counting pass leaves each object bucket (s,p)-ordered; re-sort to
    // the documented (p,s) order.
    for (size_t o = 0; o < n_terms; ++o) {
      auto begin = ops_perm_.begin() + ops_off_[o];
      auto end = ops_perm_.begin() + ops_off_[o + 1];
      std::sort(begin, end, [&](uint32_t a, uint32_t b) {
        const auto& ta = triples_[a];
        const auto& tb = triples_[b];
        return std::tie(ta.p, ta.s) < std::tie(tb.p, tb.s);
      });
    }

    label_pred_ids_.clear();
    for (const auto& iri : config_.labelPredicates) {
      if (auto id = dict_.find_iri(iri)) label_pred_ids_.push_back(*id);
    }
    std::sort(label_pred_ids_.begin(), label_pred_ids_.end());
  }

  TermDictionary dict_;
  std::vector<EncodedTriple> triples_;
  std::vector<uint64_t> spo_off_;
  std::vector<uint32_t> ops_perm_;
  std::vector<uint32_t> ops_off_;
  std::vector<TermId> label_pred_ids_;
  IndexConfig config_;
};

class IndexBuilder {
 public:
  explicit IndexBuilder(IndexConfig config = {}) { index_.config_ = std::move(config); }

  void add(const TripleRecord& rec) {
    EncodedTriple t{index_.dict_.intern(rec.subject), index_.dict_.intern(rec.predicate),
                    index_.dict_.intern(rec.object)};
    if (index_.dict_.size() > index_.config_.maxDistinctTerms) {
      throw IndexCapacityError("distinct-term cap exceeded (" +
                               std::to_string(index_.config_.maxDistinctTerms) + ")");
    }
    index_.triples_.push_back(t);
  }

  void add(TripleRecord&& rec) {
    EncodedTriple t{index_.dict_.intern(std::move(rec.subject)),
                    index_.dict_.intern(std::move(rec.predicate)),
                    index_.dict_.intern(std::move(rec.object))};
    if (index_.dict_.size() > index_.config_.maxDistinctTerms) {
      throw IndexCapacityError("distinct-term cap exceeded (" +
                               std::to_string(index_.config_.maxDistinctTerms) + ")");
    }
    index_.triples_.push_back(t);
  }

  DatasetIndex build() {
    index_.finalize();
    return std::move(index_);
  }

 private:
  DatasetIndex index_;
};

inline DatasetIndex build_index(const std::vector<TripleRecord>& triples, IndexConfig config = {}) {
  IndexBuilder b(std::move(config));
  for (const auto& t : triples) b.add(t);
  return b.build();
}

// Parses and indexes one dump in a single pass.
inline DatasetIndex index_file(const std::string& path, IndexConfig config = {},
                               ParseReport* report = nullptr,
                               Strictness strictness = Strictness::Tolerant) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  IndexBuilder b(std::move(config));
  NTriplesParser parser(in, strictness);
  TripleRecord rec;
  while (parser.next(rec)) b.add(std::move(rec));
  if (report) *report = parser.report();
  return b.build();
}

}  // namespace kgprof
