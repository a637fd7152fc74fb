// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "kgprof/dataset_index.hpp"
#include "kgprof/vocab.hpp"

namespace kgprof {

// Split of a graph's terms into schema and instance populations.
//
// A term is a class if it is the object of an rdf:type edge, a participant
// of rdfs:subClassOf, or explicitly typed owl:Class / rdfs:Class. A term is
// an instance if it has an rdf:type edge to a class other than the
// meta-classes owl:Class / rdfs:Class. Typing by other builtin vocabulary
// (owl:TransitiveProperty, owl:Ontology, ...) is a schema declaration and
// creates neither a class nor an instance; owl:Thing and owl:NamedIndividual
// are the exception, since they type domain entities. Terms that qualify as
// both class and instance (the metaclass pattern) stay in both sets and are
// counted separately.
struct TermPartition {
  std::vector<bool> isClass;     // by TermId
  std::vector<bool> isInstance;  // by TermId
  std::vector<TermId> classes;   // sorted
  std::vector<TermId> instances; // sorted
  std::vector<TermId> objectRelations;  // sorted
  std::vector<TermId> dataRelations;    // sorted
  std::vector<TermId> dualTyped;        // classes ∩ instances, sorted
  std::vector<TermId> mixedRelations;   // objectRelations ∩ dataRelations, sorted
  std::vector<bool> isReservedPredicate;  // by TermId; builtin ns + label predicates

  bool instance(TermId id) const { return id < isInstance.size() && isInstance[id]; }
  bool cls(TermId id) const { return id < isClass.size() && isClass[id]; }
  bool reserved_predicate(TermId id) const {
    return id < isReservedPredicate.size() && isReservedPredicate[id];
  }
};

inline TermPartition partition_terms(const DatasetIndex& index) {
  const size_t n = index.term_count();
  TermPartition p;
  p.isClass.assign(n, false);
  p.isInstance.assign(n, false);
  p.isReservedPredicate.assign(n, false);

  for (TermId id = 0; id < n; ++id) {
    const Term& t = index.dict().term(id);
    if (t.is_iri() && vocab::is_builtin_namespace(t.lexical)) p.isReservedPredicate[id] = true;
  }
  for (TermId id : index.label_predicate_ids()) p.isReservedPredicate[id] = true;

  const auto type_id = index.dict().find_iri(vocab::kRdfType);
  const auto subclass_id = index.dict().find_iri(vocab::kRdfsSubClassOf);
  const auto owl_class_id = index.dict().find_iri(vocab::kOwlClass);
  const auto rdfs_class_id = index.dict().find_iri(vocab::kRdfsClass);
  const auto obj_prop_id = index.dict().find_iri(vocab::kOwlObjectProperty);
  const auto data_prop_id = index.dict().find_iri(vocab::kOwlDatatypeProperty);
  const auto thing_id = index.dict().find_iri(vocab::kOwlThing);
  const auto named_ind_id = index.dict().find_iri(vocab::kOwlNamedIndividual);

  auto is_meta_class = [&](TermId id) {
    return (owl_class_id && id == *owl_class_id) || (rdfs_class_id && id == *rdfs_class_id);
  };
  // Builtin vocabulary that still types domain entities.
  auto is_builtin_class = [&](TermId id) {
    return (thing_id && id == *thing_id) || (named_ind_id && id == *named_ind_id);
  };
  auto declares_schema_only = [&](TermId obj) {
    if (is_meta_class(obj) || is_builtin_class(obj)) return false;
    const Term& t = index.dict().term(obj);
    return t.is_iri() && vocab::is_builtin_namespace(t.lexical);
  };

  // Class population.
  for (const auto& t : index.triples()) {
    if (type_id && t.p == *type_id) {
      if (is_meta_class(t.o)) {
        p.isClass[t.s] = true;
        p.isClass[t.o] = true;
      } else if (!declares_schema_only(t.o)) {
        p.isClass[t.o] = true;
      }
    } else if (subclass_id && t.p == *subclass_id) {
      p.isClass[t.s] = true;
      p.isClass[t.o] = true;
    }
  }

  // Instances: typed with a class other than a meta-class or schema marker.
  for (const auto& t : index.triples()) {
    if (!type_id || t.p != *type_id) continue;
    if (!p.isClass[t.o] || is_meta_class(t.o) || declares_schema_only(t.o)) continue;
    p.isInstance[t.s] = true;
  }

  // Relations: predicates used in at least one assertion, plus declared
  // properties. Builtin-namespace and label predicates stay out.
  std::vector<bool> obj_rel(n, false), data_rel(n, false);
  for (const auto& t : index.triples()) {
    if (!p.isReservedPredicate[t.p]) {
      if (index.dict().term(t.o).is_literal()) {
        data_rel[t.p] = true;
      } else {
        obj_rel[t.p] = true;
      }
    }
    if (type_id && t.p == *type_id) {
      if (obj_prop_id && t.o == *obj_prop_id && !p.isReservedPredicate[t.s]) obj_rel[t.s] = true;
      if (data_prop_id && t.o == *data_prop_id && !p.isReservedPredicate[t.s]) data_rel[t.s] = true;
    }
  }

  for (TermId id = 0; id < n; ++id) {
    if (p.isClass[id]) p.classes.push_back(id);
    if (p.isInstance[id]) p.instances.push_back(id);
    if (p.isClass[id] && p.isInstance[id]) p.dualTyped.push_back(id);
    if (obj_rel[id]) p.objectRelations.push_back(id);
    if (data_rel[id]) p.dataRelations.push_back(id);
    if (obj_rel[id] && data_rel[id]) p.mixedRelations.push_back(id);
  }
  return p;
}

enum class Direction { In, Out };
enum class DegreeMode { EntityEdges, AllAssertions };

// Per-instance degree sequences, one pass over the triple set. EntityEdges
// counts inter-instance edges only; AllAssertions counts every non-reserved
// triple the instance is incident to.
struct DegreeVectors {
  std::vector<uint32_t> outEntity, inEntity, outAll, inAll;  // by TermId
};

inline DegreeVectors compute_degrees(const DatasetIndex& index, const TermPartition& p) {
  const size_t n = index.term_count();
  DegreeVectors d;
  d.outEntity.assign(n, 0);
  d.inEntity.assign(n, 0);
  d.outAll.assign(n, 0);
  d.inAll.assign(n, 0);
  for (const auto& t : index.triples()) {
    if (p.reserved_predicate(t.p)) continue;
    const bool s_inst = p.isInstance[t.s];
    const bool o_inst = p.isInstance[t.o];
    if (s_inst) ++d.outAll[t.s];
    if (o_inst) ++d.inAll[t.o];
    if (s_inst && o_inst) {
      ++d.outEntity[t.s];
      ++d.inEntity[t.o];
    }
  }
  return d;
}

class UnknownTermError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Degree of one instance; O(deg) via the adjacency spans.
inline uint64_t degree(const DatasetIndex& index, const TermPartition& p, TermId entity,
                       Direction dir, DegreeMode mode) {
  if (entity >= index.term_count()) throw UnknownTermError("unknown term id");
  uint64_t count = 0;
  if (dir == Direction::Out) {
    for (const auto& t : index.by_subject(entity)) {
      if (p.reserved_predicate(t.p)) continue;
      if (mode == DegreeMode::AllAssertions || p.isInstance[t.o]) ++count;
    }
  } else {
    for (uint32_t pos : index.by_object(entity)) {
      const auto& t = index.triples()[pos];
      if (p.reserved_predicate(t.p)) continue;
      if (mode == DegreeMode::AllAssertions || p.isInstance[t.s]) ++count;
    }
  }
  return count;
}

}  // namespace kgprof
