// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>

#include "kgprof/dataset_index.hpp"
#include "kgprof/vocab.hpp"

namespace kgprof {

// Description-logic expressivity name from the OWL constructs a graph uses.
// The letter order is (AL|ALC|S) H/R O I F/N/Q D, with only the strongest of
// {F,N,Q} reported and H dropped when R is present. Adding triples can only
// add letters or upgrade within a chain, never remove any.
inline std::string detect_expressivity(const DatasetIndex& index) {
  const auto& dict = index.dict();
  auto id_of = [&](std::string_view iri) { return dict.find_iri(iri); };

  const auto type_id = id_of(vocab::kRdfType);
  const auto subprop_id = id_of(vocab::kRdfsSubPropertyOf);
  const auto transitive_id = id_of(vocab::kOwlTransitiveProperty);
  const auto symmetric_id = id_of(vocab::kOwlSymmetricProperty);
  const auto functional_id = id_of(vocab::kOwlFunctionalProperty);
  const auto inv_functional_id = id_of(vocab::kOwlInverseFunctionalProperty);
  const auto datatype_prop_id = id_of(vocab::kOwlDatatypeProperty);
  const auto inverse_of_id = id_of(vocab::kOwlInverseOf);
  const auto union_of_id = id_of(vocab::kOwlUnionOf);
  const auto complement_of_id = id_of(vocab::kOwlComplementOf);
  const auto one_of_id = id_of(vocab::kOwlOneOf);
  const auto has_value_id = id_of(vocab::kOwlHasValue);
  const auto has_self_id = id_of(vocab::kOwlHasSelf);
  const auto chain_id = id_of(vocab::kOwlPropertyChainAxiom);
  const auto card_id = id_of(vocab::kOwlCardinality);
  const auto min_card_id = id_of(vocab::kOwlMinCardinality);
  const auto max_card_id = id_of(vocab::kOwlMaxCardinality);
  const auto q_card_id = id_of(vocab::kOwlQualifiedCardinality);
  const auto min_q_card_id = id_of(vocab::kOwlMinQualifiedCardinality);
  const auto max_q_card_id = id_of(vocab::kOwlMaxQualifiedCardinality);

  auto eq = [](const std::optional<TermId>& id, TermId v) { return id && *id == v; };

  bool s = false, c = false, h = false, r = false, o = false, i = false;
  bool f = false, n = false, q = false, d = false;

  for (const auto& t : index.triples()) {
    if (eq(type_id, t.p)) {
      if (eq(transitive_id, t.o)) s = true;
      else if (eq(symmetric_id, t.o)) i = true;
      else if (eq(functional_id, t.o) || eq(inv_functional_id, t.o)) f = true;
      else if (eq(datatype_prop_id, t.o)) d = true;
    } else if (eq(subprop_id, t.p)) {
      const Term& sub = dict.term(t.s);
      const Term& sup = dict.term(t.o);
      const bool builtin = (sub.is_iri() && vocab::is_builtin_namespace(sub.lexical)) ||
                           (sup.is_iri() && vocab::is_builtin_namespace(sup.lexical));
      if (!builtin) h = true;
    } else if (eq(union_of_id, t.p) || eq(complement_of_id, t.p)) {
      c = true;
    } else if (eq(chain_id, t.p) || eq(has_self_id, t.p)) {
      r = true;
    } else if (eq(one_of_id, t.p) || eq(has_value_id, t.p)) {
      o = true;
    } else if (eq(inverse_of_id, t.p)) {
      i = true;
    } else if (eq(card_id, t.p) || eq(min_card_id, t.p) || eq(max_card_id, t.p)) {
      n = true;
    } else if (eq(q_card_id, t.p) || eq(min_q_card_id, t.p) || eq(max_q_card_id, t.p)) {
      q = true;
    }
    if (!d && dict.term(t.o).is_literal() && !dict.term(t.o).datatype.empty()) d = true;
  }

  std::string name = s ? "S" : (c ? "ALC" : "AL");
  if (r) name += 'R';
  else if (h) name += 'H';
  if (o) name += 'O';
  if (i) name += 'I';
  if (q) name += 'Q';
  else if (n) name += 'N';
  else if (f) name += 'F';
  if (d) name += 'D';
  return name;
}

}  // namespace kgprof
