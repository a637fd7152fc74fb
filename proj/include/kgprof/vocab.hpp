// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>

namespace kgprof::vocab {

inline constexpr std::string_view kRdfNs = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfsNs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kOwlNs = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kXsdNs = "http://www.w3.org/2001/XMLSchema#";

inline constexpr std::string_view kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";

inline constexpr std::string_view kRdfsClass = "http://www.w3.org/2000/01/rdf-schema#Class";
inline constexpr std::string_view kRdfsSubClassOf = "http://www.w3.org/2000/01/rdf-schema#subClassOf";
inline constexpr std::string_view kRdfsSubPropertyOf = "http://www.w3.org/2000/01/rdf-schema#subPropertyOf";
inline constexpr std::string_view kRdfsLabel = "http://www.w3.org/2000/01/rdf-schema#label";

inline constexpr std::string_view kOwlClass = "http://www.w3.org/2002/07/owl#Class";
inline constexpr std::string_view kOwlThing = "http://www.w3.org/2002/07/owl#Thing";
inline constexpr std::string_view kOwlNamedIndividual =
    "http://www.w3.org/2002/07/owl#NamedIndividual";
inline constexpr std::string_view kOwlSameAs = "http://www.w3.org/2002/07/owl#sameAs";
inline constexpr std::string_view kOwlObjectProperty = "http://www.w3.org/2002/07/owl#ObjectProperty";
inline constexpr std::string_view kOwlDatatypeProperty = "http://www.w3.org/2002/07/owl#DatatypeProperty";
inline constexpr std::string_view kOwlTransitiveProperty = "http://www.w3.org/2002/07/owl#TransitiveProperty";
inline constexpr std::string_view kOwlSymmetricProperty = "http://www.w3.org/2002/07/owl#SymmetricProperty";
inline constexpr std::string_view kOwlFunctionalProperty = "http://www.w3.org/2002/07/owl#FunctionalProperty";
inline constexpr std::string_view kOwlInverseFunctionalProperty =
    "http://www.w3.org/2002/07/owl#InverseFunctionalProperty";
inline constexpr std::string_view kOwlInverseOf = "http://www.w3.org/2002/07/owl#inverseOf";
inline constexpr std::string_view kOwlUnionOf = "http://www.w3.org/2002/07/owl#unionOf";
inline constexpr std::string_view kOwlComplementOf = "http://www.w3.org/2002/07/owl#complementOf";
inline constexpr std::string_view kOwlOneOf = "http://www.w3.org/2002/07/owl#oneOf";
inline constexpr std::string_view kOwlHasValue = "http://www.w3.org/2002/07/owl#hasValue";
inline constexpr std::string_view kOwlHasSelf = "http://www.w3.org/2002/07/owl#hasSelf";
inline constexpr std::string_view kOwlPropertyChainAxiom =
    "http://www.w3.org/2002/07/owl#propertyChainAxiom";
inline constexpr std::string_view kOwlCardinality = "http://www.w3.org/2002/07/owl#cardinality";
inline constexpr std::string_view kOwlMinCardinality = "http://www.w3.org/2002/07/owl#minCardinality";
inline constexpr std::string_view kOwlMaxCardinality = "http://www.w3.org/2002/07/owl#maxCardinality";
inline constexpr std::string_view kOwlQualifiedCardinality =
    "http://www.w3.org/2002/07/owl#qualifiedCardinality";
inline constexpr std::string_view kOwlMinQualifiedCardinality =
    "http://www.w3.org/2002/07/owl#minQualifiedCardinality";
inline constexpr std::string_view kOwlMaxQualifiedCardinality =
    "http://www.w3.org/2002/07/owl#maxQualifiedCardinality";

// True for any IRI in the rdf/rdfs/owl namespaces. Predicates in these
// namespaces are schema or linkage plumbing, not domain assertions; they are
// kept out of relation counts and degree computation.
inline bool is_builtin_namespace(std::string_view iri) {
  return iri.starts_with(kRdfNs) || iri.starts_with(kRdfsNs) || iri.starts_with(kOwlNs);
}

}  // namespace kgprof::vocab
