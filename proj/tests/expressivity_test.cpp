// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "kgprof/expressivity.hpp"
#include "support/synth.hpp"

namespace kgprof {
namespace {

const std::string kNs = "http://ex.org/onto/";

TripleRecord typed(const std::string& subject, std::string_view cls) {
  return synth::triple(Term::iri(kNs + subject), vocab::kRdfType, Term::iri(std::string(cls)));
}

TripleRecord construct(const std::string& subject, std::string_view pred,
                       const std::string& object) {
  return synth::triple(Term::iri(kNs + subject), pred, Term::iri(kNs + object));
}

TripleRecord typed_literal(const std::string& subject) {
  return {Term::iri(kNs + subject), Term::iri(kNs + "hasAge"),
          Term::literal("41", std::string(vocab::kXsdNs) + "integer", "")};
}

std::string detect(const std::vector<TripleRecord>& records) {
  return detect_expressivity(build_index(records));
}

TEST(Expressivity, BaseCaseIsAL) {
  EXPECT_EQ(detect({}), "AL");
  EXPECT_EQ(detect({construct("a", kNs + "knows", "b")}), "AL");
}

TEST(Expressivity, TypedLiteralAddsD) {
  EXPECT_EQ(detect({typed_literal("a")}), "ALD");
  // plain and language-tagged literals do not count
  EXPECT_EQ(detect({{Term::iri(kNs + "a"), Term::iri(kNs + "p"), Term::literal("x", "", "en")}}),
            "AL");
}

TEST(Expressivity, UnionUpgradesToALC) {
  EXPECT_EQ(detect({construct("C", vocab::kOwlUnionOf, "list1")}), "ALC");
  EXPECT_EQ(detect({construct("C", vocab::kOwlComplementOf, "D")}), "ALC");
}

TEST(Expressivity, TransitivePlusSubPropertyPlusTypedLiteral) {
  EXPECT_EQ(detect({
                typed("partOf", vocab::kOwlTransitiveProperty),
                construct("hasFather", vocab::kRdfsSubPropertyOf, "hasParent"),
                typed_literal("a"),
            }),
            "SHD");
}

TEST(Expressivity, TransitiveOneOfTypedLiteral) {
  EXPECT_EQ(detect({
                typed("partOf", vocab::kOwlTransitiveProperty),
                construct("Weekday", vocab::kOwlOneOf, "list1"),
                typed_literal("a"),
            }),
            "SOD");
}

TEST(Expressivity, SixLetterOntology) {
  EXPECT_EQ(detect({
                typed("partOf", vocab::kOwlTransitiveProperty),
                construct("hasFather", vocab::kRdfsSubPropertyOf, "hasParent"),
                construct("Weekday", vocab::kOwlHasValue, "monday"),
                construct("hasChild", vocab::kOwlInverseOf, "hasParent"),
                typed("hasISBN", vocab::kOwlFunctionalProperty),
                typed_literal("a"),
            }),
            "SHOIFD");
}

TEST(Expressivity, ChainAxiomGivesRAndSuppressesH) {
  EXPECT_EQ(detect({
                typed("partOf", vocab::kOwlTransitiveProperty),
                construct("hasFather", vocab::kRdfsSubPropertyOf, "hasParent"),
                construct("hasUncle", vocab::kOwlPropertyChainAxiom, "list1"),
                construct("Weekday", vocab::kOwlOneOf, "list1"),
                construct("hasChild", vocab::kOwlInverseOf, "hasParent"),
                typed("hasISBN", vocab::kOwlInverseFunctionalProperty),
            }),
            "SROIF");
}

TEST(Expressivity, TransitiveHierarchyOneOfFunctionalTyped) {
  EXPECT_EQ(detect({
                typed("partOf", vocab::kOwlTransitiveProperty),
                construct("hasFather", vocab::kRdfsSubPropertyOf, "hasParent"),
                construct("Weekday", vocab::kOwlOneOf, "list1"),
                typed("hasISBN", vocab::kOwlFunctionalProperty),
                typed_literal("a"),
            }),
            "SHOFD");
}

TEST(Expressivity, SubPropertyBetweenBuiltinsDoesNotCount) {
  EXPECT_EQ(detect({synth::triple(Term::iri(kNs + "myLabel"), vocab::kRdfsSubPropertyOf,
                                  Term::iri(std::string(vocab::kRdfsLabel)))}),
            "AL");
}

TEST(Expressivity, CardinalityLetters) {
  EXPECT_EQ(detect({{Term::iri(kNs + "R"), Term::iri(std::string(vocab::kOwlMinCardinality)),
                     Term::literal("1", std::string(vocab::kXsdNs) + "nonNegativeInteger", "")}}),
            "ALND");
  EXPECT_EQ(detect({{Term::iri(kNs + "R"), Term::iri(std::string(vocab::kOwlQualifiedCardinality)),
                     Term::literal("2", std::string(vocab::kXsdNs) + "nonNegativeInteger", "")}}),
            "ALQD");
  // Q wins over N and F when several are present.
  EXPECT_EQ(detect({
                typed("hasISBN", vocab::kOwlFunctionalProperty),
                construct("R", vocab::kOwlMinCardinality, "one"),
                construct("R2", vocab::kOwlMaxQualifiedCardinality, "two"),
            }),
            "ALQ");
}

TEST(Expressivity, SymmetricGivesI) {
  EXPECT_EQ(detect({typed("spouse", vocab::kOwlSymmetricProperty)}), "ALI");
}

TEST(Expressivity, DatatypePropertyGivesD) {
  EXPECT_EQ(detect({typed("hasName", vocab::kOwlDatatypeProperty)}), "ALD");
}

// Adding triples can only add letters or upgrade within a chain.
TEST(Expressivity, MonotoneUnderGrowth) {
  const std::vector<TripleRecord> steps = {
      construct("a", kNs + "knows", "b"),
      typed_literal("a"),
      construct("C", vocab::kOwlUnionOf, "list"),
      construct("p", vocab::kRdfsSubPropertyOf, "q"),
      typed("t", vocab::kOwlTransitiveProperty),
      construct("Weekday", vocab::kOwlOneOf, "list"),
      typed("s", vocab::kOwlSymmetricProperty),
      typed("f", vocab::kOwlFunctionalProperty),
      construct("R", vocab::kOwlMinCardinality, "one"),
      construct("R2", vocab::kOwlQualifiedCardinality, "two"),
      construct("u", vocab::kOwlPropertyChainAxiom, "list"),
  };
  auto rank = [](char letter, const std::string& name) {
    return name.find(letter) != std::string::npos;
  };
  std::vector<TripleRecord> records;
  std::string prev = detect(records);
  for (const auto& step : steps) {
    records.push_back(step);
    const std::string cur = detect(records);
    // base upgrades only forward: AL -> ALC -> S
    auto base_rank = [](const std::string& n) {
      if (n.starts_with("ALC")) return 1;
      if (n.starts_with("AL")) return 0;
      return 2;  // S
    };
    EXPECT_GE(base_rank(cur), base_rank(prev)) << prev << " -> " << cur;
    // H may only disappear in favor of R
    if (rank('H', prev)) EXPECT_TRUE(rank('H', cur) || rank('R', cur));
    if (rank('R', prev)) EXPECT_TRUE(rank('R', cur));
    if (rank('O', prev)) EXPECT_TRUE(rank('O', cur));
    if (rank('I', prev)) EXPECT_TRUE(rank('I', cur));
    // F -> N -> Q chain
    if (rank('Q', prev)) EXPECT_TRUE(rank('Q', cur));
    if (rank('N', prev)) EXPECT_TRUE(rank('N', cur) || rank('Q', cur));
    if (rank('F', prev)) EXPECT_TRUE(rank('F', cur) || rank('N', cur) || rank('Q', cur));
    if (rank('D', prev)) EXPECT_TRUE(rank('D', cur));
    prev = cur;
  }
  EXPECT_EQ(prev, "SROIQD");
}

}  // namespace
}  // namespace kgprof
