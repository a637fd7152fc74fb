// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <filesystem>
#include <set>
#include <sstream>

#include "kgprof/dataset_index.hpp"
#include "kgprof/partition.hpp"
#include "kgprof/snapshot.hpp"
#include "support/synth.hpp"

namespace kgprof {
namespace {

TEST(DatasetIndex, EmptyStream) {
  DatasetIndex index = build_index({});
  EXPECT_EQ(index.triple_count(), 0u);
  EXPECT_EQ(index.term_count(), 0u);
}

TEST(DatasetIndex, DuplicateTripleStoredOnce) {
  auto t = synth::triple(Term::iri("http://ex.org/a"), "http://ex.org/p",
                         Term::iri("http://ex.org/b"));
  DatasetIndex index = build_index({t, t});
  EXPECT_EQ(index.triple_count(), 1u);
}

TEST(DatasetIndex, DictionaryIsDenseBijection) {
  synth::TaxonomyOptions opt;
  opt.classes = 10;
  opt.instances = 50;
  DatasetIndex index = build_index(synth::taxonomy_graph(7, opt));
  for (TermId id = 0; id < index.term_count(); ++id) {
    auto found = index.dict().find(index.dict().term(id));
    ASSERT_TRUE(found.has_value());
    EXPECT_EQ(*found, id);
  }
}

// Deduplicated triple count equals the number of distinct canonical lines,
// counted independently of the index.
TEST(DatasetIndex, FixtureCountMatchesDistinctCanonicalLines) {
  synth::TaxonomyOptions opt;
  opt.classes = 40;
  opt.instances = 400;
  opt.entityEdges = 2000;
  opt.literalTriples = 2000;
  opt.duplicateTriples = 600;
  const auto records = synth::taxonomy_graph(11, opt);

  std::set<std::string> canonical;
  for (const auto& r : records) canonical.insert(to_ntriples(r));

  DatasetIndex index = build_index(records);
  EXPECT_GT(records.size(), canonical.size());  // fixture really has duplicates
  EXPECT_EQ(index.triple_count(), canonical.size());
}

TEST(DatasetIndex, EveryTripleReachableFromBothSides) {
  synth::TaxonomyOptions opt;
  opt.classes = 15;
  opt.instances = 80;
  DatasetIndex index = build_index(synth::taxonomy_graph(13, opt));

  uint64_t via_subject = 0;
  for (TermId id = 0; id < index.term_count(); ++id) via_subject += index.by_subject(id).size();
  EXPECT_EQ(via_subject, index.triple_count());

  uint64_t via_object = 0;
  for (TermId id = 0; id < index.term_count(); ++id) {
    for (uint32_t pos : index.by_object(id)) {
      EXPECT_EQ(index.triples()[pos].o, id);
      ++via_object;
    }
  }
  EXPECT_EQ(via_object, index.triple_count());
}

TEST(DatasetIndex, DistinctTermCapAborts) {
  IndexConfig config;
  config.maxDistinctTerms = 10;
  IndexBuilder builder(config);
  EXPECT_THROW(
      {
        for (int i = 0; i < 100; ++i) {
          builder.add(synth::triple(Term::iri("http://ex.org/s" + std::to_string(i)),
                                    "http://ex.org/p", Term::iri("http://ex.org/o")));
        }
      },
      IndexCapacityError);
}

TEST(Degrees, SpecExamples) {
  // instance with 2 literal triples and 1 edge to another instance
  std::vector<TripleRecord> records;
  records.push_back(synth::triple(Term::iri("http://ex.org/C"), vocab::kRdfType,
                                  Term::iri(std::string(vocab::kOwlClass))));
  records.push_back(
      synth::triple(Term::iri("http://ex.org/x"), vocab::kRdfType, Term::iri("http://ex.org/C")));
  records.push_back(
      synth::triple(Term::iri("http://ex.org/y"), vocab::kRdfType, Term::iri("http://ex.org/C")));
  records.push_back(synth::triple(Term::iri("http://ex.org/x"), "http://ex.org/lit",
                                  Term::literal("one")));
  records.push_back(synth::triple(Term::iri("http://ex.org/x"), "http://ex.org/lit",
                                  Term::literal("two")));
  records.push_back(synth::triple(Term::iri("http://ex.org/x"), "http://ex.org/knows",
                                  Term::iri("http://ex.org/y")));

  DatasetIndex index = build_index(records);
  TermPartition p = partition_terms(index);
  const TermId x = *index.dict().find_iri("http://ex.org/x");
  const TermId y = *index.dict().find_iri("http://ex.org/y");

  EXPECT_EQ(degree(index, p, x, Direction::Out, DegreeMode::EntityEdges), 1u);
  EXPECT_EQ(degree(index, p, x, Direction::Out, DegreeMode::AllAssertions), 3u);
  EXPECT_EQ(degree(index, p, y, Direction::In, DegreeMode::EntityEdges), 1u);
  EXPECT_EQ(degree(index, p, y, Direction::Out, DegreeMode::EntityEdges), 0u);
  EXPECT_EQ(degree(index, p, y, Direction::Out, DegreeMode::AllAssertions), 0u);
}

TEST(Degrees, UnknownIdThrows) {
  DatasetIndex index = build_index({});
  TermPartition p = partition_terms(index);
  EXPECT_THROW(degree(index, p, 42, Direction::Out, DegreeMode::AllAssertions),
               UnknownTermError);
}

// Sum over out-degrees equals sum over in-degrees equals the number of
// inter-instance edges.
TEST(Degrees, EdgeSumInvariant) {
  synth::TaxonomyOptions opt;
  opt.classes = 20;
  opt.instances = 150;
  opt.entityEdges = 700;
  DatasetIndex index = build_index(synth::taxonomy_graph(17, opt));
  TermPartition p = partition_terms(index);
  DegreeVectors d = compute_degrees(index, p);

  uint64_t out_sum = 0, in_sum = 0, edges = 0;
  for (TermId id : p.instances) {
    out_sum += d.outEntity[id];
    in_sum += d.inEntity[id];
  }
  for (const auto& t : index.triples()) {
    if (!p.reserved_predicate(t.p) && p.instance(t.s) && p.instance(t.o)) ++edges;
  }
  EXPECT_EQ(out_sum, edges);
  EXPECT_EQ(in_sum, edges);
}

TEST(Snapshot, RoundTrip) {
  synth::TaxonomyOptions opt;
  opt.classes = 12;
  opt.instances = 60;
  DatasetIndex index = build_index(synth::taxonomy_graph(23, opt));

  const auto path = std::filesystem::temp_directory_path() / "kgprof_snapshot_test.kgidx";
  save_index_snapshot(index, path.string());
  DatasetIndex loaded = load_index_snapshot(path.string());
  std::filesystem::remove(path);

  ASSERT_EQ(loaded.triple_count(), index.triple_count());
  ASSERT_EQ(loaded.term_count(), index.term_count());
  for (TermId id = 0; id < index.term_count(); ++id) {
    EXPECT_EQ(loaded.dict().term(id), index.dict().term(id));
  }
  EXPECT_EQ(loaded.triples(), index.triples());
  EXPECT_EQ(loaded.label_predicates(), index.label_predicates());
}

TEST(Snapshot, RejectsGarbage) {
  const auto path = std::filesystem::temp_directory_path() / "kgprof_snapshot_garbage.bin";
  {
    std::ofstream out(path, std::ios::binary);
    out << "not a snapshot at all";
  }
  EXPECT_THROW(load_index_snapshot(path.string()), SnapshotError);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace kgprof
