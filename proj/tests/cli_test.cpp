// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "kgprof/cli.hpp"
#include "support/synth.hpp"

#ifndef KGPROF_TEST_FIXTURES
#error "KGPROF_TEST_FIXTURES must point at the fixture directory"
#endif

namespace kgprof {
namespace {

namespace fs = std::filesystem;

const fs::path kFixtures = KGPROF_TEST_FIXTURES;

struct CliResult {
  int exit_code;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class TempDir {
 public:
  explicit TempDir(const std::string& tag)
      : path_(fs::temp_directory_path() / ("kgprof_cli_" + tag + "_" + std::to_string(counter_++))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

TEST(Cli, ProfilePrintsReportJson) {
  const auto r = run_cli({"profile", (kFixtures / "tiny.nt").string()});
  ASSERT_EQ(r.exit_code, cli::kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("graph"), "tiny");
  EXPECT_EQ(j.at("profile").at("instances").get<uint64_t>(), 5u);
  EXPECT_EQ(j.at("profile").at("classes").get<uint64_t>(), 6u);
  EXPECT_EQ(j.at("profile").at("ontologyComplexity"), "SD");
  EXPECT_EQ(j.at("parse").at("triplesEmitted").get<uint64_t>(), 21u);
  EXPECT_EQ(j.at("parse").at("linesSkipped").get<uint64_t>(), 0u);
}

TEST(Cli, MissingSubcommandIsUsageError) {
  const auto r = run_cli({});
  EXPECT_EQ(r.exit_code, cli::kExitUsage);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
}

TEST(Cli, UnknownOptionIsUsageError) {
  const auto r = run_cli({"profile", "--definitely-not-an-option"});
  EXPECT_EQ(r.exit_code, cli::kExitUsage);
}

TEST(Cli, HelpExitsZero) {
  const auto r = run_cli({"--help"});
  EXPECT_EQ(r.exit_code, cli::kExitOk);
  EXPECT_NE(r.out.find("profile"), std::string::npos);
}

TEST(Cli, MissingFileIsDataError) {
  const auto r = run_cli({"profile", "/nonexistent/nope.nt"});
  EXPECT_EQ(r.exit_code, cli::kExitData);
}

TEST(Cli, StrictParseFailureIsDataError) {
  TempDir dir("strict");
  synth::write_text(dir.path() / "bad.nt", "this is junk\n");
  const auto r = run_cli({"profile", (dir.path() / "bad.nt").string(), "--strict"});
  EXPECT_EQ(r.exit_code, cli::kExitData);
  EXPECT_NE(r.err.find("parse error"), std::string::npos);
}

TEST(Cli, ClassesTableWithMapping) {
  const auto r = run_cli({"classes", (kFixtures / "tiny.nt").string(), "--mapping",
                          (kFixtures / "mapping.json").string()});
  ASSERT_EQ(r.exit_code, cli::kExitOk) << r.err;
  const json j = json::parse(r.out);
  ASSERT_EQ(j.at("classes").size(), 3u);
  // alphabetical over canonical names: Museum (absent), Person, Place
  EXPECT_EQ(j.at("classes")[0].at("class"), "Museum");
  EXPECT_TRUE(j.at("classes")[0].at("absent").get<bool>());
  EXPECT_EQ(j.at("classes")[1].at("class"), "Person");
  EXPECT_EQ(j.at("classes")[1].at("instances").get<uint64_t>(), 2u);
  EXPECT_EQ(j.at("classes")[2].at("class"), "Place");
  EXPECT_EQ(j.at("classes")[2].at("instances").get<uint64_t>(), 2u);
}

TEST(Cli, StrictMappingUnknownIriFails) {
  const auto r = run_cli({"classes", (kFixtures / "museum_a.nt").string(), "--mapping",
                          (kFixtures / "mapping.json").string(), "--graph-label", "tiny",
                          "--strict-mapping"});
  EXPECT_EQ(r.exit_code, cli::kExitData);
}

TEST(Cli, SunburstDepthAndTopK) {
  const auto r = run_cli({"sunburst", (kFixtures / "tiny.nt").string(), "--depth", "2",
                          "--top-k", "1"});
  ASSERT_EQ(r.exit_code, cli::kExitOk) << r.err;
  const json j = json::parse(r.out);
  const json& root = j.at("sunburst");
  EXPECT_EQ(root.at("count").get<uint64_t>(), 5u);
  ASSERT_TRUE(root.contains("children"));
  EXPECT_LE(root.at("children").size(), 2u);  // top-1 plus possibly "other"
}

TEST(Cli, EstimateEmitsSixteenRowsByDefault) {
  const auto r = run_cli({"estimate", (kFixtures / "museum_a.nt").string(),
                          (kFixtures / "museum_b.nt").string(), "--gold",
                          (kFixtures / "gold_ab.nt").string()});
  ASSERT_EQ(r.exit_code, cli::kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("heuristics").size(), 16u);
  EXPECT_EQ(j.at("goldLinks").get<uint64_t>(), 3u);
  EXPECT_EQ(j.at("sizeA").get<uint64_t>(), 6u);
  EXPECT_EQ(j.at("sizeB").get<uint64_t>(), 5u);
  // equality finds Louvre and Rijksmuseum, both gold -> P=1, R=2/3, F=2
  const json& eq = j.at("heuristics")[0];
  EXPECT_EQ(eq.at("measure"), "equality");
  EXPECT_EQ(eq.at("links").get<uint64_t>(), 2u);
  EXPECT_DOUBLE_EQ(eq.at("precision").get<double>(), 1.0);
  EXPECT_NEAR(eq.at("recall").get<double>(), 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(eq.at("estimate").get<double>(), 3.0, 1e-9);
}

TEST(Cli, EstimateWithCustomGrid) {
  const auto r = run_cli({"estimate", (kFixtures / "museum_a.nt").string(),
                          (kFixtures / "museum_b.nt").string(), "--gold",
                          (kFixtures / "gold_ab.nt").string(), "--grid",
                          (kFixtures / "grid.json").string()});
  ASSERT_EQ(r.exit_code, cli::kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("heuristics").size(), 3u);
}

TEST(Cli, LinkWritesCsv) {
  TempDir dir("link");
  const auto r = run_cli({"link", (kFixtures / "museum_a.nt").string(),
                          (kFixtures / "museum_b.nt").string(), "--grid",
                          (kFixtures / "grid.json").string(), "--out", dir.path().string()});
  ASSERT_EQ(r.exit_code, cli::kExitOk) << r.err;
  const std::string csv = slurp(dir.path() / "links_museum_a__museum_b.csv");
  EXPECT_NE(csv.find("entityA,entityB,score,measure,threshold"), std::string::npos);
  // IRIs, not labels: the Louvre pair appears by its identifiers
  EXPECT_NE(csv.find("http://a.museums.example.org/m/1,http://b.museums.example.org/x/10"),
            std::string::npos);
  EXPECT_NE(csv.find("equality"), std::string::npos);
}

TEST(Cli, ProfileSnapshotRoundTrip) {
  TempDir dir("snap");
  const fs::path dump = dir.path() / "tiny.nt";
  fs::copy_file(kFixtures / "tiny.nt", dump);
  const auto first = run_cli({"profile", dump.string(), "--snapshot"});
  ASSERT_EQ(first.exit_code, cli::kExitOk) << first.err;
  ASSERT_TRUE(fs::exists(dump.string() + ".kgidx"));
  const auto second = run_cli({"profile", dump.string(), "--snapshot"});
  ASSERT_EQ(second.exit_code, cli::kExitOk) << second.err;
  const json j1 = json::parse(first.out);
  const json j2 = json::parse(second.out);
  EXPECT_EQ(j1.at("profile"), j2.at("profile"));
  EXPECT_FALSE(j2.contains("parse"));  // loaded from snapshot, nothing parsed
}

TEST(Cli, MatrixNeedsDirectory) {
  const auto r = run_cli({"matrix", "whatever.json", "--out", "-"});
  EXPECT_EQ(r.exit_code, cli::kExitUsage);
}

TEST(Cli, EnvVarSetsDefaultOutputDirectory) {
  TempDir dir("envout");
  ::setenv("KGPROF_OUT", dir.path().c_str(), 1);
  const auto r = run_cli({"profile", (kFixtures / "tiny.nt").string()});
  ::unsetenv("KGPROF_OUT");
  ASSERT_EQ(r.exit_code, cli::kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  EXPECT_TRUE(fs::exists(dir.path() / "profile_tiny.json"));
}

TEST(Cli, ReportOnMiniCorpus) {
  TempDir corpus_dir("corpus");
  TempDir out_dir("out");
  const auto corpus = synth::write_mini_corpus(corpus_dir.path());
  const auto r = run_cli({"report", corpus.manifestPath.string(), "--out",
                          out_dir.path().string(), "--jobs", "2"});
  ASSERT_EQ(r.exit_code, cli::kExitOk) << r.err;

  for (const auto& label : corpus.graphLabels) {
    EXPECT_TRUE(fs::exists(out_dir.path() / ("profile_" + label + ".json"))) << label;
    EXPECT_TRUE(fs::exists(out_dir.path() / ("sunburst_" + label + ".json"))) << label;
    EXPECT_TRUE(fs::exists(out_dir.path() / ("classes_" + label + ".csv"))) << label;
  }
  EXPECT_TRUE(fs::exists(out_dir.path() / "estimate_g0__g1.json"));
  EXPECT_TRUE(fs::exists(out_dir.path() / "matrix_gain.csv"));
  EXPECT_TRUE(fs::exists(out_dir.path() / "matrix_completeness.svg"));

  const PairMatrix gain = matrix_from_csv(slurp(out_dir.path() / "matrix_gain.csv"));
  ASSERT_EQ(gain.size(), 8u);
  for (size_t i = 0; i < 8; ++i) {
    ASSERT_TRUE(gain.at(i, i).has_value());
    EXPECT_DOUBLE_EQ(*gain.at(i, i), 0.0);
  }
}

}  // namespace
}  // namespace kgprof
