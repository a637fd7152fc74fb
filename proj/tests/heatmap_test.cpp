// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "kgprof/heatmap.hpp"

namespace kgprof {
namespace {

TEST(Heatmap, SingleLightCell) {
  PairMatrix m({"g0"});
  m.at(0, 0) = 0.0;
  const std::string svg = matrix_to_svg(m);
  EXPECT_NE(svg.find("#f2f7fc"), std::string::npos);  // value 0 renders light
  EXPECT_NE(svg.find("0.0000"), std::string::npos);
  EXPECT_EQ(svg.find("url(#undef)"), std::string::npos);
}

TEST(Heatmap, CsvRoundTrip) {
  PairMatrix m({"alpha", "beta", "gamma"});
  for (size_t i = 0; i < 3; ++i) m.at(i, i) = 1.0;
  m.at(0, 1) = 0.1234;
  m.at(1, 0) = 0.1234;
  m.at(0, 2) = 0.5;  // (2,0) left undefined on purpose
  const std::string csv = matrix_to_csv(m);
  const PairMatrix back = matrix_from_csv(csv);
  ASSERT_EQ(back.labels, m.labels);
  for (size_t r = 0; r < 3; ++r) {
    for (size_t c = 0; c < 3; ++c) {
      ASSERT_EQ(back.at(r, c).has_value(), m.at(r, c).has_value()) << r << "," << c;
      if (m.at(r, c)) EXPECT_NEAR(*back.at(r, c), *m.at(r, c), 1e-9);
    }
  }
}

TEST(Heatmap, CsvQuotesAwkwardLabels) {
  PairMatrix m({"a,b", "plain"});
  m.at(0, 0) = 0.0;
  m.at(1, 1) = 1.0;
  const std::string csv = matrix_to_csv(m);
  EXPECT_NE(csv.find("\"a,b\""), std::string::npos);
  const PairMatrix back = matrix_from_csv(csv);
  EXPECT_EQ(back.labels[0], "a,b");
}

TEST(Heatmap, EightByEightRendersAllCells) {
  std::vector<std::string> labels;
  for (int i = 0; i < 8; ++i) labels.push_back("g" + std::to_string(i));
  PairMatrix m(labels);
  for (size_t r = 0; r < 8; ++r) {
    for (size_t c = 0; c < 8; ++c) m.at(r, c) = static_cast<double>(r * 8 + c) / 63.0;
  }
  const std::string svg = matrix_to_svg(m, "test");
  size_t rects = 0, pos = 0;
  while ((pos = svg.find("<rect", pos)) != std::string::npos) {
    ++rects;
    pos += 5;
  }
  EXPECT_EQ(rects, 65u);  // 64 cells + 1 pattern backing rect
  size_t texts = 0;
  pos = 0;
  while ((pos = svg.find("<text", pos)) != std::string::npos) {
    ++texts;
    pos += 5;
  }
  EXPECT_EQ(texts, 1u + 8u + 8u + 64u);  // title + row labels + column labels + values
}

TEST(Heatmap, UndefinedCellsHatchedAndEmpty) {
  PairMatrix m({"a", "b"});
  m.at(0, 0) = 1.0;
  m.at(1, 1) = 1.0;
  const std::string svg = matrix_to_svg(m);
  EXPECT_NE(svg.find("url(#undef)"), std::string::npos);
  const std::string csv = matrix_to_csv(m);
  EXPECT_NE(csv.find("a,1.0000,\n"), std::string::npos);
}

}  // namespace
}  // namespace kgprof
