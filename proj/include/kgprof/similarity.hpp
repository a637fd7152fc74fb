// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kgprof/normalize.hpp"

namespace kgprof {

enum class Measure : uint8_t {
  Equality,
  ScaledLevenshtein,
  Jaccard,
  Jaro,
  JaroWinkler,
  MongeElkan,
};
inline constexpr size_t kMeasureCount = 6;

inline std::string_view measure_name(Measure m) {
  switch (m) {
    case Measure::Equality: return "equality";
    case Measure::ScaledLevenshtein: return "scaledLevenshtein";
    case Measure::Jaccard: return "jaccard";
    case Measure::Jaro: return "jaro";
    case Measure::JaroWinkler: return "jaroWinkler";
    case Measure::MongeElkan: return "mongeElkan";
  }
  return "?";
}

inline Measure parse_measure(std::string_view name) {
  for (size_t i = 0; i < kMeasureCount; ++i) {
    Measure m = static_cast<Measure>(i);
    if (measure_name(m) == name) return m;
  }
  throw std::invalid_argument("unknown similarity measure: " + std::string(name));
}

struct HeuristicConfig {
  Measure measure;
  double threshold;
  bool operator==(const HeuristicConfig&) const = default;
};

// The default 16-configuration grid: string equality, scaled Levenshtein at
// {0.8, 0.9, 1.0}, Jaccard at {0.6, 0.8, 1.0}, and Jaro, Jaro-Winkler, and
// Monge-Elkan at {0.9, 0.95, 1.0}.
inline std::vector<HeuristicConfig> default_grid() {
  std::vector<HeuristicConfig> grid;
  grid.push_back({Measure::Equality, 1.0});
  for (double t : {0.8, 0.9, 1.0}) grid.push_back({Measure::ScaledLevenshtein, t});
  for (double t : {0.6, 0.8, 1.0}) grid.push_back({Measure::Jaccard, t});
  for (double t : {0.9, 0.95, 1.0}) grid.push_back({Measure::Jaro, t});
  for (double t : {0.9, 0.95, 1.0}) grid.push_back({Measure::JaroWinkler, t});
  for (double t : {0.9, 0.95, 1.0}) grid.push_back({Measure::MongeElkan, t});
  return grid;
}

// A label pre-decoded for repeated comparisons.
struct PreparedLabel {
  std::string text;                      // normalized UTF-8
  std::u32string codePoints;
  std::vector<std::string> tokens;       // sorted unique, for Jaccard
  std::vector<std::u32string> tokenCps;  // in label order, for Monge-Elkan

  static PreparedLabel from_normalized(std::string normalized) {
    PreparedLabel l;
    l.text = std::move(normalized);
    l.codePoints = to_code_points(l.text);
    auto toks = tokenize(l.text);
    l.tokenCps.reserve(toks.size());
    for (const auto& t : toks) l.tokenCps.push_back(to_code_points(t));
    std::sort(toks.begin(), toks.end());
    toks.erase(std::unique(toks.begin(), toks.end()), toks.end());
    l.tokens = std::move(toks);
    return l;
  }
};

namespace sim_detail {

inline size_t levenshtein(const std::u32string& a, const std::u32string& b) {
  const size_t n = a.size(), m = b.size();
  if (n == 0) return m;
  if (m == 0) return n;
  std::vector<size_t> prev(m + 1), cur(m + 1);
  for (size_t j = 0; j <= m; ++j) prev[j] = j;
  for (size_t i = 1; i <= n; ++i) {
    cur[0] = i;
    for (size_t j = 1; j <= m; ++j) {
      size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

inline double jaro(const std::u32string& a, const std::u32string& b) {
  const size_t n = a.size(), m = b.size();
  if (n == 0 && m == 0) return 1.0;
  if (n == 0 || m == 0) return 0.0;
  const size_t window = std::max(n, m) / 2 == 0 ? 0 : std::max(n, m) / 2 - 1;
  std::vector<bool> a_match(n, false), b_match(m, false);
  size_t matches = 0;
  for (size_t i = 0; i < n; ++i) {
    const size_t lo = i > window ? i - window : 0;
    const size_t hi = std::min(m, i + window + 1);
    for (size_t j = lo; j < hi; ++j) {
      if (!b_match[j] && a[i] == b[j]) {
        a_match[i] = true;
        b_match[j] = true;
        ++matches;
        break;
      }
    }
  }
  if (matches == 0) return 0.0;
  size_t transpositions = 0;
  size_t j = 0;
  for (size_t i = 0; i < n; ++i) {
    if (!a_match[i]) continue;
    while (!b_match[j]) ++j;
    if (a[i] != b[j]) ++transpositions;
    ++j;
  }
  const double md = static_cast<double>(matches);
  return (md / n + md / m + (md - transpositions / 2.0) / md) / 3.0;
}

inline double jaro_winkler(const std::u32string& a, const std::u32string& b) {
  double j = jaro(a, b);
  if (j <= 0.7) return j;  // classic boost threshold
  size_t prefix = 0;
  const size_t limit = std::min({a.size(), b.size(), size_t{4}});
  while (prefix < limit && a[prefix] == b[prefix]) ++prefix;
  return j + static_cast<double>(prefix) * 0.1 * (1.0 - j);
}

// Directed Monge-Elkan: mean over tokens of `a` of the best inner score
// against tokens of `b`.
inline double monge_elkan_directed(const std::vector<std::u32string>& a,
                                   const std::vector<std::u32string>& b) {
  double sum = 0.0;
  for (const auto& ta : a) {
    double best = 0.0;
    for (const auto& tb : b) best = std::max(best, jaro_winkler(ta, tb));
    sum += best;
  }
  return sum / static_cast<double>(a.size());
}

}  // namespace sim_detail

// All measures are total on all pairs, symmetric, and land in [0, 1] with
// similarity(x, x) == 1.
inline double similarity(Measure m, const PreparedLabel& a, const PreparedLabel& b) {
  switch (m) {
    case Measure::Equality:
      return a.text == b.text ? 1.0 : 0.0;
    case Measure::ScaledLevenshtein: {
      const size_t n = std::max(a.codePoints.size(), b.codePoints.size());
      if (n == 0) return 1.0;
      return 1.0 - static_cast<double>(sim_detail::levenshtein(a.codePoints, b.codePoints)) /
                       static_cast<double>(n);
    }
    case Measure::Jaccard: {
      if (a.tokens.empty() && b.tokens.empty()) return 1.0;
      if (a.tokens.empty() || b.tokens.empty()) return 0.0;
      size_t common = 0;
      size_t i = 0, j = 0;
      while (i < a.tokens.size() && j < b.tokens.size()) {
        const int cmp = a.tokens[i].compare(b.tokens[j]);
        if (cmp == 0) {
          ++common;
          ++i;
          ++j;
        } else if (cmp < 0) {
          ++i;
        } else {
          ++j;
        }
      }
      const size_t unions = a.tokens.size() + b.tokens.size() - common;
      return static_cast<double>(common) / static_cast<double>(unions);
    }
    case Measure::Jaro:
      return sim_detail::jaro(a.codePoints, b.codePoints);
    case Measure::JaroWinkler:
      return sim_detail::jaro_winkler(a.codePoints, b.codePoints);
    case Measure::MongeElkan: {
      if (a.tokenCps.empty() && b.tokenCps.empty()) return 1.0;
      if (a.tokenCps.empty() || b.tokenCps.empty()) return 0.0;
      return std::max(sim_detail::monge_elkan_directed(a.tokenCps, b.tokenCps),
                      sim_detail::monge_elkan_directed(b.tokenCps, a.tokenCps));
    }
  }
  return 0.0;
}

// Convenience over raw strings; normalizes both sides first.
inline double similarity(Measure m, std::string_view a, std::string_view b) {
  return similarity(m, PreparedLabel::from_normalized(normalize_label(a)),
                    PreparedLabel::from_normalized(normalize_label(b)));
}

}  // namespace kgprof
