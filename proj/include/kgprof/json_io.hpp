// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <nlohmann/json.hpp>

#include <fstream>
#include <string>
#include <vector>

#include "kgprof/class_detail.hpp"
#include "kgprof/heatmap.hpp"
#include "kgprof/metrics.hpp"
#include "kgprof/ntriples.hpp"
#include "kgprof/overlap.hpp"
#include "kgprof/similarity.hpp"
#include "kgprof/sunburst.hpp"

namespace kgprof {

using json = nlohmann::ordered_json;

inline json to_json(const ParseReport& r) {
  return json{{"triplesEmitted", r.triplesEmitted},
              {"linesSkipped", r.linesSkipped},
              {"firstSkippedByteOffsets", r.firstSkippedOffsets}};
}

inline json to_json(const ProfileReport& r) {
  return json{{"instances", r.instanceCount},
              {"assertions", r.assertionCount},
              {"avgLinkingDegree", r.avgLinkingDegree},
              {"medianIngoingEdges", r.medianInDegree},
              {"medianOutgoingEdges", r.medianOutDegree},
              {"classes", r.classCount},
              {"relations", r.relationCount},
              {"avgDepthOfClassTree", r.avgDepth},
              {"avgBranchingFactorOfClassTree", r.avgBranching},
              {"ontologyComplexity", r.expressivity},
              {"dualTypedTerms", r.dualTypedCount}};
}

inline json to_json(const ClassDetail& d) {
  json j{{"class", d.canonicalName}, {"absent", d.absent}};
  if (!d.absent) {
    j["instances"] = d.instanceCount;
    j["avgDegree"] = d.avgDegree;
    j["medianIn"] = d.medianIn;
    j["medianOut"] = d.medianOut;
  }
  return j;
}

inline json to_json(const std::vector<ClassDetail>& table) {
  json rows = json::array();
  for (const auto& d : table) rows.push_back(to_json(d));
  return json{{"classes", rows}};
}

// Table-style CSV: class,instances,avgDegree,medianIn,medianOut with "-" for
// absent classes.
inline std::string class_details_to_csv(const std::vector<ClassDetail>& table) {
  std::string out = "class,instances,avgDegree,medianIn,medianOut\n";
  char buf[64];
  for (const auto& d : table) {
    out += heatmap_detail::csv_field(d.canonicalName);
    if (d.absent) {
      out += ",-,-,-,-\n";
      continue;
    }
    std::snprintf(buf, sizeof(buf), ",%llu,%.2f,%llu,%llu\n",
                  static_cast<unsigned long long>(d.instanceCount), d.avgDegree,
                  static_cast<unsigned long long>(d.medianIn),
                  static_cast<unsigned long long>(d.medianOut));
    out += buf;
  }
  return out;
}

inline json to_json(const SunburstNode& node) {
  json j{{"label", node.label}, {"count", node.count}};
  if (!node.classIri.empty()) j["class"] = node.classIri;
  if (node.childOverlap) j["childOverlap"] = true;
  if (!node.children.empty()) {
    json children = json::array();
    for (const auto& c : node.children) children.push_back(to_json(c));
    j["children"] = std::move(children);
  }
  return j;
}

inline json to_json(const HeuristicConfig& c) {
  return json{{"measure", measure_name(c.measure)}, {"threshold", c.threshold}};
}

inline json to_json(const HeuristicEvaluation& ev) {
  json j{{"measure", measure_name(ev.heuristic.measure)},
         {"threshold", ev.heuristic.threshold},
         {"links", ev.sizeF}};
  j["precision"] = ev.precision ? json(*ev.precision) : json(nullptr);
  j["recall"] = ev.recall ? json(*ev.recall) : json(nullptr);
  j["estimate"] = ev.estimate ? json(*ev.estimate) : json(nullptr);
  if (ev.excluded()) j["excluded"] = ev.exclusionReason;
  return j;
}

inline json to_json(const OverlapEstimate& est) {
  json per = json::array();
  for (const auto& ev : est.perHeuristic) per.push_back(to_json(ev));
  json j{{"sizeA", est.sizeA},
         {"sizeB", est.sizeB},
         {"goldLinks", est.goldSize},
         {"heuristics", std::move(per)}};
  j["estimatedOverlap"] = est.aggregate ? json(*est.aggregate) : json(nullptr);
  json stats;
  stats["gainFraction"] = est.stats.gainFraction ? json(*est.stats.gainFraction) : json(nullptr);
  stats["estimateToLargerRatio"] =
      est.stats.estimateToLargerRatio ? json(*est.stats.estimateToLargerRatio) : json(nullptr);
  stats["linkageCompleteness"] =
      est.stats.linkageCompleteness ? json(*est.stats.linkageCompleteness) : json(nullptr);
  stats["gainClamped"] = est.stats.gainClamped;
  j["pairStatistics"] = std::move(stats);
  return j;
}

// Heuristic grid file: [{"measure": "...", "threshold": x}, ...]
inline std::vector<HeuristicConfig> grid_from_json(const json& j) {
  std::vector<HeuristicConfig> grid;
  for (const auto& entry : j) {
    grid.push_back({parse_measure(entry.at("measure").get<std::string>()),
                    entry.at("threshold").get<double>()});
  }
  if (grid.empty()) throw std::runtime_error("heuristic grid is empty");
  return grid;
}

// Class mapping file: {"Person": {"graphLabel": ["iri", ...], ...}, ...}
inline ClassMapping class_mapping_from_json(const json& j) {
  ClassMapping mapping;
  for (const auto& [name, perGraph] : j.items()) {
    for (const auto& [graph, iris] : perGraph.items()) {
      mapping.entries[name][graph] = iris.get<std::vector<std::string>>();
    }
  }
  return mapping;
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

}  // namespace kgprof
