// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "kgprof/json_io.hpp"

namespace kgprof {

// Declarative multi-graph run: graph labels and dumps, per-pair gold link
// files, optional class mapping and heuristic grid. Relative paths resolve
// against the manifest's own directory.
struct ManifestGraph {
  std::string label;
  std::string dump;
  std::vector<std::string> labelPredicates;  // empty -> rdfs:label
};

struct ManifestGoldEntry {
  std::string a;
  std::string b;
  std::vector<std::string> files;
};

struct Manifest {
  std::vector<ManifestGraph> graphs;
  std::vector<ManifestGoldEntry> gold;
  std::optional<std::string> classMapping;
  std::optional<std::string> grid;

  const ManifestGoldEntry* gold_for(const std::string& a, const std::string& b) const {
    for (const auto& e : gold) {
      if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) return &e;
    }
    return nullptr;
  }
};

inline Manifest load_manifest(const std::string& path) {
  namespace fs = std::filesystem;
  const json j = load_json_file(path);
  const fs::path base = fs::path(path).parent_path();
  auto resolve = [&](const std::string& p) {
    fs::path fp(p);
    return fp.is_absolute() ? fp.string() : (base / fp).string();
  };

  Manifest m;
  std::set<std::string> seen;
  for (const auto& g : j.at("graphs")) {
    ManifestGraph graph;
    graph.label = g.at("label").get<std::string>();
    graph.dump = resolve(g.at("dump").get<std::string>());
    if (g.contains("labelPredicates")) {
      graph.labelPredicates = g.at("labelPredicates").get<std::vector<std::string>>();
    }
    if (!seen.insert(graph.label).second) {
      throw std::runtime_error("duplicate graph label in manifest: " + graph.label);
    }
    m.graphs.push_back(std::move(graph));
  }
  if (j.contains("goldLinks")) {
    for (const auto& g : j.at("goldLinks")) {
      ManifestGoldEntry entry;
      entry.a = g.at("a").get<std::string>();
      entry.b = g.at("b").get<std::string>();
      for (const auto& f : g.at("files")) entry.files.push_back(resolve(f.get<std::string>()));
      if (!seen.count(entry.a) || !seen.count(entry.b)) {
        throw std::runtime_error("gold link entry references unknown graph label: " + entry.a +
                                 " / " + entry.b);
      }
      m.gold.push_back(std::move(entry));
    }
  }
  if (j.contains("classMapping")) m.classMapping = resolve(j.at("classMapping").get<std::string>());
  if (j.contains("grid")) m.grid = resolve(j.at("grid").get<std::string>());
  return m;
}

}  // namespace kgprof
