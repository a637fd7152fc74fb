// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kgprof/class_detail.hpp"
#include "kgprof/gold_links.hpp"
#include "kgprof/heatmap.hpp"
#include "kgprof/json_io.hpp"
#include "kgprof/labels.hpp"
#include "kgprof/linker.hpp"
#include "kgprof/manifest.hpp"
#include "kgprof/metrics.hpp"
#include "kgprof/overlap.hpp"
#include "kgprof/parallel.hpp"
#include "kgprof/snapshot.hpp"
#include "kgprof/sunburst.hpp"

namespace kgprof::cli {

// Exit codes: 0 success, 1 usage error, 2 data error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace cli_detail {

namespace fs = std::filesystem;

inline std::string graph_label_from_path(const std::string& path) {
  std::string name = fs::path(path).filename().string();
  for (std::string_view ext : {".gz", ".nt", ".ttl", ".kgidx"}) {
    if (name.size() > ext.size() && name.ends_with(ext)) {
      name.resize(name.size() - ext.size());
    }
  }
  return name.empty() ? std::string("graph") : name;
}

inline std::string safe_filename(const std::string& label) {
  std::string out;
  for (char c : label) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                    c == '.' || c == '_' || c == '-';
    out += ok ? c : '_';
  }
  return out.empty() ? std::string("graph") : out;
}

inline void write_file(const fs::path& path, const std::string& content) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw DataError("write failed for " + path.string());
}

inline std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

// Where a command's outputs go: "-" is standard output (single-document
// commands only), anything else is a directory.
struct OutputTarget {
  std::string spec;  // "-" or directory path
  std::ostream* stream = nullptr;

  bool to_stdout() const { return spec == "-"; }

  void emit(const std::string& filename, const std::string& content) const {
    if (to_stdout()) {
      *stream << content;
    } else {
      write_file(fs::path(spec) / filename, content);
    }
  }
};

inline std::string default_out(bool multi_file) {
  if (const char* env = std::getenv("KGPROF_OUT"); env && *env) return env;
  return multi_file ? std::string("./kgprof-out") : std::string("-");
}

struct LoadedGraph {
  std::string label;
  DatasetIndex index;
  TermPartition partition;
  ClassHierarchy hierarchy;
  ParseReport parse;
  LabelMap labels;
};

inline LoadedGraph load_graph(const std::string& label, const std::string& dump,
                              const std::vector<std::string>& labelPredicates, bool strict,
                              bool withLabels) {
  LoadedGraph g;
  g.label = label;
  IndexConfig config;
  if (!labelPredicates.empty()) config.labelPredicates = labelPredicates;
  g.index = index_file(dump, std::move(config), &g.parse,
                       strict ? Strictness::Strict : Strictness::Tolerant);
  g.partition = partition_terms(g.index);
  g.hierarchy = build_hierarchy(g.index, g.partition);
  if (withLabels) g.labels = extract_labels(g.index, g.partition);
  return g;
}

inline std::vector<HeuristicConfig> load_grid(const std::optional<std::string>& path) {
  if (!path) return default_grid();
  return grid_from_json(load_json_file(*path));
}

inline std::string fmt_double(double v, const char* spec) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

inline std::string links_to_csv(const std::vector<CandidateLinkSet>& sets,
                                const DatasetIndex& indexA, const DatasetIndex& indexB) {
  std::string out = "entityA,entityB,score,measure,threshold\n";
  for (const auto& set : sets) {
    const std::string measure(measure_name(set.heuristic.measure));
    const std::string threshold = fmt_double(set.heuristic.threshold, "%.6g");
    for (const auto& pr : set.pairs) {
      out += heatmap_detail::csv_field(indexA.dict().term(pr.entityA).lexical);
      out += ',';
      out += heatmap_detail::csv_field(indexB.dict().term(pr.entityB).lexical);
      out += ',';
      out += fmt_double(pr.score, "%.6f");
      out += ',';
      out += measure;
      out += ',';
      out += threshold;
      out += '\n';
    }
  }
  return out;
}

inline json estimate_to_json(const std::string& labelA, const std::string& labelB,
                             const OverlapEstimate& est) {
  json j{{"graphA", labelA}, {"graphB", labelB}};
  j.update(to_json(est));
  return j;
}

// Shared worker for `estimate` and the per-pair step of `matrix`/`report`.
inline OverlapEstimate run_estimate(const LoadedGraph& a, const LoadedGraph& b,
                                    const std::vector<std::string>& goldFiles,
                                    const std::vector<HeuristicConfig>& grid,
                                    const BlockingOptions& blocking, unsigned jobs) {
  const GoldLinkSet gold = load_gold_links(goldFiles, a.index, a.partition, b.index, b.partition);
  const auto links = match_grid(grid, a.labels, b.labels, blocking, jobs);
  return estimate_overlap(links, gold, a.partition.instances.size(),
                          b.partition.instances.size());
}

struct ManifestRun {
  std::vector<LoadedGraph> graphs;
  Manifest manifest;
  std::vector<HeuristicConfig> grid;
  // Estimates for every manifest gold pair, keyed by (indexA, indexB) into
  // graphs; absent pairs have no entry.
  std::vector<std::pair<std::pair<size_t, size_t>, OverlapEstimate>> estimates;
};

inline ManifestRun run_manifest_pipeline(const std::string& manifestPath, bool strict,
                                         const BlockingOptions& blocking, unsigned jobs) {
  ManifestRun run;
  run.manifest = load_manifest(manifestPath);
  run.grid = load_grid(run.manifest.grid);

  run.graphs.resize(run.manifest.graphs.size());
  parallel_for(run.manifest.graphs.size(), jobs, [&](size_t i) {
    const auto& g = run.manifest.graphs[i];
    run.graphs[i] = load_graph(g.label, g.dump, g.labelPredicates, strict, true);
  });

  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < run.graphs.size(); ++i) {
    for (size_t j = i + 1; j < run.graphs.size(); ++j) {
      if (run.manifest.gold_for(run.graphs[i].label, run.graphs[j].label)) {
        pairs.emplace_back(i, j);
      }
    }
  }
  run.estimates.resize(pairs.size());
  parallel_for(pairs.size(), 1, [&](size_t k) {
    // Pairs run sequentially; the grid scoring inside is already parallel.
    const auto [i, j] = pairs[k];
    const auto* entry = run.manifest.gold_for(run.graphs[i].label, run.graphs[j].label);
    // The manifest entry may name the pair in either order; orient the gold
    // files to (i, j).
    const bool forward = entry->a == run.graphs[i].label;
    const LoadedGraph& a = forward ? run.graphs[i] : run.graphs[j];
    const LoadedGraph& b = forward ? run.graphs[j] : run.graphs[i];
    OverlapEstimate est = run_estimate(a, b, entry->files, run.grid, blocking, jobs);
    run.estimates[k] = {{forward ? i : j, forward ? j : i}, std::move(est)};
  });
  return run;
}

enum class MatrixKind { Gain, Completeness };

inline PairMatrix build_matrix(const ManifestRun& run, MatrixKind kind) {
  std::vector<std::string> labels;
  for (const auto& g : run.graphs) labels.push_back(g.label);
  PairMatrix m(labels);
  for (size_t i = 0; i < labels.size(); ++i) {
    m.at(i, i) = kind == MatrixKind::Gain ? 0.0 : 1.0;
  }
  for (const auto& [key, est] : run.estimates) {
    const auto [i, j] = key;
    const auto& v =
        kind == MatrixKind::Gain ? est.stats.gainFraction : est.stats.linkageCompleteness;
    if (v) {
      m.at(i, j) = *v;
      m.at(j, i) = *v;
    }
  }
  return m;
}

}  // namespace cli_detail

// Entry point shared by the binary and the tests. `args` excludes argv[0].
inline int run(std::vector<std::string> args, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  using namespace cli_detail;

  CLI::App app{"knowledge-graph profiling and overlap estimation"};
  app.set_help_all_flag("--help-all");
  app.require_subcommand(1);

  // Common state
  std::string out_spec;
  bool strict = false;
  bool no_blocking = false;
  unsigned jobs = 1;
  size_t max_block = 4096;

  auto add_common = [&](CLI::App* cmd, bool matching) {
    cmd->add_option("--out", out_spec, "output directory, or '-' for stdout");
    cmd->add_flag("--strict", strict, "abort on the first malformed input line");
    if (matching) {
      cmd->add_flag("--no-blocking", no_blocking, "compare all label pairs (exact, quadratic)");
      cmd->add_option("--max-block", max_block, "token block cap per side before subsampling");
      cmd->add_option("--jobs", jobs, "worker threads for matching")->check(CLI::PositiveNumber);
    }
    return cmd;
  };

  // profile
  auto* profile_cmd = app.add_subcommand("profile", "profile one dump");
  std::string profile_dump;
  std::vector<std::string> label_preds;
  bool use_snapshot = false;
  profile_cmd->add_option("dump", profile_dump, "N-Triples file (optionally .gz)")->required();
  profile_cmd->add_option("--label-pred", label_preds, "label predicate IRI (repeatable)");
  profile_cmd->add_flag("--snapshot", use_snapshot,
                        "reuse <dump>.kgidx if present, else write it after ingest");
  add_common(profile_cmd, false);

  // classes
  auto* classes_cmd = app.add_subcommand("classes", "per-class detail statistics");
  std::string classes_dump, mapping_path, classes_label;
  bool strict_mapping = false;
  classes_cmd->add_option("dump", classes_dump, "N-Triples file")->required();
  classes_cmd->add_option("--mapping", mapping_path, "class mapping JSON")->required();
  classes_cmd->add_option("--graph-label", classes_label,
                          "mapping key for this graph (default: dump basename)");
  classes_cmd->add_option("--label-pred", label_preds, "label predicate IRI (repeatable)");
  classes_cmd->add_flag("--strict-mapping", strict_mapping,
                        "fail when a mapped IRI is unknown in the graph");
  add_common(classes_cmd, false);

  // sunburst
  auto* sunburst_cmd = app.add_subcommand("sunburst", "class-size hierarchy data");
  std::string sunburst_dump;
  size_t depth = 3, top_k = 12;
  sunburst_cmd->add_option("dump", sunburst_dump, "N-Triples file")->required();
  sunburst_cmd->add_option("--depth", depth, "maximum depth below the root");
  sunburst_cmd->add_option("--top-k", top_k, "children kept per node");
  sunburst_cmd->add_option("--label-pred", label_preds, "label predicate IRI (repeatable)");
  add_common(sunburst_cmd, false);

  // link
  auto* link_cmd = app.add_subcommand("link", "candidate identity links between two dumps");
  std::string link_a, link_b, grid_path;
  link_cmd->add_option("dumpA", link_a, "first N-Triples file")->required();
  link_cmd->add_option("dumpB", link_b, "second N-Triples file")->required();
  link_cmd->add_option("--grid", grid_path, "heuristic grid JSON");
  link_cmd->add_option("--label-pred", label_preds, "label predicate IRI (repeatable)");
  add_common(link_cmd, true);

  // estimate
  auto* estimate_cmd = app.add_subcommand("estimate", "estimate true overlap of two dumps");
  std::string est_a, est_b;
  std::vector<std::string> gold_files;
  estimate_cmd->add_option("dumpA", est_a, "first N-Triples file")->required();
  estimate_cmd->add_option("dumpB", est_b, "second N-Triples file")->required();
  estimate_cmd->add_option("--gold", gold_files, "gold link files (.nt, .nt.gz, .csv)")
      ->required();
  estimate_cmd->add_option("--grid", grid_path, "heuristic grid JSON");
  estimate_cmd->add_option("--label-pred", label_preds, "label predicate IRI (repeatable)");
  add_common(estimate_cmd, true);

  // matrix
  auto* matrix_cmd = app.add_subcommand("matrix", "pairwise overlap matrices from a manifest");
  std::string manifest_path;
  matrix_cmd->add_option("manifest", manifest_path, "manifest JSON")->required();
  add_common(matrix_cmd, true);

  // report
  auto* report_cmd = app.add_subcommand("report", "full report from a manifest");
  report_cmd->add_option("manifest", manifest_path, "manifest JSON")->required();
  report_cmd->add_option("--depth", depth, "sunburst depth");
  report_cmd->add_option("--top-k", top_k, "sunburst children per node");
  add_common(report_cmd, true);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    err << app.help();
    return kExitUsage;
  }

  const bool multi_file = matrix_cmd->parsed() || report_cmd->parsed();
  OutputTarget target{out_spec.empty() ? default_out(multi_file) : out_spec, &out};
  if (multi_file && target.to_stdout()) {
    err << "matrix/report need an output directory (--out DIR)\n";
    return kExitUsage;
  }

  BlockingOptions blocking;
  blocking.enabled = !no_blocking;
  blocking.maxBlockSide = max_block;
  blocking.warn = [&err](const std::string& msg) { err << "warning: " << msg << "\n"; };

  try {
    if (profile_cmd->parsed()) {
      const std::string label = graph_label_from_path(profile_dump);
      json j{{"graph", label}};
      const std::string snap_path = profile_dump + ".kgidx";
      if (use_snapshot && fs::exists(snap_path)) {
        DatasetIndex index = load_index_snapshot(snap_path);
        j["profile"] = to_json(profile_graph(index));
        j["snapshot"] = snap_path;
      } else {
        LoadedGraph g = load_graph(label, profile_dump, label_preds, strict, false);
        if (use_snapshot) {
          save_index_snapshot(g.index, snap_path);
          j["snapshot"] = snap_path;
        }
        ProfileReport report;
        general_metrics(g.index, g.partition, report);
        schema_metrics(g.hierarchy, g.partition, report);
        report.expressivity = detect_expressivity(g.index);
        j["profile"] = to_json(report);
        j["parse"] = to_json(g.parse);
      }
      target.emit("profile_" + safe_filename(label) + ".json", dump_json(j));
    } else if (classes_cmd->parsed()) {
      const std::string label =
          classes_label.empty() ? graph_label_from_path(classes_dump) : classes_label;
      const ClassMapping mapping = class_mapping_from_json(load_json_file(mapping_path));
      LoadedGraph g = load_graph(label, classes_dump, label_preds, strict, false);
      std::vector<std::string> unresolved;
      const auto table =
          class_details_for_graph(g.index, g.partition, g.hierarchy, mapping, label, &unresolved);
      if (strict_mapping && !unresolved.empty()) {
        std::string msg = "unknown class IRIs for graph '" + label + "':";
        for (const auto& iri : unresolved) msg += " " + iri;
        throw DataError(msg);
      }
      for (const auto& iri : unresolved) {
        err << "warning: class IRI not in graph '" << label << "': " << iri << "\n";
      }
      json j{{"graph", label}};
      j.update(to_json(table));
      target.emit("classes_" + safe_filename(label) + ".json", dump_json(j));
      if (!target.to_stdout()) {
        target.emit("classes_" + safe_filename(label) + ".csv", class_details_to_csv(table));
      }
    } else if (sunburst_cmd->parsed()) {
      const std::string label = graph_label_from_path(sunburst_dump);
      LoadedGraph g = load_graph(label, sunburst_dump, label_preds, strict, false);
      const SunburstNode root = build_sunburst(g.index, g.partition, g.hierarchy, depth, top_k);
      json j{{"graph", label}};
      j["sunburst"] = to_json(root);
      target.emit("sunburst_" + safe_filename(label) + ".json", dump_json(j));
    } else if (link_cmd->parsed()) {
      const std::string label_a = graph_label_from_path(link_a);
      const std::string label_b = graph_label_from_path(link_b);
      const auto grid =
          load_grid(grid_path.empty() ? std::nullopt : std::optional<std::string>(grid_path));
      LoadedGraph a = load_graph(label_a, link_a, label_preds, strict, true);
      LoadedGraph b = load_graph(label_b, link_b, label_preds, strict, true);
      const auto links = match_grid(grid, a.labels, b.labels, blocking, jobs);
      target.emit("links_" + safe_filename(label_a) + "__" + safe_filename(label_b) + ".csv",
                  links_to_csv(links, a.index, b.index));
    } else if (estimate_cmd->parsed()) {
      const std::string label_a = graph_label_from_path(est_a);
      const std::string label_b = graph_label_from_path(est_b);
      const auto grid =
          load_grid(grid_path.empty() ? std::nullopt : std::optional<std::string>(grid_path));
      LoadedGraph a = load_graph(label_a, est_a, label_preds, strict, true);
      LoadedGraph b = load_graph(label_b, est_b, label_preds, strict, true);
      const OverlapEstimate est = run_estimate(a, b, gold_files, grid, blocking, jobs);
      target.emit("estimate_" + safe_filename(label_a) + "__" + safe_filename(label_b) + ".json",
                  dump_json(estimate_to_json(label_a, label_b, est)));
    } else if (matrix_cmd->parsed()) {
      const ManifestRun run = run_manifest_pipeline(manifest_path, strict, blocking, jobs);
      target.emit("matrix_gain.csv", matrix_to_csv(build_matrix(run, MatrixKind::Gain)));
      target.emit("matrix_gain.svg",
                  matrix_to_svg(build_matrix(run, MatrixKind::Gain), "potential gain"));
      target.emit("matrix_completeness.csv",
                  matrix_to_csv(build_matrix(run, MatrixKind::Completeness)));
      target.emit("matrix_completeness.svg",
                  matrix_to_svg(build_matrix(run, MatrixKind::Completeness), "linkage completeness"));
    } else if (report_cmd->parsed()) {
      const ManifestRun run = run_manifest_pipeline(manifest_path, strict, blocking, jobs);
      std::optional<ClassMapping> mapping;
      if (run.manifest.classMapping) {
        mapping = class_mapping_from_json(load_json_file(*run.manifest.classMapping));
      }
      for (const auto& g : run.graphs) {
        ProfileReport report;
        general_metrics(g.index, g.partition, report);
        schema_metrics(g.hierarchy, g.partition, report);
        report.expressivity = detect_expressivity(g.index);
        json pj{{"graph", g.label}};
        pj["profile"] = to_json(report);
        pj["parse"] = to_json(g.parse);
        target.emit("profile_" + safe_filename(g.label) + ".json", dump_json(pj));

        const SunburstNode root = build_sunburst(g.index, g.partition, g.hierarchy, depth, top_k);
        json sj{{"graph", g.label}};
        sj["sunburst"] = to_json(root);
        target.emit("sunburst_" + safe_filename(g.label) + ".json", dump_json(sj));

        if (mapping) {
          std::vector<std::string> unresolved;
          const auto table = class_details_for_graph(g.index, g.partition, g.hierarchy, *mapping,
                                                     g.label, &unresolved);
          for (const auto& iri : unresolved) {
            err << "warning: class IRI not in graph '" << g.label << "': " << iri << "\n";
          }
          json cj{{"graph", g.label}};
          cj.update(to_json(table));
          target.emit("classes_" + safe_filename(g.label) + ".json", dump_json(cj));
          target.emit("classes_" + safe_filename(g.label) + ".csv", class_details_to_csv(table));
        }
      }
      for (const auto& [key, est] : run.estimates) {
        const auto [i, j] = key;
        const std::string& la = run.graphs[i].label;
        const std::string& lb = run.graphs[j].label;
        target.emit("estimate_" + safe_filename(la) + "__" + safe_filename(lb) + ".json",
                    dump_json(estimate_to_json(la, lb, est)));
      }
      target.emit("matrix_gain.csv", matrix_to_csv(build_matrix(run, MatrixKind::Gain)));
      target.emit("matrix_gain.svg",
                  matrix_to_svg(build_matrix(run, MatrixKind::Gain), "potential gain"));
      target.emit("matrix_completeness.csv",
                  matrix_to_csv(build_matrix(run, MatrixKind::Completeness)));
      target.emit("matrix_completeness.svg",
                  matrix_to_svg(build_matrix(run, MatrixKind::Completeness), "linkage completeness"));
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << " (line " << e.line() << ", byte offset "
        << e.byte_offset() << ")\n";
    return kExitData;
  } catch (const CLI::Error& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitOk;
}

}  // namespace kgprof::cli
