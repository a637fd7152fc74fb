// SPDX-License-Identifier: Apache-2.0
//
// Ingests and indexes one dump, then exits; the parent process reads the
// child's peak RSS. Used by the throughput/memory acceptance check.
#include <chrono>
#include <cstdio>

#include "kgprof/dataset_index.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: index_probe <file.nt>\n");
    return 2;
  }
  const auto start = std::chrono::steady_clock::now();
  kgprof::ParseReport report;
  kgprof::DatasetIndex index = kgprof::index_file(argv[1], {}, &report);
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  std::printf("triples=%llu terms=%zu skipped=%llu millis=%lld\n",
              static_cast<unsigned long long>(index.triple_count()), index.term_count(),
              static_cast<unsigned long long>(report.linesSkipped),
              static_cast<long long>(elapsed.count()));
  return 0;
}
