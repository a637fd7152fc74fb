// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>

#include "kgprof/dataset_index.hpp"

namespace kgprof {

// Binary index snapshot. Internal format, versioned:
//   magic "KGPX", u32 version, u64 termCount, u64 tripleCount,
//   u32 labelPredicateCount, label predicate IRIs (u32 len + bytes),
//   terms in id order (u8 kind, then lexical/datatype/lang as len+bytes),
//   triples as 3 x u32.
// Adjacency is rebuilt on load.
inline constexpr uint32_t kSnapshotMagic = 0x5847504Bu;  // "KGPX" little-endian
inline constexpr uint32_t kSnapshotVersion = 1;

class SnapshotError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace snapshot_detail {

template <typename T>
void write_pod(std::ostream& out, T v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(v));
}

template <typename T>
T read_pod(std::istream& in) {
  T v{};
  in.read(reinterpret_cast<char*>(&v), sizeof(v));
  if (!in) throw SnapshotError("truncated snapshot");
  return v;
}

inline void write_str(std::ostream& out, const std::string& s) {
  write_pod<uint32_t>(out, static_cast<uint32_t>(s.size()));
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

inline std::string read_str(std::istream& in) {
  uint32_t len = read_pod<uint32_t>(in);
  std::string s(len, '\0');
  in.read(s.data(), len);
  if (!in) throw SnapshotError("truncated snapshot");
  return s;
}

}  // namespace snapshot_detail

inline void save_index_snapshot(const DatasetIndex& index, const std::string& path) {
  using namespace snapshot_detail;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw SnapshotError("cannot write " + path);
  write_pod<uint32_t>(out, kSnapshotMagic);
  write_pod<uint32_t>(out, kSnapshotVersion);
  write_pod<uint64_t>(out, index.term_count());
  write_pod<uint64_t>(out, index.triple_count());
  write_pod<uint32_t>(out, static_cast<uint32_t>(index.label_predicates().size()));
  for (const auto& iri : index.label_predicates()) write_str(out, iri);
  for (TermId id = 0; id < index.term_count(); ++id) {
    const Term& t = index.dict().term(id);
    write_pod<uint8_t>(out, static_cast<uint8_t>(t.kind));
    write_str(out, t.lexical);
    write_str(out, t.datatype);
    write_str(out, t.lang);
  }
  for (const auto& t : index.triples()) {
    write_pod<uint32_t>(out, t.s);
    write_pod<uint32_t>(out, t.p);
    write_pod<uint32_t>(out, t.o);
  }
  if (!out) throw SnapshotError("write failed for " + path);
}

inline DatasetIndex load_index_snapshot(const std::string& path) {
  using namespace snapshot_detail;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SnapshotError("cannot open " + path);
  if (read_pod<uint32_t>(in) != kSnapshotMagic) throw SnapshotError("not a snapshot: " + path);
  const uint32_t version = read_pod<uint32_t>(in);
  if (version != kSnapshotVersion) {
    throw SnapshotError("unsupported snapshot version " + std::to_string(version));
  }
  const uint64_t term_count = read_pod<uint64_t>(in);
  const uint64_t triple_count = read_pod<uint64_t>(in);
  const uint32_t label_count = read_pod<uint32_t>(in);

  IndexConfig config;
  config.labelPredicates.clear();
  for (uint32_t i = 0; i < label_count; ++i) config.labelPredicates.push_back(read_str(in));

  DatasetIndex index;
  index.config_ = std::move(config);
  for (uint64_t i = 0; i < term_count; ++i) {
    Term t;
    t.kind = static_cast<TermKind>(read_pod<uint8_t>(in));
    t.lexical = read_str(in);
    t.datatype = read_str(in);
    t.lang = read_str(in);
    TermId id = index.dict_.intern(std::move(t));
    if (id != i) throw SnapshotError("duplicate term in snapshot");
  }
  index.triples_.reserve(triple_count);
  for (uint64_t i = 0; i < triple_count; ++i) {
    EncodedTriple t;
    t.s = read_pod<uint32_t>(in);
    t.p = read_pod<uint32_t>(in);
    t.o = read_pod<uint32_t>(in);
    if (t.s >= term_count || t.p >= term_count || t.o >= term_count) {
      throw SnapshotError("term id out of range in snapshot");
    }
    index.triples_.push_back(t);
  }
  index.finalize();
  return index;
}

}  // namespace kgprof
