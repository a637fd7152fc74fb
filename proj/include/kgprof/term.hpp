// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <string_view>
#include <utility>

namespace kgprof {

enum class TermKind : uint8_t { Iri, BlankNode, Literal };

// One RDF term. For literals, at most one of `datatype` / `lang` is set;
// `lexical` always holds the unescaped value.
struct Term {
  TermKind kind = TermKind::Iri;
  std::string lexical;
  std::string datatype;  // empty means none
  std::string lang;      // empty means none

  static Term iri(std::string value) {
    return Term{TermKind::Iri, std::move(value), {}, {}};
  }
  static Term blank(std::string label) {
    return Term{TermKind::BlankNode, std::move(label), {}, {}};
  }
  static Term literal(std::string value, std::string datatype = {}, std::string lang = {}) {
    return Term{TermKind::Literal, std::move(value), std::move(datatype), std::move(lang)};
  }

  bool is_iri() const { return kind == TermKind::Iri; }
  bool is_blank() const { return kind == TermKind::BlankNode; }
  bool is_literal() const { return kind == TermKind::Literal; }

  bool operator==(const Term&) const = default;
  auto operator<=>(const Term&) const = default;
};

struct TripleRecord {
  Term subject;
  Term predicate;
  Term object;

  bool operator==(const TripleRecord&) const = default;
  auto operator<=>(const TripleRecord&) const = default;
};

namespace detail {

inline void hash_combine(size_t& seed, size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

inline void append_escaped_literal(std::string& out, std::string_view s) {
  char buf[8];
  for (unsigned char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20) {
          std::snprintf(buf, sizeof(buf), "\\u%04X", c);
          out += buf;
        } else {
          out += static_cast<char>(c);
        }
    }
  }
}

inline void append_escaped_iri(std::string& out, std::string_view s) {
  char buf[8];
  for (unsigned char c : s) {
    // Characters a raw IRIREF may not contain; everything else verbatim.
    if (c <= 0x20 || c == '<' || c == '>' || c == '"' || c == '{' || c == '}' || c == '|' ||
        c == '^' || c == '`' || c == '\\') {
      std::snprintf(buf, sizeof(buf), "\\u%04X", c);
      out += buf;
    } else {
      out += static_cast<char>(c);
    }
  }
}

}  // namespace detail

// Canonical N-Triples form of one term.
inline std::string to_ntriples(const Term& t) {
  std::string out;
  switch (t.kind) {
    case TermKind::Iri:
      out += '<';
      detail::append_escaped_iri(out, t.lexical);
      out += '>';
      break;
    case TermKind::BlankNode:
      out += "_:";
      out += t.lexical;
      break;
    case TermKind::Literal:
      out += '"';
      detail::append_escaped_literal(out, t.lexical);
      out += '"';
      if (!t.lang.empty()) {
        out += '@';
        out += t.lang;
      } else if (!t.datatype.empty()) {
        out += "^^<";
        detail::append_escaped_iri(out, t.datatype);
        out += '>';
      }
      break;
  }
  return out;
}

// Canonical N-Triples line (without newline).
inline std::string to_ntriples(const TripleRecord& t) {
  std::string out = to_ntriples(t.subject);
  out += ' ';
  out += to_ntriples(t.predicate);
  out += ' ';
  out += to_ntriples(t.object);
  out += " .";
  return out;
}

struct TermHash {
  size_t operator()(const Term& t) const {
    size_t seed = static_cast<size_t>(t.kind);
    detail::hash_combine(seed, std::hash<std::string>{}(t.lexical));
    detail::hash_combine(seed, std::hash<std::string>{}(t.datatype));
    detail::hash_combine(seed, std::hash<std::string>{}(t.lang));
    return seed;
  }
};

}  // namespace kgprof
