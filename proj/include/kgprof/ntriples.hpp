// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <fstream>
#include <functional>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kgprof/line_reader.hpp"
#include "kgprof/term.hpp"

namespace kgprof {

enum class Strictness { Strict, Tolerant };

struct ParseReport {
  uint64_t triplesEmitted = 0;
  uint64_t linesSkipped = 0;
  std::vector<uint64_t> firstSkippedOffsets;  // byte offsets of first 10 skipped lines

  void record_skip(uint64_t offset) {
    ++linesSkipped;
    if (firstSkippedOffsets.size() < 10) firstSkippedOffsets.push_back(offset);
  }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string msg, uint64_t line, uint64_t offset)
      : std::runtime_error(std::move(msg)), line_(line), offset_(offset) {}
  uint64_t line() const { return line_; }
  uint64_t byte_offset() const { return offset_; }

 private:
  uint64_t line_;
  uint64_t offset_;
};

namespace ntriples_detail {

inline bool is_ws(char c) { return c == ' ' || c == '\t'; }

inline void encode_utf8(uint32_t cp, std::string& out) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

// Validates UTF-8; replaces invalid sequences with U+FFFD when `replace` is
// set, otherwise reports failure.
inline bool sanitize_utf8(std::string& s, bool replace) {
  static constexpr std::string_view kRepl = "\xEF\xBF\xBD";
  std::string fixed;
  bool dirty = false;
  size_t i = 0;
  const size_t n = s.size();
  auto fail = [&](size_t bad_len) -> bool {
    if (!replace) return false;
    if (!dirty) {
      fixed.assign(s, 0, i);
      dirty = true;
    }
    fixed += kRepl;
    i += bad_len;
    return true;
  };
  while (i < n) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    size_t len;
    uint32_t cp;
    if (c < 0x80) {
      len = 1;
      cp = c;
    } else if ((c >> 5) == 0x6) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c >> 4) == 0xE) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c >> 3) == 0x1E) {
      len = 4;
      cp = c & 0x07;
    } else {
      if (!fail(1)) return false;
      continue;
    }
    if (i + len > n) {
      if (!fail(n - i)) return false;
      continue;
    }
    bool ok = true;
    for (size_t k = 1; k < len; ++k) {
      unsigned char cc = static_cast<unsigned char>(s[i + k]);
      if ((cc >> 6) != 0x2) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (cc & 0x3F);
    }
    if (ok) {
      // Overlongs, surrogates, out-of-range.
      if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000) ||
          (cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF)
        ok = false;
    }
    if (!ok) {
      if (!fail(1)) return false;
      continue;
    }
    if (dirty) fixed.append(s, i, len);
    i += len;
  }
  if (dirty) s = std::move(fixed);
  return true;
}

}  // namespace ntriples_detail

// Streaming N-Triples parser. One line, one triple; comment and blank lines
// pass silently. Tolerant mode counts and skips malformed lines, strict mode
// throws ParseError at the first one. \uXXXX / \UXXXXXXXX escapes are decoded
// in IRIs and literals; IRIs are otherwise taken verbatim.
class NTriplesParser {
 public:
  explicit NTriplesParser(std::istream& in, Strictness strictness = Strictness::Tolerant)
      : reader_(in), strictness_(strictness) {}

  // Pulls the next triple. Returns false at end of input.
  bool next(TripleRecord& out) {
    std::string line;
    uint64_t offset;
    while (reader_.next(line, offset)) {
      ++lineno_;
      size_t pos = 0;
      skip_ws(line, pos);
      if (pos == line.size() || line[pos] == '#') continue;
      if (!ntriples_detail::sanitize_utf8(line, strictness_ == Strictness::Tolerant)) {
        throw ParseError("invalid UTF-8", lineno_, offset);
      }
      std::string err;
      if (parse_line(line, pos, out, err)) {
        ++report_.triplesEmitted;
        return true;
      }
      if (strictness_ == Strictness::Strict) {
        throw ParseError(err + " at line " + std::to_string(lineno_), lineno_, offset + pos);
      }
      report_.record_skip(offset);
    }
    return false;
  }

  const ParseReport& report() const { return report_; }

 private:
  static void skip_ws(const std::string& s, size_t& pos) {
    while (pos < s.size() && ntriples_detail::is_ws(s[pos])) ++pos;
  }

  // Decodes \uXXXX and \UXXXXXXXX; `pos` sits on the backslash.
  static bool decode_unicode_escape(const std::string& s, size_t& pos, std::string& out) {
    size_t digits = (s[pos + 1] == 'u') ? 4 : 8;
    if (pos + 2 + digits > s.size()) return false;
    uint32_t cp = 0;
    for (size_t k = 0; k < digits; ++k) {
      char c = s[pos + 2 + k];
      uint32_t v;
      if (c >= '0' && c <= '9') v = static_cast<uint32_t>(c - '0');
      else if (c >= 'a' && c <= 'f') v = static_cast<uint32_t>(c - 'a' + 10);
      else if (c >= 'A' && c <= 'F') v = static_cast<uint32_t>(c - 'A' + 10);
      else return false;
      cp = (cp << 4) | v;
    }
    if (cp >= 0xD800 && cp <= 0xDFFF) return false;
    if (cp > 0x10FFFF) return false;
    ntriples_detail::encode_utf8(cp, out);
    pos += 2 + digits;
    return true;
  }

  static bool parse_iri(const std::string& s, size_t& pos, std::string& out, std::string& err) {
    // pos sits on '<'
    ++pos;
    out.clear();
    while (pos < s.size()) {
      char c = s[pos];
      if (c == '>') {
        ++pos;
        if (out.empty()) {
          err = "empty IRI";
          return false;
        }
        return true;
      }
      if (c == '\\') {
        if (pos + 1 < s.size() && (s[pos + 1] == 'u' || s[pos + 1] == 'U')) {
          if (!decode_unicode_escape(s, pos, out)) {
            err = "bad unicode escape in IRI";
            return false;
          }
          continue;
        }
        err = "backslash in IRI";
        return false;
      }
      if (static_cast<unsigned char>(c) <= 0x20 || c == '<' || c == '"' || c == '{' ||
          c == '}' || c == '|' || c == '^' || c == '`') {
        err = "illegal character in IRI";
        return false;
      }
      out += c;
      ++pos;
    }
    err = "unterminated IRI";
    return false;
  }

  static bool is_blank_char(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
           c == '_' || c == '-' || c == '.';
  }

  static bool parse_blank(const std::string& s, size_t& pos, std::string& out, std::string& err) {
    // pos sits on '_'
    if (pos + 1 >= s.size() || s[pos + 1] != ':') {
      err = "malformed blank node";
      return false;
    }
    pos += 2;
    out.clear();
    while (pos < s.size() && is_blank_char(s[pos])) {
      out += s[pos];
      ++pos;
    }
    // A label cannot end in '.'; trailing dots belong to the statement.
    while (!out.empty() && out.back() == '.') {
      out.pop_back();
      --pos;
    }
    if (out.empty() || out.front() == '.' || out.front() == '-') {
      err = "malformed blank node label";
      return false;
    }
    return true;
  }

  static bool parse_literal(const std::string& s, size_t& pos, Term& out, std::string& err) {
    // pos sits on opening quote
    ++pos;
    std::string value;
    while (true) {
      if (pos >= s.size()) {
        err = "unterminated literal";
        return false;
      }
      char c = s[pos];
      if (c == '"') {
        ++pos;
        break;
      }
      if (c == '\\') {
        if (pos + 1 >= s.size()) {
          err = "dangling escape";
          return false;
        }
        char e = s[pos + 1];
        switch (e) {
          case 't': value += '\t'; pos += 2; break;
          case 'b': value += '\b'; pos += 2; break;
          case 'n': value += '\n'; pos += 2; break;
          case 'r': value += '\r'; pos += 2; break;
          case 'f': value += '\f'; pos += 2; break;
          case '"': value += '"'; pos += 2; break;
          case '\'': value += '\''; pos += 2; break;
          case '\\': value += '\\'; pos += 2; break;
          case 'u':
          case 'U':
            if (!decode_unicode_escape(s, pos, value)) {
              err = "bad unicode escape in literal";
              return false;
            }
            break;
          default:
            err = "unknown escape in literal";
            return false;
        }
        continue;
      }
      value += c;
      ++pos;
    }
    std::string datatype, lang;
    if (pos < s.size() && s[pos] == '@') {
      ++pos;
      size_t start = pos;
      while (pos < s.size() &&
             ((s[pos] >= 'a' && s[pos] <= 'z') || (s[pos] >= 'A' && s[pos] <= 'Z'))) {
        ++pos;
      }
      if (pos == start) {
        err = "empty language tag";
        return false;
      }
      while (pos < s.size() && s[pos] == '-') {
        size_t seg = ++pos;
        while (pos < s.size() && ((s[pos] >= 'a' && s[pos] <= 'z') ||
                                  (s[pos] >= 'A' && s[pos] <= 'Z') ||
                                  (s[pos] >= '0' && s[pos] <= '9'))) {
          ++pos;
        }
        if (pos == seg) {
          err = "malformed language tag";
          return false;
        }
      }
      lang.assign(s, start, pos - start);
    } else if (pos + 1 < s.size() && s[pos] == '^' && s[pos + 1] == '^') {
      pos += 2;
      if (pos >= s.size() || s[pos] != '<') {
        err = "datatype must be an IRI";
        return false;
      }
      if (!parse_iri(s, pos, datatype, err)) return false;
    }
    out = Term::literal(std::move(value), std::move(datatype), std::move(lang));
    return true;
  }

  static bool parse_line(const std::string& s, size_t pos, TripleRecord& out, std::string& err) {
    // subject
    skip_ws(s, pos);
    if (pos >= s.size()) {
      err = "missing subject";
      return false;
    }
    if (s[pos] == '<') {
      std::string iri;
      if (!parse_iri(s, pos, iri, err)) return false;
      out.subject = Term::iri(std::move(iri));
    } else if (s[pos] == '_') {
      std::string label;
      if (!parse_blank(s, pos, label, err)) return false;
      out.subject = Term::blank(std::move(label));
    } else {
      err = "subject must be an IRI or blank node";
      return false;
    }
    // predicate
    skip_ws(s, pos);
    if (pos >= s.size() || s[pos] != '<') {
      err = "predicate must be an IRI";
      return false;
    }
    {
      std::string iri;
      if (!parse_iri(s, pos, iri, err)) return false;
      out.predicate = Term::iri(std::move(iri));
    }
    // object
    skip_ws(s, pos);
    if (pos >= s.size()) {
      err = "missing object";
      return false;
    }
    if (s[pos] == '<') {
      std::string iri;
      if (!parse_iri(s, pos, iri, err)) return false;
      out.object = Term::iri(std::move(iri));
    } else if (s[pos] == '_') {
      std::string label;
      if (!parse_blank(s, pos, label, err)) return false;
      out.object = Term::blank(std::move(label));
    } else if (s[pos] == '"') {
      if (!parse_literal(s, pos, out.object, err)) return false;
    } else {
      err = "object must be an IRI, blank node, or literal";
      return false;
    }
    // terminating dot, optional trailing comment
    skip_ws(s, pos);
    if (pos >= s.size() || s[pos] != '.') {
      err = "missing terminating '.'";
      return false;
    }
    ++pos;
    skip_ws(s, pos);
    if (pos < s.size() && s[pos] != '#') {
      err = "trailing content after '.'";
      return false;
    }
    return true;
  }

  LineReader reader_;
  Strictness strictness_;
  ParseReport report_;
  uint64_t lineno_ = 0;
};

// Parses a whole stream, handing each triple to `sink`.
inline ParseReport parse_ntriples(std::istream& in,
                                  const std::function<void(TripleRecord&&)>& sink,
                                  Strictness strictness = Strictness::Tolerant) {
  NTriplesParser parser(in, strictness);
  TripleRecord rec;
  while (parser.next(rec)) sink(std::move(rec));
  return parser.report();
}

inline ParseReport parse_ntriples_file(const std::string& path,
                                       const std::function<void(TripleRecord&&)>& sink,
                                       Strictness strictness = Strictness::Tolerant) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_ntriples(in, sink, strictness);
}

// Convenience for small inputs and tests.
inline std::vector<TripleRecord> parse_ntriples_all(std::istream& in,
                                                    ParseReport* report = nullptr,
                                                    Strictness strictness = Strictness::Tolerant) {
  std::vector<TripleRecord> out;
  ParseReport rep = parse_ntriples(in, [&](TripleRecord&& t) { out.push_back(std::move(t)); },
                                   strictness);
  if (report) *report = rep;
  return out;
}

}  // namespace kgprof
