// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace kgprof {

// Square matrix of pairwise statistics, one row/column per graph label.
// Cells may be undefined (no gold links, excluded estimates).
struct PairMatrix {
  std::vector<std::string> labels;
  std::vector<std::optional<double>> cells;  // row-major

  explicit PairMatrix(std::vector<std::string> graphLabels = {})
      : labels(std::move(graphLabels)), cells(labels.size() * labels.size()) {}

  size_t size() const { return labels.size(); }
  std::optional<double>& at(size_t row, size_t col) { return cells[row * size() + col]; }
  const std::optional<double>& at(size_t row, size_t col) const {
    return cells[row * size() + col];
  }
};

namespace heatmap_detail {

inline std::string fmt4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

// One CSV field, quoted when needed.
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

}  // namespace heatmap_detail

// Header row and column carry the graph labels; numeric cells use four
// decimal places; undefined cells stay empty.
inline std::string matrix_to_csv(const PairMatrix& m) {
  std::string out;
  for (const auto& l : m.labels) {
    out += ',';
    out += heatmap_detail::csv_field(l);
  }
  out += '\n';
  for (size_t r = 0; r < m.size(); ++r) {
    out += heatmap_detail::csv_field(m.labels[r]);
    for (size_t c = 0; c < m.size(); ++c) {
      out += ',';
      if (m.at(r, c)) out += heatmap_detail::fmt4(*m.at(r, c));
    }
    out += '\n';
  }
  return out;
}

inline PairMatrix matrix_from_csv(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty matrix CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  auto header = heatmap_detail::split_csv_line(line);
  if (header.empty() || !header[0].empty()) throw std::runtime_error("bad matrix CSV header");
  PairMatrix m(std::vector<std::string>(header.begin() + 1, header.end()));
  size_t row = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = heatmap_detail::split_csv_line(line);
    if (row >= m.size() || fields.size() != m.size() + 1 || fields[0] != m.labels[row]) {
      throw std::runtime_error("bad matrix CSV row " + std::to_string(row + 1));
    }
    for (size_t c = 0; c < m.size(); ++c) {
      if (!fields[c + 1].empty()) m.at(row, c) = std::stod(fields[c + 1]);
    }
    ++row;
  }
  if (row != m.size()) throw std::runtime_error("matrix CSV row count mismatch");
  return m;
}

// Static SVG heatmap: linear grey-to-blue scale from 0 (light) to 1 (dark),
// annotated cell values, hatched cells where the value is undefined.
inline std::string matrix_to_svg(const PairMatrix& m, const std::string& title = {}) {
  const int cell = 64;
  const int margin = 120;
  const int top = title.empty() ? 60 : 84;
  const int n = static_cast<int>(m.size());
  const int width = margin + n * cell + 20;
  const int height = top + n * cell + 20;

  auto color = [](double v) {
    v = std::min(1.0, std::max(0.0, v));
    // light (#f2f7fc) to dark (#08306b)
    const int r = static_cast<int>(std::lround(242 + (8 - 242) * v));
    const int g = static_cast<int>(std::lround(247 + (48 - 247) * v));
    const int b = static_cast<int>(std::lround(252 + (107 - 252) * v));
    char buf[8];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", r, g, b);
    return std::string(buf);
  };
  auto esc = [](const std::string& s) {
    std::string out;
    for (char c : s) {
      switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        default: out += c;
      }
    }
    return out;
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\">\n";
  svg += "<defs><pattern id=\"undef\" width=\"8\" height=\"8\" "
         "patternUnits=\"userSpaceOnUse\" patternTransform=\"rotate(45)\">"
         "<rect width=\"8\" height=\"8\" fill=\"#ffffff\"/>"
         "<line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"8\" stroke=\"#bbbbbb\" stroke-width=\"2\"/>"
         "</pattern></defs>\n";
  if (!title.empty()) {
    svg += "<text x=\"" + std::to_string(margin) +
           "\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\">" + esc(title) + "</text>\n";
  }
  for (int c = 0; c < n; ++c) {
    svg += "<text x=\"" + std::to_string(margin + c * cell + cell / 2) + "\" y=\"" +
           std::to_string(top - 8) +
           "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">" +
           esc(m.labels[c]) + "</text>\n";
  }
  for (int r = 0; r < n; ++r) {
    svg += "<text x=\"" + std::to_string(margin - 8) + "\" y=\"" +
           std::to_string(top + r * cell + cell / 2 + 4) +
           "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">" +
           esc(m.labels[r]) + "</text>\n";
    for (int c = 0; c < n; ++c) {
      const int x = margin + c * cell;
      const int y = top + r * cell;
      const auto& v = m.at(static_cast<size_t>(r), static_cast<size_t>(c));
      const std::string fill = v ? color(*v) : std::string("url(#undef)");
      svg += "<rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) + "\" width=\"" +
             std::to_string(cell) + "\" height=\"" + std::to_string(cell) + "\" fill=\"" + fill +
             "\" stroke=\"#ffffff\"/>\n";
      if (v) {
        const std::string text_color = *v > 0.55 ? "#ffffff" : "#1a1a1a";
        svg += "<text x=\"" + std::to_string(x + cell / 2) + "\" y=\"" +
               std::to_string(y + cell / 2 + 4) +
               "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\" fill=\"" +
               text_color + "\">" + heatmap_detail::fmt4(*v) + "</text>\n";
      }
    }
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace kgprof
