#pragma once

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "degroot/digraph.hpp"
#include "degroot/matrix.hpp"

namespace degroot {

// Formatting conventions used across the toolkit:
//   fmt_human  - default console output, 12 significant digits
//   fmt_json   - machine output, fixed-width scientific, 12 significant
//                digits, locale independent
//   fmt_file   - data files, shortest round-trip-safe decimal
//   fmt_label  - DOT edge labels, 6 significant digits
inline std::string fmt_human(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

inline std::string fmt_json(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.11e", x);
  return buf;
}

inline std::string fmt_file(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline std::string fmt_label(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

namespace detail {

inline bool has_suffix(const std::string& s, const std::string& suffix) {
  if (s.size() < suffix.size()) return false;
  return std::equal(suffix.rbegin(), suffix.rend(), s.rbegin(),
                    [](char a, char b) {
                      return std::tolower(static_cast<unsigned char>(a)) ==
                             std::tolower(static_cast<unsigned char>(b));
                    });
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failed for " + path);
  return buf.str();
}

inline void write_text_file(const std::string& path,
                            const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("write failed for " + path);
}

inline double parse_number(const std::string& token, const std::string& path,
                           int line_no) {
  std::size_t pos = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &pos);
  } catch (const std::exception&) {
    throw ParseError(path + ":" + std::to_string(line_no) +
                     ": not a number: '" + token + "'");
  }
  while (pos < token.size() &&
         std::isspace(static_cast<unsigned char>(token[pos])))
    ++pos;
  if (pos != token.size())
    throw ParseError(path + ":" + std::to_string(line_no) +
                     ": trailing junk in '" + token + "'");
  return value;
}

inline std::vector<Vector> parse_csv_rows(const std::string& text,
                                          const std::string& path) {
  std::vector<Vector> rows;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first =
        std::find_if(line.begin(), line.end(), [](unsigned char c) {
          return !std::isspace(c);
        });
    if (first == line.end() || *first == '#') continue;
    Vector row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ','))
      row.push_back(parse_number(cell, path, line_no));
    if (line.back() == ',')
      throw ParseError(path + ":" + std::to_string(line_no) +
                       ": trailing comma");
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::vector<Vector> json_to_rows(const nlohmann::json& node,
                                        const std::string& path) {
  if (!node.is_array()) throw ParseError(path + ": expected an array");
  std::vector<Vector> rows;
  for (const auto& row_node : node) {
    if (!row_node.is_array())
      throw ParseError(path + ": expected an array of arrays");
    Vector row;
    for (const auto& cell : row_node) {
      if (!cell.is_number())
        throw ParseError(path + ": matrix entries must be numbers");
      row.push_back(cell.get<double>());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline nlohmann::json parse_json_text(const std::string& text,
                                      const std::string& path) {
  nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError(path + ": invalid JSON");
  return doc;
}

}  // namespace detail

/// Reads a square matrix from CSV (one row per line, '#' comments allowed)
/// or JSON (array of arrays, or an object with a "matrix" member), chosen by
/// file extension.
inline Matrix read_matrix(const std::string& path) {
  const std::string text = detail::read_text_file(path);
  std::vector<Vector> rows;
  if (detail::has_suffix(path, ".json")) {
    nlohmann::json doc = detail::parse_json_text(text, path);
    if (doc.is_object()) {
      if (!doc.contains("rows"))
        throw ParseError(path + ": object form needs a \"rows\" member");
      rows = detail::json_to_rows(doc["rows"], path);
      if (doc.contains("n")) {
        if (!doc["n"].is_number_integer())
          throw ParseError(path + ": \"n\" must be an integer");
        if (doc["n"].get<long long>() != static_cast<long long>(rows.size()))
          throw ParseError(path + ": \"n\" does not match the row count");
      }
    } else {
      rows = detail::json_to_rows(doc, path);
    }
  } else {
    rows = detail::parse_csv_rows(text, path);
  }
  if (rows.empty()) throw ParseError(path + ": no matrix rows found");
  try {
    return Matrix::from_rows(rows);
  } catch (const Error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

/// Reads a vector from CSV (one value per line, or one comma-separated
/// line) or JSON (flat array, or an object with a "vector" member).
inline Vector read_vector(const std::string& path) {
  const std::string text = detail::read_text_file(path);
  std::vector<Vector> rows;
  if (detail::has_suffix(path, ".json")) {
    nlohmann::json doc = detail::parse_json_text(text, path);
    nlohmann::json node = doc;
    if (doc.is_object()) {
      if (!doc.contains("vector"))
        throw ParseError(path + ": object form needs a \"vector\" member");
      node = doc["vector"];
    }
    if (!node.is_array()) throw ParseError(path + ": expected an array");
    Vector flat;
    for (const auto& cell : node) {
      if (!cell.is_number())
        throw ParseError(path + ": vector entries must be numbers");
      flat.push_back(cell.get<double>());
    }
    if (flat.empty()) throw ParseError(path + ": empty vector");
    return flat;
  }
  rows = detail::parse_csv_rows(text, path);
  if (rows.empty()) throw ParseError(path + ": empty vector");
  if (rows.size() == 1) return rows.front();
  Vector flat;
  for (const auto& row : rows) {
    if (row.size() != 1)
      throw ParseError(path +
                       ": vector file must be a single line or one value "
                       "per line");
    flat.push_back(row.front());
  }
  return flat;
}

inline void write_matrix(const std::string& path, const Matrix& m) {
  std::ostringstream out;
  if (detail::has_suffix(path, ".json")) {
    out << "{\"n\": " << m.size() << ", \"rows\": [\n";
    for (int i = 0; i < m.size(); ++i) {
      out << "  [";
      for (int j = 0; j < m.size(); ++j) {
        if (j) out << ", ";
        out << fmt_file(m(i, j));
      }
      out << (i + 1 < m.size() ? "],\n" : "]\n");
    }
    out << "]}\n";
  } else {
    for (int i = 0; i < m.size(); ++i) {
      for (int j = 0; j < m.size(); ++j) {
        if (j) out << ',';
        out << fmt_file(m(i, j));
      }
      out << '\n';
    }
  }
  detail::write_text_file(path, out.str());
}

inline void write_vector(const std::string& path, const Vector& v) {
  std::ostringstream out;
  if (detail::has_suffix(path, ".json")) {
    out << "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out << ", ";
      out << fmt_file(v[i]);
    }
    out << "]\n";
  } else {
    for (double x : v) out << fmt_file(x) << '\n';
  }
  detail::write_text_file(path, out.str());
}

/// GraphViz rendering of a weighted digraph. Vertices are shown 1-based to
/// match the usual presentation of influence diagrams. Arcs are emitted in
/// (tail, head) sorted order so output is deterministic; loops are included
/// only when show_loops is set.
inline std::string to_dot(const WeightedDigraph& g, bool show_loops = false,
                          const std::string& name = "G") {
  std::vector<Arc> arcs = g.arcs();
  std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
    return std::pair(a.tail, a.head) < std::pair(b.tail, b.head);
  });
  std::vector<bool> mentioned(static_cast<std::size_t>(g.size()), false);
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (const Arc& a : arcs) {
    if (a.tail == a.head && !show_loops) continue;
    mentioned[static_cast<std::size_t>(a.tail)] = true;
    mentioned[static_cast<std::size_t>(a.head)] = true;
    out << "  " << (a.tail + 1) << " -> " << (a.head + 1) << " [label=\""
        << fmt_label(a.weight) << "\"];\n";
  }
  for (int v = 0; v < g.size(); ++v)
    if (!mentioned[static_cast<std::size_t>(v)]) out << "  " << (v + 1)
                                                     << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace degroot
