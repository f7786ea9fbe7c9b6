#pragma once

// Structured-text formats.
//
// Complex files:
//     kind: complex
//     vertices: a b c d          (optional; listing order assigns indices)
//     facets:
//       a b c
//       b c d
//     removed_facets:            (optional; presence makes the complex relative)
//       a b
//
// Without a `vertices` line, vertex names must be non-negative integers and
// are used as indices directly.  `#` starts a comment, `-` denotes the empty
// face.  Certificates use the same syntax with a `kind` of partitioning,
// shelling, constructibility, or search-report; see the writers below.

#include <cctype>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "simpart/complex.hpp"
#include "simpart/constructibility.hpp"
#include "simpart/partition.hpp"
#include "simpart/search.hpp"
#include "simpart/shelling.hpp"

namespace simpart {

struct ParseError : std::runtime_error {
  ParseError(const std::string& source, int line, int column, const std::string& message)
      : std::runtime_error(source + ":" + std::to_string(line) + ":" +
                           std::to_string(column) + ": " + message),
        line(line),
        column(column) {}
  int line;
  int column;
};

/// Bijection between external vertex names and internal indices.  In numeric
/// mode (no `vertices` line) names are the indices themselves.
class VertexMap {
 public:
  static VertexMap numeric() { return VertexMap(); }

  static VertexMap from_labels(const std::vector<std::string>& labels) {
    VertexMap m;
    m.numeric_ = false;
    for (const std::string& l : labels) {
      if (l.empty() || l == "-" || l.find_first_of(":|()# \t") != std::string::npos)
        throw std::invalid_argument("unusable vertex label: '" + l + "'");
      if (m.index_.count(l))
        throw std::invalid_argument("duplicate vertex label: " + l);
      m.index_.emplace(l, static_cast<int>(m.labels_.size()));
      m.labels_.push_back(l);
    }
    return m;
  }

  bool is_numeric() const { return numeric_; }

  std::optional<int> index_of(const std::string& label) const {
    if (numeric_) {
      if (label.empty()) return std::nullopt;
      for (char ch : label)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
      int v = 0;
      for (char ch : label) {
        v = v * 10 + (ch - '0');
        if (v >= Face::kMaxVertices) return std::nullopt;
      }
      return v;
    }
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::string label_of(int v) const {
    if (numeric_) return std::to_string(v);
    return labels_.at(static_cast<std::size_t>(v));
  }

  const std::vector<std::string>& labels() const { return labels_; }

 private:
  bool numeric_ = true;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
};

inline std::string face_to_labels(const Face& f, const VertexMap& map) {
  if (f.empty()) return "-";
  std::string s;
  for (int v : f.vertices()) {
    if (!s.empty()) s += ' ';
    s += map.label_of(v);
  }
  return s;
}

/// A parsed complex file: the closure, the optional removed part, the label
/// map, and any normalization warnings.
struct ComplexDocument {
  std::string source = "<memory>";
  VertexMap labels = VertexMap::numeric();
  SimplicialComplex closure;
  std::optional<SimplicialComplex> removed;
  std::vector<std::string> warnings;

  bool relative() const { return removed.has_value(); }
  RelativeComplex as_relative() const { return RelativeComplex(closure, *removed); }
};

namespace detail {

struct Line {
  int number = 0;
  std::string key;    // empty for item lines
  std::string value;  // inline value or the item text
  int value_column = 1;
};

inline std::vector<Line> read_lines(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string text = raw;
    if (std::size_t hash = text.find('#'); hash != std::string::npos)
      text.resize(hash);
    std::size_t begin = text.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    std::size_t end = text.find_last_not_of(" \t\r");
    std::string trimmed = text.substr(begin, end - begin + 1);

    Line line;
    line.number = number;
    // `key:` needs a name of word characters followed by ':'
    std::size_t colon = trimmed.find(':');
    bool is_key = colon != std::string::npos && colon > 0;
    if (is_key) {
      for (std::size_t i = 0; i < colon; ++i) {
        char ch = trimmed[i];
        if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '-')) {
          is_key = false;
          break;
        }
      }
    }
    if (is_key) {
      line.key = trimmed.substr(0, colon);
      std::size_t vbegin = trimmed.find_first_not_of(" \t", colon + 1);
      if (vbegin != std::string::npos) {
        line.value = trimmed.substr(vbegin);
        line.value_column = static_cast<int>(begin + vbegin) + 1;
      } else {
        line.value_column = static_cast<int>(begin + colon) + 2;
      }
    } else {
      line.value = trimmed;
      line.value_column = static_cast<int>(begin) + 1;
    }
    out.push_back(std::move(line));
  }
  return out;
}

inline std::vector<std::string> split_tokens(const std::string& s) {
  std::vector<std::string> tokens;
  std::istringstream in(s);
  std::string t;
  while (in >> t) tokens.push_back(t);
  return tokens;
}

inline Face parse_face(const std::string& text, const VertexMap& map,
                       const std::string& source, int line, int column) {
  std::vector<std::string> tokens = split_tokens(text);
  if (tokens.size() == 1 && tokens[0] == "-") return Face();
  Face f;
  for (const std::string& t : tokens) {
    std::optional<int> v = map.index_of(t);
    if (!v) throw ParseError(source, line, column, "unknown vertex name '" + t + "'");
    if (f.contains(*v))
      throw ParseError(source, line, column, "repeated vertex '" + t + "' in face");
    f = f.with(*v);
  }
  return f;
}

}  // namespace detail

inline ComplexDocument read_complex(std::istream& in,
                                    const std::string& source = "<memory>") {
  ComplexDocument doc;
  doc.source = source;
  std::vector<detail::Line> lines = detail::read_lines(in);

  std::string section;
  std::vector<std::pair<Face, int>> facet_lines;
  std::vector<std::pair<Face, int>> removed_lines;
  bool have_removed_section = false;

  for (const detail::Line& line : lines) {
    if (!line.key.empty()) {
      section = line.key;
      if (line.key == "kind") {
        if (line.value != "complex")
          throw ParseError(source, line.number, line.value_column,
                           "expected kind 'complex', found '" + line.value + "'");
      } else if (line.key == "vertices") {
        doc.labels = VertexMap::from_labels(detail::split_tokens(line.value));
      } else if (line.key == "facets" || line.key == "removed_facets") {
        if (line.key == "removed_facets") have_removed_section = true;
        if (!line.value.empty())
          throw ParseError(source, line.number, line.value_column,
                           "facet lists start on the following lines");
      } else {
        throw ParseError(source, line.number, 1, "unknown key '" + line.key + "'");
      }
      continue;
    }
    Face f = detail::parse_face(line.value, doc.labels, source, line.number,
                                line.value_column);
    if (section == "facets")
      facet_lines.push_back({f, line.number});
    else if (section == "removed_facets")
      removed_lines.push_back({f, line.number});
    else
      throw ParseError(source, line.number, line.value_column,
                       "face list outside of a facets section");
  }

  auto build = [&](const std::vector<std::pair<Face, int>>& src, const char* what) {
    std::vector<Face> fs;
    for (const auto& [f, n] : src) fs.push_back(f);
    BuildReport report;
    SimplicialComplex k = SimplicialComplex::from_facets(std::move(fs), &report);
    for (const Face& f : report.duplicates)
      doc.warnings.push_back(std::string(what) + ": dropped duplicate facet " +
                             face_to_labels(f, doc.labels));
    for (const Face& f : report.dominated)
      doc.warnings.push_back(std::string(what) + ": dropped dominated face " +
                             face_to_labels(f, doc.labels));
    return k;
  };

  doc.closure = build(facet_lines, "facets");
  if (have_removed_section) {
    doc.removed = build(removed_lines, "removed_facets");
    for (const Face& f : doc.removed->facets())
      if (!doc.closure.contains(f))
        throw ParseError(source, removed_lines.empty() ? 1 : removed_lines.front().second,
                         1,
                         "removed_facets is not a subcomplex: face " +
                             face_to_labels(f, doc.labels) + " is not in the complex");
  }
  return doc;
}

inline void write_complex(std::ostream& out, const ComplexDocument& doc) {
  out << "kind: complex\n";
  if (!doc.labels.is_numeric()) {
    out << "vertices:";
    for (const std::string& l : doc.labels.labels()) out << ' ' << l;
    out << '\n';
  }
  out << "facets:\n";
  for (const Face& f : doc.closure.facets())
    out << "  " << face_to_labels(f, doc.labels) << '\n';
  if (doc.removed) {
    out << "removed_facets:\n";
    for (const Face& f : doc.removed->facets())
      out << "  " << face_to_labels(f, doc.labels) << '\n';
  }
}

// --- certificates ---------------------------------------------------------

enum class CertKind { partitioning, shelling, constructibility, search_report };

struct CertificateDocument {
  CertKind kind = CertKind::partitioning;
  Partitioning partitioning;
  ShellingOrder shelling;
  ConstructibilityCert constructibility;
  SearchReport report;
  std::string target;  // search-report: "partitionability" or "shellability"
};

inline void write_partitioning(std::ostream& out, const Partitioning& p,
                               const VertexMap& map) {
  out << "kind: partitioning\n";
  out << "intervals:\n";
  for (const Interval& iv : p.intervals)
    out << "  " << face_to_labels(iv.bottom, map) << " | " << face_to_labels(iv.top, map)
        << '\n';
}

inline void write_shelling(std::ostream& out, const ShellingOrder& s, const VertexMap& map) {
  out << "kind: shelling\n";
  out << "order:\n";
  for (const Face& f : s.order) out << "  " << face_to_labels(f, map) << '\n';
  if (!s.restrictions.empty()) {
    out << "restrictions:\n";
    for (const Face& f : s.restrictions) out << "  " << face_to_labels(f, map) << '\n';
  }
}

inline void write_search_report(std::ostream& out, const SearchReport& r,
                                const std::string& target) {
  out << "kind: search-report\n";
  out << "target: " << target << '\n';
  out << "result: ";
  switch (r.status) {
    case SearchStatus::sat: out << "sat\n"; break;
    case SearchStatus::unsat: out << "unsat\n"; break;
    case SearchStatus::budget_exceeded: out << "budget-exceeded\n"; break;
  }
  out << "nodes_explored: " << r.nodes_explored << '\n';
  out << "options_generated: " << r.options_generated << '\n';
  out << "wall_ms: " << static_cast<long long>(r.wall_seconds * 1000.0) << '\n';
}

namespace detail {

inline void write_cert_tree(std::ostream& out, const ConstructibilityCert& cert,
                            const VertexMap& map, int indent) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  if (cert.leaf) {
    out << pad << "(leaf " << face_to_labels(cert.facet, map) << ")";
    return;
  }
  out << pad << "(node\n";
  for (std::size_t i = 0; i < cert.parts.size(); ++i) {
    write_cert_tree(out, cert.parts[i], map, indent + 2);
    out << (i + 1 < cert.parts.size() ? "\n" : ")");
  }
}

}  // namespace detail

inline void write_constructibility(std::ostream& out, const ConstructibilityCert& cert,
                                   const VertexMap& map) {
  out << "kind: constructibility\n";
  out << "cert:\n";
  detail::write_cert_tree(out, cert, map, 2);
  out << '\n';
}

namespace detail {

struct SexprParser {
  std::vector<std::string> tokens;
  std::size_t pos = 0;
  const VertexMap* map;
  std::string source;
  int line;

  std::string next() {
    if (pos >= tokens.size())
      throw ParseError(source, line, 1, "unexpected end of certificate expression");
    return tokens[pos++];
  }

  ConstructibilityCert parse() {
    if (next() != "(")
      throw ParseError(source, line, 1, "expected '(' in certificate expression");
    std::string head = next();
    if (head == "leaf") {
      Face f;
      for (;;) {
        std::string t = next();
        if (t == ")") break;
        if (t == "-") continue;
        std::optional<int> v = map->index_of(t);
        if (!v) throw ParseError(source, line, 1, "unknown vertex name '" + t + "'");
        f = f.with(*v);
      }
      return ConstructibilityCert::make_leaf(f);
    }
    if (head != "node")
      throw ParseError(source, line, 1, "expected 'leaf' or 'node', found '" + head + "'");
    ConstructibilityCert a = parse();
    ConstructibilityCert b = parse();
    ConstructibilityCert m = parse();
    if (next() != ")")
      throw ParseError(source, line, 1, "expected ')' closing a node");
    return ConstructibilityCert::make_node(std::move(a), std::move(b), std::move(m));
  }
};

inline std::vector<std::string> sexpr_tokens(const std::string& text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char ch : text) {
    if (ch == '(' || ch == ')') {
      if (!current.empty()) {
        tokens.push_back(current);
        current.clear();
      }
      tokens.push_back(std::string(1, ch));
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      if (!current.empty()) {
        tokens.push_back(current);
        current.clear();
      }
    } else {
      current += ch;
    }
  }
  if (!current.empty()) tokens.push_back(current);
  return tokens;
}

}  // namespace detail

inline CertificateDocument read_certificate(std::istream& in, const VertexMap& map,
                                            const std::string& source = "<memory>") {
  CertificateDocument doc;
  std::vector<detail::Line> lines = detail::read_lines(in);
  std::string kind;
  std::string section;
  std::string cert_text;
  int cert_line = 1;
  std::vector<Face> order, restrictions;

  for (const detail::Line& line : lines) {
    if (!line.key.empty() && line.key == "kind") {
      kind = line.value;
      continue;
    }
    if (kind == "partitioning") {
      if (!line.key.empty()) {
        section = line.key;
        continue;
      }
      if (section != "intervals")
        throw ParseError(source, line.number, 1, "expected an 'intervals' section");
      std::size_t bar = line.value.find('|');
      if (bar == std::string::npos)
        throw ParseError(source, line.number, line.value_column,
                         "interval lines read 'bottom | top'");
      Interval iv;
      iv.bottom = detail::parse_face(line.value.substr(0, bar), map, source, line.number,
                                     line.value_column);
      iv.top = detail::parse_face(line.value.substr(bar + 1), map, source, line.number,
                                  line.value_column);
      doc.partitioning.intervals.push_back(iv);
    } else if (kind == "shelling") {
      if (!line.key.empty()) {
        section = line.key;
        continue;
      }
      Face f = detail::parse_face(line.value, map, source, line.number, line.value_column);
      if (section == "order")
        order.push_back(f);
      else if (section == "restrictions")
        restrictions.push_back(f);
      else
        throw ParseError(source, line.number, 1,
                         "expected an 'order' or 'restrictions' section");
    } else if (kind == "constructibility") {
      if (!line.key.empty()) {
        section = line.key;
        cert_line = line.number;
        cert_text += line.value;
        cert_text += ' ';
        continue;
      }
      if (section != "cert")
        throw ParseError(source, line.number, 1, "expected a 'cert' section");
      cert_text += line.value;
      cert_text += ' ';
    } else if (kind == "search-report") {
      if (line.key == "target")
        doc.target = line.value;
      else if (line.key == "result") {
        if (line.value == "sat")
          doc.report.status = SearchStatus::sat;
        else if (line.value == "unsat")
          doc.report.status = SearchStatus::unsat;
        else if (line.value == "budget-exceeded")
          doc.report.status = SearchStatus::budget_exceeded;
        else
          throw ParseError(source, line.number, line.value_column,
                           "unknown result '" + line.value + "'");
      } else if (line.key == "nodes_explored")
        doc.report.nodes_explored = std::stoull(line.value);
      else if (line.key == "options_generated")
        doc.report.options_generated = std::stoull(line.value);
      else if (line.key == "wall_ms")
        doc.report.wall_seconds = std::stod(line.value) / 1000.0;
      else
        throw ParseError(source, line.number, 1,
                         "unknown search-report key '" + line.key + "'");
    } else {
      throw ParseError(source, line.number, 1,
                       kind.empty() ? "certificate files start with a 'kind' line"
                                    : "unknown certificate kind '" + kind + "'");
    }
  }

  if (kind == "partitioning") {
    doc.kind = CertKind::partitioning;
  } else if (kind == "shelling") {
    doc.kind = CertKind::shelling;
    doc.shelling.order = std::move(order);
    doc.shelling.restrictions = std::move(restrictions);
  } else if (kind == "constructibility") {
    doc.kind = CertKind::constructibility;
    detail::SexprParser parser{detail::sexpr_tokens(cert_text), 0, &map, source, cert_line};
    doc.constructibility = parser.parse();
    if (parser.pos != parser.tokens.size())
      throw ParseError(source, cert_line, 1, "trailing tokens after certificate");
  } else if (kind == "search-report") {
    doc.kind = CertKind::search_report;
  } else {
    throw ParseError(source, 1, 1,
                     kind.empty() ? "certificate files start with a 'kind' line"
                                  : "unknown certificate kind '" + kind + "'");
  }
  return doc;
}

}  // namespace simpart
