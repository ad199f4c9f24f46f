#include "islecolor/dimacs.hpp"

#include <charconv>
#include <limits>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

namespace islecolor {

namespace {

std::string located(std::size_t line, const std::string& what) {
  return line == 0 ? what : "line " + std::to_string(line) + ": " + what;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

long long parse_integer(std::string_view token, std::size_t line_no, const char* field) {
  long long value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw DimacsError(DimacsError::Kind::Malformed, line_no,
                      std::string("expected an integer for ") + field + ", got '" +
                          std::string(token) + "'");
  }
  return value;
}

}  // namespace

DimacsError::DimacsError(Kind kind, std::size_t line, const std::string& what)
    : std::runtime_error(located(line, what)), kind_(kind), line_(line) {}

Graph parse_dimacs(std::istream& in, std::vector<std::string>* warnings) {
  bool have_header = false;
  long long n = 0;
  long long header_edges = 0;
  std::vector<Edge> edges;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto tokens = split_tokens(line);
    if (tokens.empty()) continue;

    const auto tag = tokens[0];
    if (tag == "c") continue;
    if (tag == "p") {
      if (have_header) {
        throw DimacsError(DimacsError::Kind::Structural, line_no, "duplicate 'p' line");
      }
      if (tokens.size() != 4 || (tokens[1] != "edge" && tokens[1] != "col")) {
        throw DimacsError(DimacsError::Kind::Malformed, line_no,
                          "expected 'p edge <vertices> <edges>'");
      }
      n = parse_integer(tokens[2], line_no, "vertex count");
      header_edges = parse_integer(tokens[3], line_no, "edge count");
      if (n < 1 || n > std::numeric_limits<int>::max()) {
        throw DimacsError(DimacsError::Kind::Range, line_no,
                          "vertex count must be positive, got " + std::to_string(n));
      }
      if (header_edges < 0) {
        throw DimacsError(DimacsError::Kind::Range, line_no, "edge count must be non-negative");
      }
      have_header = true;
      continue;
    }
    if (tag == "e") {
      if (!have_header) {
        throw DimacsError(DimacsError::Kind::Structural, line_no, "'e' line before 'p' line");
      }
      if (tokens.size() != 3) {
        throw DimacsError(DimacsError::Kind::Malformed, line_no, "expected 'e <u> <v>'");
      }
      const long long u = parse_integer(tokens[1], line_no, "edge endpoint");
      const long long v = parse_integer(tokens[2], line_no, "edge endpoint");
      for (long long endpoint : {u, v}) {
        if (endpoint < 1 || endpoint > n) {
          throw DimacsError(DimacsError::Kind::Range, line_no,
                            "endpoint " + std::to_string(endpoint) + " outside [1, " +
                                std::to_string(n) + "]");
        }
      }
      if (u == v) {
        throw DimacsError(DimacsError::Kind::Structural, line_no,
                          "self-loop on vertex " + std::to_string(u));
      }
      edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
      continue;
    }
    throw DimacsError(DimacsError::Kind::Malformed, line_no,
                      "unknown line type '" + std::string(tag) + "'");
  }
  if (in.bad()) {
    throw DimacsError(DimacsError::Kind::Io, line_no, "read error");
  }
  if (!have_header) {
    throw DimacsError(DimacsError::Kind::Structural, 0, "missing 'p edge' line");
  }

  Graph g = Graph::from_edges(static_cast<int>(n), edges);
  if (warnings != nullptr && g.edge_count() != header_edges) {
    warnings->push_back("header declares " + std::to_string(header_edges) + " edges but " +
                        std::to_string(g.edge_count()) + " distinct edges were read");
  }
  return g;
}

Graph parse_dimacs(const std::string& text, std::vector<std::string>* warnings) {
  std::istringstream in(text);
  return parse_dimacs(in, warnings);
}

Graph load_dimacs(const std::filesystem::path& path, std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) {
    throw DimacsError(DimacsError::Kind::Io, 0, "cannot open " + path.string());
  }
  return parse_dimacs(in, warnings);
}

void write_dimacs(std::ostream& out, const Graph& g) {
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) {
    out << "e " << u + 1 << ' ' << v + 1 << '\n';
  }
}

}  // namespace islecolor
