#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "islecolor/graph.hpp"

namespace islecolor {

/// Parse failure in a DIMACS `.col` document. `line()` is 1-based; 0 means
/// the problem is not tied to a single line (e.g. a missing `p` line).
class DimacsError : public std::runtime_error {
 public:
  enum class Kind { Malformed, Structural, Range, Io };

  DimacsError(Kind kind, std::size_t line, const std::string& what);

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

/// Reads `c`, `p edge n m` and `e u v` lines (1-based endpoints). A header
/// edge count that differs from the distinct edges read is appended to
/// `warnings` rather than rejected.
Graph parse_dimacs(std::istream& in, std::vector<std::string>* warnings = nullptr);
Graph parse_dimacs(const std::string& text, std::vector<std::string>* warnings = nullptr);
Graph load_dimacs(const std::filesystem::path& path, std::vector<std::string>* warnings = nullptr);

/// Canonical form: one `p edge` line and each edge once with u < v.
void write_dimacs(std::ostream& out, const Graph& g);

}  // namespace islecolor
