#ifndef STATSEQ_IO_HPP
#define STATSEQ_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "statseq/graph.hpp"

namespace statseq {

/// Parse failure with a 1-based line/column position for diagnostics.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Graph read from an edge list, keeping the original vertex labels.
/// labels[i] is the input label of dense vertex i (first-appearance order).
struct LabeledGraph {
  Graph graph;
  std::vector<std::int64_t> labels;
};

/// Edge-list text format: one edge per line as two whitespace-separated
/// nonnegative integer labels. Blank lines and `#` comments are ignored.
/// A line with a single label declares an isolated vertex (only useful for
/// the one-vertex graph). Labels are remapped to dense 0-based ids.
LabeledGraph read_edge_list(std::istream& in);
LabeledGraph read_edge_list(const std::string& text);

/// Sequence text format: integers separated by whitespace and/or commas,
/// order-insensitive. `#` comments and blank lines are ignored.
std::vector<std::int64_t> read_sequence(std::istream& in);
std::vector<std::int64_t> read_sequence(const std::string& text);

std::string format_edge_list(const std::vector<Edge>& edges,
                             const std::vector<std::int64_t>& labels);
std::string format_sequence(const std::vector<std::int64_t>& values);

}  // namespace statseq

#endif  // STATSEQ_IO_HPP
