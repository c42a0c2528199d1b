#include "statseq/io.hpp"

#include <cctype>
#include <istream>
#include <limits>
#include <sstream>
#include <unordered_map>

namespace statseq {

namespace {

struct Token {
  std::int64_t value;
  int line;
  int column;
};

// Tokenize integers; `#` starts a comment to end of line. `allow_comma`
// additionally treats commas as separators (sequence format).
std::vector<Token> tokenize(std::istream& in, bool allow_comma) {
  std::vector<Token> tokens;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t i = 0;
    while (i < line.size()) {
      char c = line[i];
      if (c == '#') break;
      if (std::isspace(static_cast<unsigned char>(c)) || (allow_comma && c == ',')) {
        ++i;
        continue;
      }
      std::size_t start = i;
      bool negative = false;
      if (c == '-') {
        negative = true;
        ++i;
      }
      std::size_t digits_begin = i;
      while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
      if (i == digits_begin) {
        throw ParseError("expected an integer", lineno, static_cast<int>(start) + 1);
      }
      std::int64_t value = 0;
      for (std::size_t k = digits_begin; k < i; ++k) {
        int d = line[k] - '0';
        if (value > (std::numeric_limits<std::int64_t>::max() - d) / 10)
          throw ParseError("integer too large", lineno, static_cast<int>(start) + 1);
        value = value * 10 + d;
      }
      tokens.push_back({negative ? -value : value, lineno, static_cast<int>(start) + 1});
    }
  }
  return tokens;
}

}  // namespace

LabeledGraph read_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  std::unordered_map<std::int64_t, Vertex> id_of;
  std::vector<std::int64_t> labels;
  std::vector<Edge> edges;

  auto intern = [&](const Token& t) -> Vertex {
    if (t.value < 0) throw ParseError("vertex labels must be nonnegative", t.line, t.column);
    auto [it, inserted] = id_of.try_emplace(t.value, static_cast<Vertex>(labels.size()));
    if (inserted) labels.push_back(t.value);
    return it->second;
  };

  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream one_line(line + "\n");
    std::vector<Token> row;
    try {
      row = tokenize(one_line, false);
    } catch (const ParseError& e) {
      throw ParseError("expected an integer", lineno, e.column());
    }
    for (auto& t : row) t.line = lineno;
    if (row.empty()) continue;
    if (row.size() == 1) {
      intern(row[0]);
      continue;
    }
    if (row.size() != 2)
      throw ParseError("expected two vertex labels per edge line", lineno, row[2].column);
    Vertex u = intern(row[0]);
    Vertex v = intern(row[1]);
    if (u == v) throw ParseError("loop edge", lineno, row[0].column);
    edges.emplace_back(u, v);
  }
  if (labels.empty()) throw ParseError("empty graph", lineno == 0 ? 1 : lineno, 1);
  try {
    Graph g(static_cast<int>(labels.size()), edges);
    return LabeledGraph{std::move(g), std::move(labels)};
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), lineno == 0 ? 1 : lineno, 1);
  }
}

LabeledGraph read_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

std::vector<std::int64_t> read_sequence(std::istream& in) {
  auto tokens = tokenize(in, true);
  std::vector<std::int64_t> values;
  values.reserve(tokens.size());
  for (const auto& t : tokens) values.push_back(t.value);
  return values;
}

std::vector<std::int64_t> read_sequence(const std::string& text) {
  std::istringstream in(text);
  return read_sequence(in);
}

std::string format_edge_list(const std::vector<Edge>& edges,
                             const std::vector<std::int64_t>& labels) {
  std::ostringstream out;
  for (const auto& [u, v] : edges) out << labels[u] << ' ' << labels[v] << '\n';
  return out.str();
}

std::string format_sequence(const std::vector<std::int64_t>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ' ';
    out << values[i];
  }
  out << '\n';
  return out.str();
}

}  // namespace statseq
