#ifndef STATSEQ_GRAPH_HPP
#define STATSEQ_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace statseq {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Status values grow like n^2/2 and the hardness reductions inflate them
/// further, so they are kept in 64 bits throughout.
using Status = std::int64_t;

/// A status sequence is a nondecreasing list of vertex statuses. All
/// producers in this library return it sorted; multiset equality is plain
/// vector equality.
using StatusSequence = std::vector<Status>;

/// Simple, loopless, connected undirected graph over dense 0-based vertex
/// ids. Construction validates all three properties and throws
/// std::invalid_argument on violation; instances are immutable afterwards.
class Graph {
 public:
  Graph(int n, const std::vector<Edge>& edges);

  int order() const { return n_; }
  int edge_count() const { return m_; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

  /// Neighbors of v, sorted ascending.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }

  bool has_edge(Vertex u, Vertex v) const;

  /// All edges as (min, max) pairs, lexicographically sorted.
  std::vector<Edge> edges() const;

 private:
  int n_;
  int m_;
  std::vector<std::vector<Vertex>> adj_;
};

/// A Graph that is additionally a tree (edge count == order - 1).
class Tree {
 public:
  explicit Tree(Graph g);
  Tree(int n, const std::vector<Edge>& edges) : Tree(Graph(n, edges)) {}

  const Graph& graph() const { return g_; }
  int order() const { return g_.order(); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return g_.neighbors(v); }
  int degree(Vertex v) const { return g_.degree(v); }
  std::vector<Edge> edges() const { return g_.edges(); }

 private:
  Graph g_;
};

/// n x n matrix of hop distances: zero diagonal, symmetric, entries >= 1 off
/// the diagonal (the graph is connected).
class DistanceMatrix {
 public:
  DistanceMatrix(int n, std::vector<int> flat);

  int order() const { return n_; }
  int at(Vertex u, Vertex v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
  Status row_sum(Vertex u) const;

 private:
  int n_;
  std::vector<int> d_;
};

struct TreeMetrics {
  int diameter = 0;
  int radius = 0;
  int depth = 0;                // equals radius
  std::vector<Vertex> center;   // middle vertex/vertices of a longest path
  std::vector<Vertex> median;   // vertices of minimum status
};

/// Hop distances from source to every vertex, by breadth-first search.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

DistanceMatrix all_pairs_distances(const Graph& g);

/// s(v) = sum of distances from v to all vertices.
Status status(const Graph& g, Vertex v);

/// Unsorted per-vertex statuses.
std::vector<Status> status_by_vertex(const Graph& g);

/// Per-vertex statuses of a tree in O(n): one BFS for the root, then
/// s(child) = s(parent) + n - 2 * subtree(child) along the rooted edges.
std::vector<Status> tree_statuses(const Tree& t);

StatusSequence status_sequence(const Graph& g);

/// Number of distinct values in the status sequence; equals order iff the
/// graph is status injective.
int distinct_status_count(const Graph& g);

TreeMetrics metrics(const Tree& t);

/// Component sizes after deleting the edge (v1, v2), v1-side first.
/// Throws std::invalid_argument if (v1, v2) is not an edge. The sizes obey
/// s(v1) - s(v2) = size2 - size1.
std::pair<int, int> edge_split(const Tree& t, Vertex v1, Vertex v2);

/// Exhaustive check that statuses strictly increase along every path that
/// leaves the median set. Holds for every tree.
bool median_path_is_increasing(const Tree& t);

}  // namespace statseq

#endif  // STATSEQ_GRAPH_HPP
