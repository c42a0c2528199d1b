#ifndef STATSEQ_TESTS_HELPERS_HPP
#define STATSEQ_TESTS_HELPERS_HPP

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "statseq/graph.hpp"

namespace statseq::testing {

// Independent all-pairs oracle: Floyd-Warshall over the adjacency matrix,
// no BFS involved.
inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  const int n = g.order();
  const int inf = 1 << 28;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (int v = 0; v < n; ++v)
    for (int w : g.neighbors(v)) d[v][w] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

// Independent count oracle for free trees: the rooted-tree Euler-transform
// recurrence combined with the dissimilarity identity
// T(x) = R(x) - (R(x)^2 - R(x^2)) / 2.
inline std::vector<std::uint64_t> free_tree_counts_by_recurrence(int max_n) {
  std::vector<std::uint64_t> r(max_n + 1, 0);
  r[1] = 1;
  for (int n = 2; n <= max_n; ++n) {
    std::uint64_t total = 0;
    for (int k = 1; k < n; ++k) {
      std::uint64_t weighted = 0;
      for (int d = 1; d <= k; ++d)
        if (k % d == 0) weighted += static_cast<std::uint64_t>(d) * r[d];
      total += weighted * r[n - k];
    }
    r[n] = total / (n - 1);
  }
  std::vector<std::uint64_t> t(max_n + 1, 0);
  for (int n = 1; n <= max_n; ++n) {
    std::uint64_t pair_sum = 0;
    for (int i = 1; i < n; ++i) pair_sum += r[i] * r[n - i];
    if (n % 2 == 0) pair_sum -= r[n / 2];
    t[n] = r[n] - pair_sum / 2;
  }
  return t;
}

inline Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

inline Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges);
}

inline Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    edges.emplace_back(i, 5 + i);                // spokes
  }
  return Graph(10, edges);
}

inline Graph complete_bipartite_k33() {
  std::vector<Edge> edges;
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j) edges.emplace_back(i, j);
  return Graph(6, edges);
}

inline Graph cube_graph() {
  std::vector<Edge> edges;
  for (int v = 0; v < 8; ++v)
    for (int bit = 0; bit < 3; ++bit)
      if (v < (v ^ (1 << bit))) edges.emplace_back(v, v ^ (1 << bit));
  return Graph(8, edges);
}

inline Tree random_tree(int n, std::mt19937& rng) {
  if (n == 1) return Tree(1, {});
  if (n == 2) return Tree(2, {{0, 1}});
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> code(n - 2);
  for (int& c : code) c = pick(rng);
  // quadratic Prufer decode, deliberately naive
  std::vector<int> degree(n, 1);
  for (int c : code) ++degree[c];
  std::vector<Edge> edges;
  for (int c : code) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (degree[leaf] == 1) {
        edges.emplace_back(leaf, c);
        --degree[leaf];
        --degree[c];
        break;
      }
    }
  }
  int a = -1, b = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) (a < 0 ? a : b) = v;
  }
  edges.emplace_back(a, b);
  return Tree(n, edges);
}

inline Tree permute_tree(const Tree& t, std::mt19937& rng) {
  const int n = t.order();
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  for (auto [u, v] : t.edges()) edges.emplace_back(perm[u], perm[v]);
  return Tree(n, edges);
}

}  // namespace statseq::testing

#endif  // STATSEQ_TESTS_HELPERS_HPP
