#include "statseq/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

namespace statseq {

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n), m_(0), adj_(n) {
  if (n <= 0) throw std::invalid_argument("graph order must be positive");
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (Vertex v = 0; v < n_; ++v) {
    auto& nb = adj_[v];
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw std::invalid_argument("multi-edges are not allowed");
  }
  m_ = static_cast<int>(edges.size());

  // connectivity
  std::vector<char> seen(n_, 0);
  std::queue<Vertex> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    for (Vertex w : adj_[u]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        q.push(w);
      }
    }
  }
  if (reached != n_) throw std::invalid_argument("graph must be connected");
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Tree::Tree(Graph g) : g_(std::move(g)) {
  if (g_.edge_count() != g_.order() - 1)
    throw std::invalid_argument("tree must have exactly n - 1 edges");
}

DistanceMatrix::DistanceMatrix(int n, std::vector<int> flat)
    : n_(n), d_(std::move(flat)) {
  if (static_cast<int>(d_.size()) != n * n)
    throw std::invalid_argument("distance matrix size mismatch");
}

Status DistanceMatrix::row_sum(Vertex u) const {
  Status s = 0;
  for (Vertex v = 0; v < n_; ++v) s += at(u, v);
  return s;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  if (source < 0 || source >= g.order())
    throw std::invalid_argument("vertex out of range");
  std::vector<int> dist(g.order(), -1);
  dist[source] = 0;
  std::queue<Vertex> q;
  q.push(source);
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const int n = g.order();
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (Vertex v = 0; v < n; ++v) {
    auto row = bfs_distances(g, v);
    std::copy(row.begin(), row.end(), flat.begin() + static_cast<std::size_t>(v) * n);
  }
  return DistanceMatrix(n, std::move(flat));
}

Status status(const Graph& g, Vertex v) {
  auto dist = bfs_distances(g, v);
  return std::accumulate(dist.begin(), dist.end(), Status{0});
}

std::vector<Status> status_by_vertex(const Graph& g) {
  std::vector<Status> s(g.order());
  for (Vertex v = 0; v < g.order(); ++v) s[v] = status(g, v);
  return s;
}

std::vector<Status> tree_statuses(const Tree& t) {
  const Graph& g = t.graph();
  const int n = g.order();
  std::vector<int> order;
  order.reserve(n);
  std::vector<Vertex> parent(n, -1);
  std::vector<char> seen(n, 0);
  order.push_back(0);
  seen[0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    Vertex u = order[i];
    for (Vertex w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = u;
        order.push_back(w);
      }
    }
  }
  std::vector<int> subtree(n, 1);
  std::vector<Status> s(n, 0);
  Status root_status = 0;
  std::vector<int> depth(n, 0);
  for (std::size_t i = 1; i < order.size(); ++i) {
    Vertex v = order[i];
    depth[v] = depth[parent[v]] + 1;
    root_status += depth[v];
  }
  for (std::size_t i = order.size(); i-- > 1;) subtree[parent[order[i]]] += subtree[order[i]];
  s[0] = root_status;
  for (std::size_t i = 1; i < order.size(); ++i) {
    Vertex v = order[i];
    s[v] = s[parent[v]] + n - 2 * static_cast<Status>(subtree[v]);
  }
  return s;
}

StatusSequence status_sequence(const Graph& g) {
  auto s = status_by_vertex(g);
  std::sort(s.begin(), s.end());
  return s;
}

int distinct_status_count(const Graph& g) {
  auto s = status_sequence(g);
  return static_cast<int>(std::unique(s.begin(), s.end()) - s.begin());
}

namespace {

// Farthest vertex from source, smallest id on ties, plus the BFS parents.
std::pair<Vertex, std::vector<Vertex>> farthest_from(const Graph& g, Vertex source) {
  auto dist = bfs_distances(g, source);
  std::vector<Vertex> parent(g.order(), -1);
  // reconstruct parents with a second pass over edges (dist is a BFS tree)
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex w : g.neighbors(u))
      if (dist[w] == dist[u] + 1 && parent[w] < 0) parent[w] = u;
  Vertex best = source;
  for (Vertex v = 0; v < g.order(); ++v)
    if (dist[v] > dist[best]) best = v;
  return {best, parent};
}

}  // namespace

TreeMetrics metrics(const Tree& t) {
  const Graph& g = t.graph();
  TreeMetrics m;

  auto [u, parent_u] = farthest_from(g, 0);
  auto [w, parent_w] = farthest_from(g, u);
  std::vector<Vertex> path;
  for (Vertex x = w; x != -1; x = parent_w[x]) path.push_back(x);
  // path runs w .. u and has diameter + 1 vertices
  m.diameter = static_cast<int>(path.size()) - 1;
  m.radius = (m.diameter + 1) / 2;
  m.depth = m.radius;
  if (m.diameter % 2 == 0) {
    m.center = {path[m.diameter / 2]};
  } else {
    m.center = {path[m.diameter / 2], path[m.diameter / 2 + 1]};
    std::sort(m.center.begin(), m.center.end());
  }

  auto s = tree_statuses(t);
  Status best = *std::min_element(s.begin(), s.end());
  for (Vertex v = 0; v < g.order(); ++v)
    if (s[v] == best) m.median.push_back(v);
  return m;
}

std::pair<int, int> edge_split(const Tree& t, Vertex v1, Vertex v2) {
  const Graph& g = t.graph();
  if (!g.has_edge(v1, v2)) throw std::invalid_argument("not an edge of the tree");
  // size of the v1-side component with the edge removed
  std::vector<char> seen(g.order(), 0);
  seen[v1] = 1;
  seen[v2] = 1;  // block crossing; v2 is not counted
  std::queue<Vertex> q;
  q.push(v1);
  int size1 = 1;
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    for (Vertex x : g.neighbors(u)) {
      if (!seen[x]) {
        seen[x] = 1;
        ++size1;
        q.push(x);
      }
    }
  }
  return {size1, g.order() - size1};
}

bool median_path_is_increasing(const Tree& t) {
  const Graph& g = t.graph();
  auto s = tree_statuses(t);
  Status best = *std::min_element(s.begin(), s.end());
  std::vector<char> is_median(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) is_median[v] = (s[v] == best);

  // Every simple path starting at a median vertex descends into exactly one
  // neighbor subtree, so a DFS away from each median vertex covers all of
  // them. Paths whose second vertex is also a median are exempt at the first
  // step and get checked from that median's own sweep.
  for (Vertex mv = 0; mv < g.order(); ++mv) {
    if (!is_median[mv]) continue;
    for (Vertex v2 : g.neighbors(mv)) {
      if (is_median[v2]) continue;
      std::vector<std::pair<Vertex, Vertex>> stack;  // (vertex, its parent)
      stack.emplace_back(v2, mv);
      if (s[v2] <= s[mv]) return false;
      while (!stack.empty()) {
        auto [u, p] = stack.back();
        stack.pop_back();
        for (Vertex x : g.neighbors(u)) {
          if (x == p) continue;
          if (s[x] <= s[u]) return false;
          stack.emplace_back(x, u);
        }
      }
    }
  }
  return true;
}

}  // namespace statseq
