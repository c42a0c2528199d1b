#include "statseq/partitions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace statseq {

Partition::Partition(int n, std::vector<std::vector<Vertex>> parts)
    : n_(n), parts_(std::move(parts)), part_of_(n, -1) {
  for (std::size_t p = 0; p < parts_.size(); ++p) {
    auto& part = parts_[p];
    if (part.empty()) throw std::invalid_argument("partition parts must be nonempty");
    std::sort(part.begin(), part.end());
    for (Vertex v : part) {
      if (v < 0 || v >= n) throw std::invalid_argument("partition member out of range");
      if (part_of_[v] != -1) throw std::invalid_argument("partition parts must be disjoint");
      part_of_[v] = static_cast<int>(p);
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (part_of_[v] == -1) throw std::invalid_argument("partition must cover all vertices");
}

Partition Partition::normalized() const {
  auto sorted = parts_;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return Partition(n_, std::move(sorted));
}

Partition status_partition(const Graph& g) {
  auto s = status_by_vertex(g);
  std::map<Status, int> part_index;
  std::vector<std::vector<Vertex>> parts;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto [it, inserted] = part_index.try_emplace(s[v], static_cast<int>(parts.size()));
    if (inserted) parts.emplace_back();
    parts[it->second].push_back(v);
  }
  return Partition(g.order(), std::move(parts));
}

Partition distance_partition(const Graph& g, Vertex v) {
  auto dist = bfs_distances(g, v);
  int ecc = *std::max_element(dist.begin(), dist.end());
  std::vector<std::vector<Vertex>> parts(ecc + 1);
  for (Vertex u = 0; u < g.order(); ++u) parts[dist[u]].push_back(u);
  return Partition(g.order(), std::move(parts));
}

namespace {

int base_entry(const DistanceMatrix& d, QuotientBase base, Vertex u, Vertex v) {
  if (base == QuotientBase::kDistance) return d.at(u, v);
  return d.at(u, v) == 1 ? 1 : 0;
}

}  // namespace

QuotientMatrix quotient_matrix(const Graph& g, const Partition& p, QuotientBase base) {
  auto d = all_pairs_distances(g);
  QuotientMatrix q;
  q.base = base;
  q.p = p.size();
  q.entries.assign(static_cast<std::size_t>(q.p) * q.p, Rational{});
  for (int i = 0; i < q.p; ++i) {
    for (int j = 0; j < q.p; ++j) {
      std::int64_t sum = 0;
      for (Vertex u : p.parts()[i])
        for (Vertex v : p.parts()[j]) sum += base_entry(d, base, u, v);
      q.entries[static_cast<std::size_t>(i) * q.p + j] =
          Rational(sum, static_cast<std::int64_t>(p.parts()[i].size()));
    }
  }
  return q;
}

bool is_equitable(const Graph& g, const Partition& p, QuotientBase base) {
  auto d = all_pairs_distances(g);
  for (int i = 0; i < p.size(); ++i) {
    for (int j = 0; j < p.size(); ++j) {
      std::int64_t expected = -1;
      for (Vertex u : p.parts()[i]) {
        std::int64_t row = 0;
        for (Vertex v : p.parts()[j]) row += base_entry(d, base, u, v);
        if (expected < 0) expected = row;
        if (row != expected) return false;
      }
    }
  }
  return true;
}

bool refines(const Partition& p, const Partition& q) {
  if (p.order() != q.order()) throw std::invalid_argument("partitions over different vertex sets");
  for (const auto& part : p.parts()) {
    int target = q.part_of(part.front());
    for (Vertex v : part)
      if (q.part_of(v) != target) return false;
  }
  return true;
}

namespace {

// ---- tree orbits via canonical subtree codes -------------------------------
//
// Root the tree at its center; a bicentral tree gets a virtual root above
// the two centers so that the center swap is an ordinary child permutation.
// Two vertices lie in the same orbit iff their parents do and their rooted
// subtrees have equal canonical codes.
AutomorphismGroupOrbits tree_orbits(const Tree& t) {
  const Graph& g = t.graph();
  const int n = g.order();
  auto centers = metrics(t).center;

  const int virtual_root = n;
  const bool bicentral = centers.size() == 2;
  int root = bicentral ? virtual_root : centers[0];

  std::vector<std::vector<Vertex>> children(n + 1);
  std::vector<int> parent(n + 1, -1);
  std::vector<int> order;  // BFS order, parents before children
  order.push_back(root);
  if (bicentral) {
    parent[centers[0]] = virtual_root;
    parent[centers[1]] = virtual_root;
    children[virtual_root] = {centers[0], centers[1]};
    order.push_back(centers[0]);
    order.push_back(centers[1]);
  }
  for (std::size_t i = bicentral ? 1 : 0; i < order.size(); ++i) {
    Vertex u = order[i];
    for (Vertex w : g.neighbors(u)) {
      if (w == parent[u] || (bicentral && parent[w] == virtual_root)) continue;
      parent[w] = u;
      children[u].push_back(w);
      order.push_back(w);
    }
  }

  // canonical code ids, bottom-up
  std::map<std::vector<int>, int> code_of;
  std::vector<int> code(n + 1, -1);
  for (std::size_t i = order.size(); i-- > 0;) {
    int u = order[i];
    std::vector<int> child_codes;
    child_codes.reserve(children[u].size());
    for (Vertex c : children[u]) child_codes.push_back(code[c]);
    std::sort(child_codes.begin(), child_codes.end());
    auto [it, inserted] = code_of.try_emplace(child_codes, static_cast<int>(code_of.size()));
    code[u] = it->second;
  }

  // orbit labels, top-down: (parent label, own code) interned
  std::map<std::pair<int, int>, int> label_of;
  std::vector<int> label(n + 1, -1);
  label[root] = 0;
  int next_label = 1;
  for (std::size_t i = (root == virtual_root) ? 1 : 0; i < order.size(); ++i) {
    int u = order[i];
    if (u == root) continue;
    auto key = std::make_pair(label[parent[u]], code[u]);
    auto [it, inserted] = label_of.try_emplace(key, next_label);
    if (inserted) ++next_label;
    label[u] = it->second;
  }

  std::map<int, std::vector<Vertex>> grouped;
  for (Vertex v = 0; v < n; ++v) grouped[label[v]].push_back(v);
  std::vector<std::vector<Vertex>> parts;
  parts.reserve(grouped.size());
  for (auto& [lbl, members] : grouped) parts.push_back(std::move(members));

  // |Aut| = product over vertices of the factorials of equal-child-code
  // multiplicities; the virtual root contributes the center swap
  unsigned __int128 group = 1;
  bool overflow = false;
  for (int u = 0; u < static_cast<int>(children.size()); ++u) {
    std::map<int, int> mult;
    for (Vertex c : children[u]) ++mult[code[c]];
    for (auto& [cc, count] : mult) {
      for (int f = 2; f <= count && !overflow; ++f) {
        group *= static_cast<unsigned>(f);
        if (group > static_cast<unsigned __int128>(UINT64_MAX)) overflow = true;
      }
      if (overflow) break;
    }
  }

  AutomorphismGroupOrbits result{Partition(n, std::move(parts)).normalized(), std::nullopt};
  if (!overflow) result.group_order = static_cast<std::uint64_t>(group);
  return result;
}

// ---- general graphs: backtracking over invariant-refined maps --------------

struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

AutomorphismGroupOrbits general_orbits(const Graph& g, int cap) {
  const int n = g.order();
  if (n > cap) throw std::invalid_argument("order exceeds the automorphism search cap");

  auto d = all_pairs_distances(g);
  // vertex invariant: degree, status, sorted distance profile
  std::vector<std::vector<int>> invariant(n);
  for (Vertex v = 0; v < n; ++v) {
    std::vector<int> inv;
    inv.push_back(g.degree(v));
    std::vector<int> profile(n);
    for (Vertex u = 0; u < n; ++u) profile[u] = d.at(v, u);
    inv.push_back(static_cast<int>(d.row_sum(v)));
    std::sort(profile.begin(), profile.end());
    inv.insert(inv.end(), profile.begin(), profile.end());
    invariant[v] = std::move(inv);
  }

  std::vector<char> adj(static_cast<std::size_t>(n) * n, 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex w : g.neighbors(u)) adj[static_cast<std::size_t>(u) * n + w] = 1;

  std::uint64_t count = 0;
  DisjointSet dsu(n);
  std::vector<Vertex> image(n, -1);
  std::vector<char> used(n, 0);

  std::function<void(int)> assign = [&](int k) {
    if (k == n) {
      ++count;
      for (Vertex v = 0; v < n; ++v) dsu.unite(v, image[v]);
      return;
    }
    for (Vertex c = 0; c < n; ++c) {
      if (used[c] || invariant[c] != invariant[k]) continue;
      bool ok = true;
      for (int t = 0; t < k && ok; ++t)
        ok = adj[static_cast<std::size_t>(k) * n + t] ==
             adj[static_cast<std::size_t>(c) * n + image[t]];
      if (!ok) continue;
      image[k] = c;
      used[c] = 1;
      assign(k + 1);
      used[c] = 0;
    }
  };
  assign(0);

  std::map<int, std::vector<Vertex>> grouped;
  for (Vertex v = 0; v < n; ++v) grouped[dsu.find(v)].push_back(v);
  std::vector<std::vector<Vertex>> parts;
  for (auto& [r, members] : grouped) parts.push_back(std::move(members));
  return AutomorphismGroupOrbits{Partition(n, std::move(parts)).normalized(), count};
}

}  // namespace

AutomorphismGroupOrbits orbit_partition(const Graph& g, int general_cap) {
  if (g.edge_count() == g.order() - 1) return tree_orbits(Tree(g));
  return general_orbits(g, general_cap);
}

AutomorphismGroupOrbits orbit_partition_backtracking(const Graph& g, int cap) {
  return general_orbits(g, cap);
}

Graph generate_gm(int m) {
  if (m < 3) throw std::invalid_argument("the construction needs m >= 3");
  const int n = 2 * m * m + 2;
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      edges.emplace_back(gm_vertex_a(), gm_vertex_in_a(m, i, j));
      edges.emplace_back(gm_vertex_b(), gm_vertex_in_b(m, i, j));
      // A is one cycle of length m^2
      if (j != m - 1)
        edges.emplace_back(gm_vertex_in_a(m, i, j), gm_vertex_in_a(m, i, j + 1));
      else
        edges.emplace_back(gm_vertex_in_a(m, i, j), gm_vertex_in_a(m, (i + 1) % m, 0));
      // B is m disjoint m-cycles
      edges.emplace_back(gm_vertex_in_b(m, i, j), gm_vertex_in_b(m, i, (j + 1) % m));
      // the twisted matching
      if (i != j || i == m - 1) {
        edges.emplace_back(gm_vertex_in_a(m, i, j), gm_vertex_in_b(m, i, j));
      } else {
        int k = (i + 1) % (m - 1);
        edges.emplace_back(gm_vertex_in_a(m, i, i), gm_vertex_in_b(m, k, k));
      }
    }
  }
  // cycle edges were emitted once per endpoint pair already; dedupe
  for (auto& [u, v] : edges)
    if (u > v) std::swap(u, v);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(n, edges);
}

Partition gm_four_part_partition(int m) {
  std::vector<std::vector<Vertex>> parts(4);
  parts[0] = {gm_vertex_a()};
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      parts[1].push_back(gm_vertex_in_a(m, i, j));
      parts[2].push_back(gm_vertex_in_b(m, i, j));
    }
  parts[3] = {gm_vertex_b()};
  return Partition(2 * m * m + 2, std::move(parts));
}

Prop45Report prop45_report(const Graph& g) {
  Prop45Report report;
  auto d = all_pairs_distances(g);
  const int n = g.order();
  std::vector<Status> s(n);
  std::vector<int> ecc(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    s[v] = d.row_sum(v);
    for (Vertex u = 0; u < n; ++u) ecc[v] = std::max(ecc[v], d.at(v, u));
  }

  std::map<Vertex, QuotientMatrix> cache;
  auto quotient_of = [&](Vertex v) -> const QuotientMatrix& {
    auto it = cache.find(v);
    if (it == cache.end())
      it = cache.emplace(v, quotient_matrix(g, distance_partition(g, v), QuotientBase::kDistance))
               .first;
    return it->second;
  };

  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (s[u] != s[v]) continue;
      Prop45Pair pair{u, v, ecc[u] == ecc[v], false};
      if (pair.same_eccentricity) pair.quotients_match = (quotient_of(u) == quotient_of(v));
      report.all_pairs_match = report.all_pairs_match && pair.quotients_match;
      report.pairs.push_back(pair);
    }
  }
  report.status_partition_equitable =
      is_equitable(g, status_partition(g), QuotientBase::kAdjacency);
  report.equivalence_holds = (report.all_pairs_match == report.status_partition_equitable);
  return report;
}

bool is_distance_mean_regular(const Graph& g) {
  const int n = g.order();
  auto d = all_pairs_distances(g);
  int diam = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) diam = std::max(diam, d.at(u, v));

  const int k = diam + 1;
  // joint[u][h][i*k+j] accumulates |G_i(u) ∩ G_j(v)| over v at distance h
  std::vector<std::vector<std::vector<std::int64_t>>> joint(
      n, std::vector<std::vector<std::int64_t>>(k, std::vector<std::int64_t>(k * k, 0)));
  std::vector<std::vector<std::int64_t>> at_distance(n, std::vector<std::int64_t>(k, 0));

  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      int h = d.at(u, v);
      ++at_distance[u][h];
      auto& acc = joint[u][h];
      for (Vertex w = 0; w < n; ++w) acc[d.at(u, w) * k + d.at(v, w)] += 1;
    }
  }

  for (int h = 0; h < k; ++h) {
    for (int cell = 0; cell < k * k; ++cell) {
      bool have_reference = false;
      Rational reference;
      for (Vertex u = 0; u < n; ++u) {
        if (at_distance[u][h] == 0) {
          // a vertex with no one at distance h while another has some
          for (Vertex u2 = 0; u2 < n; ++u2)
            if (at_distance[u2][h] != 0) return false;
          break;
        }
        Rational mean(joint[u][h][cell], at_distance[u][h]);
        if (!have_reference) {
          reference = mean;
          have_reference = true;
        } else if (mean != reference) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace statseq
