#include "statseq/families.hpp"

#include <algorithm>
#include <stdexcept>

namespace statseq {

namespace {

Tree make_path(int n) {
  if (n < 1) throw std::invalid_argument("path order must be at least 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Tree(n, edges);
}

Tree make_star(int leaves) {
  if (leaves < 1) throw std::invalid_argument("star needs at least one leaf");
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Tree(leaves + 1, edges);
}

Tree make_double_star(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("double star needs a, b >= 1");
  std::vector<Edge> edges{{0, 1}};
  Vertex next = 2;
  for (int i = 0; i < a; ++i) edges.emplace_back(0, next++);
  for (int i = 0; i < b; ++i) edges.emplace_back(1, next++);
  return Tree(next, edges);
}

// star or balanced double star with b pendants added to every leaf
Tree make_family_t(bool star_base, int a, int b) {
  if (b < 1) throw std::invalid_argument("family T needs b >= 1");
  std::vector<Edge> edges;
  std::vector<Vertex> base_leaves;
  Vertex next = 0;
  if (star_base) {
    if (a < 2) throw std::invalid_argument("family T star base needs at least 2 leaves");
    Vertex center = next++;
    for (int i = 0; i < a; ++i) {
      base_leaves.push_back(next);
      edges.emplace_back(center, next++);
    }
  } else {
    if (a < 1) throw std::invalid_argument("family T double-star base needs a >= 1");
    Vertex u = next++, v = next++;
    edges.emplace_back(u, v);
    for (int i = 0; i < a; ++i) {
      base_leaves.push_back(next);
      edges.emplace_back(u, next++);
    }
    for (int i = 0; i < a; ++i) {
      base_leaves.push_back(next);
      edges.emplace_back(v, next++);
    }
  }
  for (Vertex leaf : base_leaves)
    for (int i = 0; i < b; ++i) edges.emplace_back(leaf, next++);
  return Tree(next, edges);
}

Tree make_spider(const std::vector<int>& legs) {
  if (legs.size() < 3)
    throw std::invalid_argument("spider needs at least 3 legs");
  std::vector<Edge> edges;
  Vertex next = 1;
  for (int len : legs) {
    if (len < 1) throw std::invalid_argument("spider legs must have length >= 1");
    Vertex prev = 0;
    for (int i = 0; i < len; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Tree(next, edges);
}

}  // namespace

Tree generate(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::kPath:
      return make_path(spec.n);
    case FamilyKind::kStar:
      return make_star(spec.a);
    case FamilyKind::kDoubleStar:
      return make_double_star(spec.a, spec.b);
    case FamilyKind::kBalancedDoubleStar:
      return make_double_star(spec.a, spec.a);
    case FamilyKind::kFamilyTStar:
      return make_family_t(true, spec.a, spec.b);
    case FamilyKind::kFamilyTDoubleStar:
      return make_family_t(false, spec.a, spec.b);
    case FamilyKind::kSpider:
      return make_spider(spec.legs);
  }
  throw std::invalid_argument("unknown family kind");
}

KBoundResult check_k_bound(const Tree& t) {
  KBoundResult r;
  r.k = distinct_status_count(t.graph());
  r.lower_bound = (metrics(t).diameter + 2) / 2;  // ceil((diam + 1) / 2)
  r.tight = (r.k == r.lower_bound);
  return r;
}

bool classify_k2(const Tree& t) {
  auto m = metrics(t);
  if (m.diameter == 2) return true;  // star
  if (m.diameter != 3) return false;
  // diameter-3 trees are double stars; balanced means equal hub degrees
  return t.degree(m.center[0]) == t.degree(m.center[1]);
}

bool classify_k3(const Tree& t) {
  const Graph& g = t.graph();
  auto m = metrics(t);

  auto stem_leaf_count = [&](Vertex stem, Vertex towards_center) -> int {
    // children of a stem must all be leaves; -1 flags a deeper vertex
    int count = 0;
    for (Vertex w : g.neighbors(stem)) {
      if (w == towards_center) continue;
      if (g.degree(w) != 1) return -1;
      ++count;
    }
    return count;
  };

  if (m.diameter == 4) {
    Vertex r = m.center[0];
    if (g.degree(r) < 2) return false;
    int b = -1;
    for (Vertex stem : g.neighbors(r)) {
      int count = stem_leaf_count(stem, r);
      if (count < 1) return false;  // leaf neighbor of the root, or too deep
      if (b < 0) b = count;
      if (count != b) return false;
    }
    return true;
  }
  if (m.diameter == 5) {
    Vertex c1 = m.center[0], c2 = m.center[1];
    if (g.degree(c1) != g.degree(c2)) return false;  // unbalanced base
    if (g.degree(c1) < 2) return false;
    int b = -1;
    for (Vertex c : {c1, c2}) {
      Vertex other = (c == c1) ? c2 : c1;
      for (Vertex stem : g.neighbors(c)) {
        if (stem == other) continue;
        int count = stem_leaf_count(stem, c);
        if (count < 1) return false;
        if (b < 0) b = count;
        if (count != b) return false;
      }
    }
    return true;
  }
  return false;
}

}  // namespace statseq
