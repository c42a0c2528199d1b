#include "statseq/hardness.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace statseq {

ThreePartitionInstance::ThreePartitionInstance(std::vector<Status> elements)
    : elements_(std::move(elements)), sum_(0) {
  if (elements_.empty() || elements_.size() % 3 != 0)
    throw std::invalid_argument("element count must be a positive multiple of 3");
  for (Status a : elements_) {
    if (a <= 0) throw std::invalid_argument("elements must be positive");
    if (a > kMaxElement) throw std::invalid_argument("element too large");
    sum_ += a;
  }
  if (sum_ % m() != 0)
    throw std::invalid_argument("target sum B = A/m must be integral");
}

bool ThreePartitionInstance::satisfies_window() const {
  for (Status a : elements_) {
    if (!(4 * a > B() && 2 * a < B())) return false;
  }
  return true;
}

TripletPartition::TripletPartition(const ThreePartitionInstance& inst,
                                   std::vector<std::array<int, 3>> triples)
    : triples_(std::move(triples)) {
  if (static_cast<int>(triples_.size()) != inst.m())
    throw std::invalid_argument("partition must have exactly m triples");
  std::vector<char> used(inst.n(), 0);
  for (auto& tr : triples_) {
    std::sort(tr.begin(), tr.end());
    Status sum = 0;
    for (int idx : tr) {
      if (idx < 0 || idx >= inst.n()) throw std::invalid_argument("element index out of range");
      if (used[idx]) throw std::invalid_argument("element index used twice");
      used[idx] = 1;
      sum += inst.elements()[idx];
    }
    if (sum != inst.B()) throw std::invalid_argument("triple does not sum to B");
  }
  std::sort(triples_.begin(), triples_.end());
}

Status reduction_root_status(const ThreePartitionInstance& inst) {
  return 3 * inst.A() + 7 * inst.m();
}

Status reduction_triplet_status(const ThreePartitionInstance& inst) {
  return 4 * inst.A() - 2 * inst.B() + 11 * inst.m() - 7;
}

Status reduction_element_status(const ThreePartitionInstance& inst, Status a_i) {
  return 5 * inst.A() - 2 * inst.B() - 2 * a_i + 15 * inst.m() - 8;
}

Status reduction_leaf_status(const ThreePartitionInstance& inst, Status a_i) {
  return 6 * inst.A() - 2 * inst.B() - 2 * a_i + 19 * inst.m() - 9;
}

StatusSequence reduce_3partition(const ThreePartitionInstance& inst) {
  if (!inst.satisfies_window())
    throw std::invalid_argument("reduction requires B/4 < a_i < B/2 for all elements");
  StatusSequence seq;
  seq.reserve(static_cast<std::size_t>(inst.A()) + 4 * inst.m() + 1);
  seq.push_back(reduction_root_status(inst));
  for (int k = 0; k < inst.m(); ++k) seq.push_back(reduction_triplet_status(inst));
  for (Status a : inst.elements()) {
    seq.push_back(reduction_element_status(inst, a));
    for (Status c = 0; c < a; ++c) seq.push_back(reduction_leaf_status(inst, a));
  }
  std::sort(seq.begin(), seq.end());
  return seq;
}

Tree build_gadget_tree(const ThreePartitionInstance& inst, const TripletPartition& partition) {
  std::vector<Edge> edges;
  const Vertex root = 0;
  Vertex next = 1;
  for (const auto& triple : partition.triples()) {
    Vertex tv = next++;
    edges.emplace_back(root, tv);
    for (int idx : triple) {
      Vertex ev = next++;
      edges.emplace_back(tv, ev);
      for (Status c = 0; c < inst.elements()[idx]; ++c) edges.emplace_back(ev, next++);
    }
  }
  return Tree(next, edges);
}

ThreePartitionInstance pad_instance(const ThreePartitionInstance& inst) {
  Status constant = 3 * inst.B() + 19 * inst.m() + 9;
  std::vector<Status> padded = inst.elements();
  for (Status& a : padded) a += constant;
  return ThreePartitionInstance(std::move(padded));
}

TripletPartition extract_partition(const Tree& t, const ThreePartitionInstance& inst) {
  const Graph& g = t.graph();
  if (t.order() != inst.A() + 4 * inst.m() + 1)
    throw std::invalid_argument("tree order does not match the reduced sequence size");
  auto s = tree_statuses(t);
  const Status root_status = reduction_root_status(inst);
  const Status triplet_status = reduction_triplet_status(inst);

  Vertex root = -1;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (s[v] == root_status) {
      if (root >= 0) throw std::invalid_argument("root status is not unique in the tree");
      root = v;
    }
  }
  if (root < 0) throw std::invalid_argument("no vertex carries the root status");
  if (g.degree(root) != inst.m())
    throw std::invalid_argument("root degree does not equal m");

  // value -> indices still assignable, smallest index first
  std::map<Status, std::vector<int>> index_pool;
  for (int i = inst.n(); i-- > 0;) index_pool[inst.elements()[i]].push_back(i);

  std::vector<std::array<int, 3>> triples;
  for (Vertex tv : g.neighbors(root)) {
    if (s[tv] != triplet_status)
      throw std::invalid_argument("root neighbor does not carry the triplet status");
    std::array<int, 3> triple{};
    int slot = 0;
    Status sum = 0;
    for (Vertex ev : g.neighbors(tv)) {
      if (ev == root) continue;
      if (slot == 3) throw std::invalid_argument("triplet vertex has more than three children");
      // leaf count determines the element value; the status must agree
      Status leaf_count = 0;
      for (Vertex lv : g.neighbors(ev)) {
        if (lv == tv) continue;
        if (g.degree(lv) != 1)
          throw std::invalid_argument("element child is not a leaf");
        ++leaf_count;
      }
      if (s[ev] != reduction_element_status(inst, leaf_count))
        throw std::invalid_argument("element vertex status does not match its leaf count");
      for (Vertex lv : g.neighbors(ev)) {
        if (lv == tv) continue;
        if (s[lv] != reduction_leaf_status(inst, leaf_count))
          throw std::invalid_argument("leaf status does not match its element");
      }
      auto pool = index_pool.find(leaf_count);
      if (pool == index_pool.end() || pool->second.empty())
        throw std::invalid_argument("leaf count is not an available element value");
      triple[slot++] = pool->second.back();
      pool->second.pop_back();
      sum += leaf_count;
    }
    if (slot != 3) throw std::invalid_argument("triplet vertex does not have three children");
    if (sum != inst.B()) throw std::invalid_argument("triple does not sum to B");
    triples.push_back(triple);
  }
  return TripletPartition(inst, std::move(triples));
}

namespace {

bool backtrack_triples(const ThreePartitionInstance& inst, std::vector<char>& used,
                       std::vector<std::array<int, 3>>& acc) {
  const int n = inst.n();
  int first = 0;
  while (first < n && used[first]) ++first;
  if (first == n) return true;
  used[first] = 1;
  for (int second = first + 1; second < n; ++second) {
    if (used[second]) continue;
    used[second] = 1;
    Status need = inst.B() - inst.elements()[first] - inst.elements()[second];
    for (int third = second + 1; third < n; ++third) {
      if (used[third] || inst.elements()[third] != need) continue;
      used[third] = 1;
      acc.push_back({first, second, third});
      if (backtrack_triples(inst, used, acc)) return true;
      acc.pop_back();
      used[third] = 0;
    }
    used[second] = 0;
  }
  used[first] = 0;
  return false;
}

}  // namespace

std::optional<TripletPartition> brute_force_3partition(const ThreePartitionInstance& inst) {
  if (inst.n() > 15) throw std::invalid_argument("instance too large for brute force");
  std::vector<char> used(inst.n(), 0);
  std::vector<std::array<int, 3>> acc;
  if (!backtrack_triples(inst, used, acc)) return std::nullopt;
  return TripletPartition(inst, std::move(acc));
}

}  // namespace statseq
