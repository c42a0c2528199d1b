#include "statseq/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace statseq {

namespace {

// Post-order AHU with an explicit stack; () for a leaf, children encodings
// sorted before wrapping.
CanonicalForm encode_rooted(const Graph& g, Vertex root) {
  const int n = g.order();
  std::vector<Vertex> order;
  order.reserve(n);
  std::vector<Vertex> parent(n, -2);
  order.push_back(root);
  parent[root] = -1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    Vertex u = order[i];
    for (Vertex w : g.neighbors(u)) {
      if (parent[w] == -2) {
        parent[w] = u;
        order.push_back(w);
      }
    }
  }
  std::vector<std::vector<std::string>> child_codes(n);
  for (std::size_t i = order.size(); i-- > 0;) {
    Vertex u = order[i];
    auto& codes = child_codes[u];
    std::sort(codes.begin(), codes.end());
    std::string enc = "(";
    for (const auto& c : codes) enc += c;
    enc += ")";
    if (u == root) return enc;
    child_codes[parent[u]].push_back(std::move(enc));
    child_codes[u].clear();
  }
  return "()";  // single vertex
}

std::vector<Vertex> tree_centers(const Graph& g) {
  // peel leaves layer by layer
  const int n = g.order();
  if (n == 1) return {0};
  std::vector<int> degree(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    if (degree[v] == 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    std::vector<Vertex> next;
    remaining -= static_cast<int>(layer.size());
    for (Vertex v : layer) {
      for (Vertex w : g.neighbors(v)) {
        if (--degree[w] == 1) next.push_back(w);
      }
      degree[v] = 0;
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

Tree tree_from_level_sequence(const std::vector<int>& levels) {
  const int n = static_cast<int>(levels.size());
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  std::vector<Vertex> last_at_level(n + 2, -1);
  for (int i = 0; i < n; ++i) {
    if (levels[i] > 1) edges.emplace_back(i, last_at_level[levels[i] - 1]);
    last_at_level[levels[i]] = i;
  }
  return Tree(n, edges);
}

// cp-algorithms style linear Prufer decode.
std::vector<Edge> prufer_decode(const std::vector<int>& code, int n) {
  std::vector<int> degree(n, 1);
  for (int x : code) ++degree[x];
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int x : code) {
    edges.emplace_back(leaf, x);
    if (--degree[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);
  return edges;
}

}  // namespace

CanonicalForm rooted_canonical_form(const Tree& t, Vertex root) {
  if (root < 0 || root >= t.order()) throw std::invalid_argument("root out of range");
  return encode_rooted(t.graph(), root);
}

CanonicalForm canonical_form(const Tree& t) {
  auto centers = tree_centers(t.graph());
  CanonicalForm best = encode_rooted(t.graph(), centers[0]);
  if (centers.size() == 2) {
    CanonicalForm other = encode_rooted(t.graph(), centers[1]);
    if (other < best) best = other;
  }
  return best;
}

FreeTreeEnumerator::FreeTreeEnumerator(int n) : n_(n) {
  if (n < 1 || n > kEnumerationCap)
    throw std::invalid_argument("enumeration order out of range");
  // first canonical level sequence: the path 1,2,...,n
  levels_.resize(n);
  for (int i = 0; i < n; ++i) levels_[i] = i + 1;
}

bool FreeTreeEnumerator::advance() {
  // Beyer-Hedetniemi successor: find the rightmost level > 2, reattach by
  // repeating the block that starts at its parent.
  int p = -1;
  for (int i = n_ - 1; i >= 0; --i) {
    if (levels_[i] > 2) {
      p = i;
      break;
    }
  }
  if (p < 0) return false;
  int q = p - 1;
  while (levels_[q] != levels_[p] - 1) --q;
  for (int i = p; i < n_; ++i) levels_[i] = levels_[i - (p - q)];
  return true;
}

std::optional<Tree> FreeTreeEnumerator::next() {
  while (!done_) {
    if (first_) {
      first_ = false;
    } else if (!advance()) {
      done_ = true;
      break;
    }
    Tree t = tree_from_level_sequence(levels_);
    auto form = canonical_form(t);
    if (seen_.insert(std::move(form)).second) return t;
  }
  return std::nullopt;
}

PruferTreeEnumerator::PruferTreeEnumerator(int n) : n_(n) {
  if (n < 1 || n > kPruferEnumerationCap)
    throw std::invalid_argument("enumeration order out of range for the Prufer backend");
  if (n > 2) code_.assign(n - 2, 0);
}

std::optional<Tree> PruferTreeEnumerator::next() {
  if (n_ <= 2) {
    if (done_) return std::nullopt;
    done_ = true;
    if (n_ == 1) return Tree(1, {});
    return Tree(2, {{0, 1}});
  }
  while (!done_) {
    if (first_) {
      first_ = false;
    } else {
      // advance the code as a base-n counter
      int i = static_cast<int>(code_.size()) - 1;
      while (i >= 0 && code_[i] == n_ - 1) code_[i--] = 0;
      if (i < 0) {
        done_ = true;
        break;
      }
      ++code_[i];
    }
    Tree t(n_, prufer_decode(code_, n_));
    auto form = canonical_form(t);
    if (seen_.insert(std::move(form)).second) return t;
  }
  return std::nullopt;
}

std::vector<Tree> enumerate_free_trees(int n) {
  std::vector<Tree> trees;
  FreeTreeEnumerator en(n);
  while (auto t = en.next()) trees.push_back(std::move(*t));
  return trees;
}

void for_each_free_tree(int n, const std::function<bool(const Tree&)>& fn) {
  FreeTreeEnumerator en(n);
  while (auto t = en.next())
    if (!fn(*t)) return;
}

std::vector<Tree> realize_exhaustive(const StatusSequence& seq) {
  const int n = static_cast<int>(seq.size());
  if (n < 1 || n > kEnumerationCap)
    throw std::invalid_argument("sequence length out of enumeration range");
  StatusSequence sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Tree> found;
  for_each_free_tree(n, [&](const Tree& t) {
    auto s = tree_statuses(t);
    std::sort(s.begin(), s.end());
    if (s == sorted) found.push_back(t);
    return true;
  });
  return found;
}

bool status_unique_in_trees(const Tree& t) {
  if (t.order() > kEnumerationCap)
    throw std::invalid_argument("order out of enumeration range");
  auto target = status_sequence(t.graph());
  auto self = canonical_form(t);
  bool unique = true;
  for_each_free_tree(t.order(), [&](const Tree& other) {
    auto s = tree_statuses(other);
    std::sort(s.begin(), s.end());
    if (s == target && canonical_form(other) != self) {
      unique = false;
      return false;
    }
    return true;
  });
  return unique;
}

}  // namespace statseq
