#include "statseq/realize_injective.hpp"

#include <algorithm>
#include <limits>

namespace statseq {

InjectiveSequence InjectiveSequence::from_values(std::vector<Status> values) {
  if (values.empty()) throw std::invalid_argument("sequence must be nonempty");
  std::sort(values.begin(), values.end(), std::greater<>());
  if (std::adjacent_find(values.begin(), values.end()) != values.end())
    throw NotInjectiveError("sequence is not injective (duplicate value)");
  if (values.size() == 1 && values[0] == 0) return InjectiveSequence(std::move(values));
  for (Status v : values) {
    if (v <= 0) throw std::invalid_argument("status values must be positive");
    if (v > std::numeric_limits<Status>::max() / 4)
      throw std::invalid_argument("status value too large");
  }
  return InjectiveSequence(std::move(values));
}

std::optional<Realization> realize_injective(const InjectiveSequence& seq) {
  const int n = seq.size();
  const auto& a = seq.values();

  std::vector<Vertex> parent(n, -1);
  std::vector<std::int64_t> descendants(n, 0);
  std::vector<Edge> edges;
  edges.reserve(n - 1);

  // a is strictly decreasing, so a value is located by binary search; the
  // match must lie strictly after i (unprocessed suffix).
  auto find_value = [&](Status target) -> int {
    auto it = std::lower_bound(a.begin(), a.end(), target, std::greater<>());
    if (it == a.end() || *it != target) return -1;
    return static_cast<int>(it - a.begin());
  };

  for (int i = 0; i + 1 < n; ++i) {
    Status parent_status = a[i] - n + 2 * (descendants[i] + 1);
    int j = find_value(parent_status);
    if (j <= i) return std::nullopt;  // absent, or already placed
    parent[i] = j;
    descendants[j] += descendants[i] + 1;
    edges.emplace_back(i, j);
  }

  // parents always point forward, so the edge set is a tree by construction
  Tree t(n, edges);
  Realization r{std::move(t), std::move(parent), a};
  if (!verify_realization(r.tree, seq)) return std::nullopt;
  return r;
}

bool verify_realization(const Tree& t, const InjectiveSequence& seq) {
  if (t.order() != seq.size()) return false;
  auto s = tree_statuses(t);
  std::sort(s.begin(), s.end(), std::greater<>());
  return s == seq.values();
}

}  // namespace statseq
