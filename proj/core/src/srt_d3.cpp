#include "statseq/srt_d3.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace statseq {

std::optional<BranchProfile> branch_profile(int n, Status s_i, Status s_j) {
  Status spread = n - s_j + s_i;
  if (spread % 2 != 0) return std::nullopt;
  Status leaf_count = spread / 2 - 1;
  if (leaf_count < 0) return std::nullopt;
  return BranchProfile{s_i, s_j, s_j + n - 2, leaf_count};
}

FeasibilitySystem build_system(const StatusSequence& seq, const CenterConfig& config) {
  const int n = static_cast<int>(seq.size());

  std::map<Status, std::int64_t> remaining;
  for (Status v : seq) ++remaining[v];
  auto take = [&](Status v) {
    auto it = remaining.find(v);
    if (it == remaining.end() || it->second == 0)
      throw std::invalid_argument("configuration value missing from the sequence");
    if (--it->second == 0) remaining.erase(it);
  };
  take(config.root_status);
  for (Status s_i : config.neighbor_statuses) take(s_i);

  std::vector<std::int64_t> subtree_size(config.neighbor_statuses.size());
  for (std::size_t i = 0; i < config.neighbor_statuses.size(); ++i) {
    Status spread = n + config.root_status - config.neighbor_statuses[i];
    if (spread % 2 != 0)
      throw std::invalid_argument("neighbor status fails the parity condition");
    subtree_size[i] = spread / 2;
    if (subtree_size[i] < 1)
      throw std::invalid_argument("neighbor subtree would be empty");
  }

  FeasibilitySystem sys;
  sys.n = n;
  sys.config = config;

  for (std::size_t i = 0; i < config.neighbor_statuses.size(); ++i) {
    for (const auto& [j_value, mult] : remaining) {
      auto prof = branch_profile(n, config.neighbor_statuses[i], j_value);
      if (!prof) continue;
      if (1 + prof->leaf_count > subtree_size[i] - 1) continue;  // cannot fit even once
      if (prof->leaf_count > 0 && !remaining.count(prof->leaf_status)) continue;
      sys.vars.push_back({static_cast<int>(i), *prof});
    }
  }

  const std::size_t nv = sys.vars.size();
  // multiplicity rows, one per distinct remaining value
  for (const auto& [value, mult] : remaining) {
    FeasibilitySystem::Row row;
    row.coeffs.assign(nv, 0);
    row.target = mult;
    for (std::size_t k = 0; k < nv; ++k) {
      const auto& p = sys.vars[k].profile;
      std::int64_t c = 0;
      if (p.j_status == value) c += 1;
      if (p.leaf_status == value) c += p.leaf_count;
      row.coeffs[k] = c;
    }
    sys.rows.push_back(std::move(row));
  }
  // one row per neighbor instance: branch vertices below i, excluding i
  for (std::size_t i = 0; i < config.neighbor_statuses.size(); ++i) {
    FeasibilitySystem::Row row;
    row.coeffs.assign(nv, 0);
    row.target = subtree_size[i] - 1;
    for (std::size_t k = 0; k < nv; ++k)
      if (sys.vars[k].neighbor_instance == static_cast<int>(i))
        row.coeffs[k] = 1 + sys.vars[k].profile.leaf_count;
    sys.rows.push_back(std::move(row));
  }
  // root status row: s(r) = |I| + 2 (depth-2 count) + 3 (depth-3 count)
  {
    FeasibilitySystem::Row row;
    row.coeffs.assign(nv, 0);
    row.target = config.root_status -
                 static_cast<std::int64_t>(config.neighbor_statuses.size());
    for (std::size_t k = 0; k < nv; ++k)
      row.coeffs[k] = 2 + 3 * sys.vars[k].profile.leaf_count;
    sys.rows.push_back(std::move(row));
  }
  return sys;
}

std::optional<std::vector<std::int64_t>> solve_system(const FeasibilitySystem& sys) {
  const std::size_t nv = sys.vars.size();
  const std::size_t nr = sys.rows.size();

  for (const auto& row : sys.rows) {
    if (row.target < 0) return std::nullopt;
    std::int64_t g = 0;
    for (auto c : row.coeffs) g = std::gcd(g, c);
    if (g == 0) {
      if (row.target != 0) return std::nullopt;
    } else if (row.target % g != 0) {
      return std::nullopt;
    }
  }

  // static per-variable upper bounds from the initial targets
  std::vector<std::int64_t> static_ub(nv, 0);
  for (std::size_t k = 0; k < nv; ++k) {
    std::int64_t ub = -1;
    for (const auto& row : sys.rows) {
      if (row.coeffs[k] > 0) {
        std::int64_t cap = row.target / row.coeffs[k];
        ub = (ub < 0) ? cap : std::min(ub, cap);
      }
    }
    static_ub[k] = std::max<std::int64_t>(ub, 0);
  }
  // suffix_max[r][k]: largest amount rows[r] can still receive from vars k..
  std::vector<std::vector<std::int64_t>> suffix_max(nr, std::vector<std::int64_t>(nv + 1, 0));
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t k = nv; k-- > 0;)
      suffix_max[r][k] = suffix_max[r][k + 1] + sys.rows[r].coeffs[k] * static_ub[k];

  std::vector<std::int64_t> residual(nr);
  for (std::size_t r = 0; r < nr; ++r) residual[r] = sys.rows[r].target;
  std::vector<std::int64_t> x(nv, 0);

  // iterative DFS, trying values ascending so the first full assignment is
  // the lexicographically least
  std::function<bool(std::size_t)> descend = [&](std::size_t k) -> bool {
    if (k == nv) {
      for (std::size_t r = 0; r < nr; ++r)
        if (residual[r] != 0) return false;
      return true;
    }
    for (std::size_t r = 0; r < nr; ++r)
      if (residual[r] > suffix_max[r][k]) return false;
    std::int64_t ub = static_ub[k];
    for (std::size_t r = 0; r < nr; ++r)
      if (sys.rows[r].coeffs[k] > 0)
        ub = std::min(ub, residual[r] / sys.rows[r].coeffs[k]);
    for (std::int64_t v = 0; v <= ub; ++v) {
      if (v > 0)
        for (std::size_t r = 0; r < nr; ++r) residual[r] -= sys.rows[r].coeffs[k];
      x[k] = v;
      if (descend(k + 1)) return true;
    }
    for (std::size_t r = 0; r < nr; ++r) residual[r] += ub * sys.rows[r].coeffs[k];
    x[k] = 0;
    return false;
  };
  if (descend(0)) return x;
  return std::nullopt;
}

namespace {

Tree assemble(const FeasibilitySystem& sys, const std::vector<std::int64_t>& x) {
  std::vector<Edge> edges;
  const Vertex root = 0;
  Vertex next = 1;
  std::vector<Vertex> neighbor_vertex(sys.config.neighbor_statuses.size());
  for (std::size_t i = 0; i < neighbor_vertex.size(); ++i) {
    neighbor_vertex[i] = next++;
    edges.emplace_back(root, neighbor_vertex[i]);
  }
  // vars are ordered by (neighbor instance, j status) already
  for (std::size_t k = 0; k < sys.vars.size(); ++k) {
    const auto& var = sys.vars[k];
    for (std::int64_t copy = 0; copy < x[k]; ++copy) {
      Vertex j = next++;
      edges.emplace_back(neighbor_vertex[var.neighbor_instance], j);
      for (std::int64_t l = 0; l < var.profile.leaf_count; ++l)
        edges.emplace_back(j, next++);
    }
  }
  return Tree(next, edges);
}

}  // namespace

std::optional<Tree> srt_d3_realize(const StatusSequence& seq, int delta) {
  if (delta < 1) throw std::invalid_argument("delta must be at least 1");
  const int n = static_cast<int>(seq.size());
  if (n == 0) throw std::invalid_argument("sequence must be nonempty");

  StatusSequence sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  if (n == 1) {
    if (sorted[0] == 0) return Tree(1, {});
    return std::nullopt;
  }
  if (sorted.front() < n - 1) return std::nullopt;  // min status of any n-vertex tree

  std::map<Status, std::int64_t> counts;
  for (Status v : sorted) ++counts[v];
  std::vector<Status> distinct;
  for (const auto& [v, c] : counts) distinct.push_back(v);

  const int max_i = std::min(delta, n - 1);

  for (Status root_status : distinct) {
    // candidate neighbor values with their subtree sizes
    std::vector<Status> cand;
    std::vector<std::int64_t> cand_sub;
    std::vector<std::int64_t> cand_avail;
    for (Status v : distinct) {
      std::int64_t avail = counts[v] - (v == root_status ? 1 : 0);
      if (avail <= 0) continue;
      Status spread = n + root_status - v;
      if (spread % 2 != 0) continue;
      std::int64_t sub = spread / 2;
      if (sub < 1 || sub > n - 1) continue;
      cand.push_back(v);
      cand_sub.push_back(sub);
      cand_avail.push_back(avail);
    }

    // enumerate neighbor multisets in lexicographic order; the subtree
    // sizes must cover V minus the root exactly
    std::vector<Status> chosen;
    std::optional<Tree> found;
    std::function<bool(std::size_t, std::int64_t, int)> search =
        [&](std::size_t from, std::int64_t covered, int left) -> bool {
      if (covered == n - 1 && !chosen.empty()) {
        CenterConfig config{root_status, chosen};
        FeasibilitySystem sys = build_system(sorted, config);
        if (auto x = solve_system(sys)) {
          Tree t = assemble(sys, *x);
          auto s = tree_statuses(t);
          std::sort(s.begin(), s.end());
          if (s == sorted) {
            found = std::move(t);
            return true;
          }
        }
      }
      if (left == 0 || covered >= n - 1) return false;
      for (std::size_t c = from; c < cand.size(); ++c) {
        std::int64_t used = std::count(chosen.begin(), chosen.end(), cand[c]);
        if (used >= cand_avail[c]) continue;
        if (covered + cand_sub[c] > n - 1) continue;
        chosen.push_back(cand[c]);
        if (search(c, covered + cand_sub[c], left - 1)) return true;
        chosen.pop_back();
      }
      return false;
    };
    if (search(0, 0, max_i)) return found;
  }
  return std::nullopt;
}

}  // namespace statseq
