#ifndef STATSEQ_SRT_D3_HPP
#define STATSEQ_SRT_D3_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "statseq/graph.hpp"

namespace statseq {

/// The (i,j)-branch forced by the edge-split identity in an n-vertex
/// depth-3 tree: a depth-2 vertex of status j_status under a depth-1 vertex
/// of status i_status, together with its leaf children. The branch counts
/// the j vertex and its leaves, not the depth-1 vertex.
struct BranchProfile {
  Status i_status = 0;
  Status j_status = 0;
  Status leaf_status = 0;     // j_status + n - 2
  std::int64_t leaf_count = 0;  // (n - j_status + i_status)/2 - 1
};

/// The unique profile for (n, s_i, s_j), or nullopt when parity or
/// nonnegativity rules the branch out.
std::optional<BranchProfile> branch_profile(int n, Status s_i, Status s_j);

/// A candidate rooting: the root's status and the multiset of statuses of
/// its neighbors (ascending, at most delta of them).
struct CenterConfig {
  Status root_status = 0;
  std::vector<Status> neighbor_statuses;
};

/// Nonnegative integer feasibility system over branch-count variables
/// x[v], one per (neighbor instance, j status) pair:
///   - one row per distinct remaining status value (multiplicity),
///   - one row per neighbor instance (descendant count fixed by the
///     edge-split identity),
///   - one row tying the branch totals to the root's own status, so that
///     every solution assembles to a tree whose root status is exact.
/// All coefficients are nonnegative and all rows are equalities.
struct FeasibilitySystem {
  int n = 0;
  CenterConfig config;

  struct Variable {
    int neighbor_instance = 0;  // index into config.neighbor_statuses
    BranchProfile profile;
  };
  std::vector<Variable> vars;

  struct Row {
    std::vector<std::int64_t> coeffs;  // dense over vars
    std::int64_t target = 0;
  };
  std::vector<Row> rows;
};

/// Assemble the system for a configuration. Throws std::invalid_argument
/// when the configuration is inconsistent with the sequence (value
/// multiplicities insufficient, odd parity, or empty neighbor subtree).
FeasibilitySystem build_system(const StatusSequence& seq, const CenterConfig& config);

/// Depth-first branch and bound with gcd and residual pruning. Returns the
/// lexicographically least nonnegative solution, or nullopt when the
/// exhausted search proves infeasibility.
std::optional<std::vector<std::int64_t>> solve_system(const FeasibilitySystem& sys);

/// Decide realizability of seq by a tree of depth at most 3 rooted at a
/// vertex of degree at most delta: iterate candidate root statuses
/// (ascending) and neighbor-status multisets, solve each system, assemble
/// the first feasible one, and verify the result by BFS before returning.
/// Returns nullopt when no configuration is feasible.
std::optional<Tree> srt_d3_realize(const StatusSequence& seq, int delta);

}  // namespace statseq

#endif  // STATSEQ_SRT_D3_HPP
