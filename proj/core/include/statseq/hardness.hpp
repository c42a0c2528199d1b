#ifndef STATSEQ_HARDNESS_HPP
#define STATSEQ_HARDNESS_HPP

#include <array>
#include <optional>
#include <vector>

#include "statseq/graph.hpp"

namespace statseq {

/// The reduction materializes a vertex per unit of A, so element sizes are
/// capped to keep sequences and gadget trees in sane memory.
inline constexpr Status kMaxElement = 1'000'000;

/// 3-Partition instance: 3m positive integers to be split into m triples of
/// equal sum B = A/m. Construction enforces n divisible by 3 and B integral;
/// the strict window B/4 < a_i < B/2 (required for the reduction) is exposed
/// as a query, not forced.
class ThreePartitionInstance {
 public:
  explicit ThreePartitionInstance(std::vector<Status> elements);

  const std::vector<Status>& elements() const { return elements_; }
  int n() const { return static_cast<int>(elements_.size()); }
  int m() const { return n() / 3; }
  Status A() const { return sum_; }
  Status B() const { return sum_ / m(); }

  /// Strict window B/4 < a_i < B/2 for every element.
  bool satisfies_window() const;

 private:
  std::vector<Status> elements_;
  Status sum_;
};

/// Partition of the element indices {0..n-1} into triples, each summing to
/// B. Triples are stored sorted, and sorted among themselves.
class TripletPartition {
 public:
  TripletPartition(const ThreePartitionInstance& inst,
                   std::vector<std::array<int, 3>> triples);

  const std::vector<std::array<int, 3>>& triples() const { return triples_; }

 private:
  std::vector<std::array<int, 3>> triples_;
};

/// Status multiset of the reduction target, size A + 4m + 1:
///   3A+7m                         once          (root)
///   4A-2B+11m-7                   m times       (triplet vertices)
///   5A-2B-2a_i+15m-8              once per i    (element vertices)
///   6A-2B-2a_i+19m-9              a_i times per i  (leaves)
/// Returned sorted nondecreasing. Requires the window condition.
StatusSequence reduce_3partition(const ThreePartitionInstance& inst);

/// Closed-form values, exposed for cross-checking against BFS statuses.
Status reduction_root_status(const ThreePartitionInstance& inst);
Status reduction_triplet_status(const ThreePartitionInstance& inst);
Status reduction_element_status(const ThreePartitionInstance& inst, Status a_i);
Status reduction_leaf_status(const ThreePartitionInstance& inst, Status a_i);

/// Depth-3 gadget: root -> m triplet vertices -> 3 element vertices each ->
/// a_i leaves each. Vertices are labeled in preorder per the partition.
Tree build_gadget_tree(const ThreePartitionInstance& inst, const TripletPartition& partition);

/// Add the constant 3B + 19m + 9 to every element. Preserves the yes/no
/// answer and the window condition.
ThreePartitionInstance pad_instance(const ThreePartitionInstance& inst);

/// Read a triplet partition off a tree realizing the reduced sequence,
/// identifying vertices purely by status value and adjacency: each
/// triplet-status vertex groups three element vertices whose leaf counts
/// form a triple summing to B. Throws std::invalid_argument when the tree
/// does not have the forced structure.
TripletPartition extract_partition(const Tree& t, const ThreePartitionInstance& inst);

/// Exhaustive search for a valid triplet partition; lexicographically
/// smallest solution, or nullopt for a no-instance. Caps at n <= 15.
std::optional<TripletPartition> brute_force_3partition(const ThreePartitionInstance& inst);

}  // namespace statseq

#endif  // STATSEQ_HARDNESS_HPP
