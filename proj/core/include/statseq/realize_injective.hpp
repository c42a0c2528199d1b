#ifndef STATSEQ_REALIZE_INJECTIVE_HPP
#define STATSEQ_REALIZE_INJECTIVE_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "statseq/graph.hpp"

namespace statseq {

/// Raised when a sequence handed to the injective realizer contains
/// duplicate values. Distinct from plain non-realizability: duplicates put
/// the input outside this algorithm's domain altogether.
class NotInjectiveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Strictly decreasing sequence of positive statuses a_1 > a_2 > ... > a_n.
/// The only admissible zero is the one-element sequence {0} (the status of
/// an isolated vertex).
class InjectiveSequence {
 public:
  /// Sorts the input decreasing. Throws NotInjectiveError on duplicates and
  /// std::invalid_argument on nonpositive entries (other than {0}).
  static InjectiveSequence from_values(std::vector<Status> values);

  const std::vector<Status>& values() const { return values_; }
  int size() const { return static_cast<int>(values_.size()); }
  Status at(int i) const { return values_[i]; }

 private:
  explicit InjectiveSequence(std::vector<Status> values) : values_(std::move(values)) {}
  std::vector<Status> values_;  // strictly decreasing
};

/// Tree realizing an injective sequence, with the construction bookkeeping:
/// vertex i carries input value values()[i], parent[i] is its parent
/// (parent[n-1] = -1 for the root).
struct Realization {
  Tree tree;
  std::vector<Vertex> parent;
  std::vector<Status> status_of;
};

/// Construct the unique tree (up to isomorphism) whose status sequence is
/// `seq`, or nullopt if no tree realizes it. Vertices are processed in
/// decreasing status order; the parent of vertex i is the vertex whose
/// status is a_i - n + 2 (c_i + 1), where c_i counts descendants collected
/// so far. The output is re-verified against the input before returning.
/// Runs in O(n log n).
std::optional<Realization> realize_injective(const InjectiveSequence& seq);

/// True iff status_sequence(t) equals seq as a multiset.
bool verify_realization(const Tree& t, const InjectiveSequence& seq);

}  // namespace statseq

#endif  // STATSEQ_REALIZE_INJECTIVE_HPP
