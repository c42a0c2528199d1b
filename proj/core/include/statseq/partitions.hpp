#ifndef STATSEQ_PARTITIONS_HPP
#define STATSEQ_PARTITIONS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "statseq/graph.hpp"
#include "statseq/rational.hpp"

namespace statseq {

/// Ordered partition of the vertex set into disjoint nonempty parts.
/// Members of each part are sorted; the parts keep their declared order
/// (distance partitions are ordered by distance). normalized() reorders
/// parts by smallest member, the canonical form used by the grouping
/// constructors.
class Partition {
 public:
  Partition(int n, std::vector<std::vector<Vertex>> parts);

  int order() const { return n_; }
  int size() const { return static_cast<int>(parts_.size()); }
  const std::vector<std::vector<Vertex>>& parts() const { return parts_; }
  int part_of(Vertex v) const { return part_of_[v]; }

  Partition normalized() const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }

 private:
  int n_;
  std::vector<std::vector<Vertex>> parts_;
  std::vector<int> part_of_;
};

enum class QuotientBase { kAdjacency, kDistance };

/// p x p matrix of average block row sums of the base matrix, exact.
struct QuotientMatrix {
  QuotientBase base = QuotientBase::kAdjacency;
  int p = 0;
  std::vector<Rational> entries;  // row-major

  const Rational& at(int i, int j) const { return entries[static_cast<std::size_t>(i) * p + j]; }
  friend bool operator==(const QuotientMatrix& a, const QuotientMatrix& b) {
    return a.base == b.base && a.p == b.p && a.entries == b.entries;
  }
};

struct AutomorphismGroupOrbits {
  Partition orbits;
  /// Exact group order; nullopt when it overflows 64 bits.
  std::optional<std::uint64_t> group_order;
};

/// Vertices grouped by equal status, parts ordered by smallest member.
Partition status_partition(const Graph& g);

/// Orbits of the full automorphism group. Trees of any order use canonical
/// subtree codes; general graphs use backtracking over invariant-refined
/// candidate maps and throw when the order exceeds general_cap.
AutomorphismGroupOrbits orbit_partition(const Graph& g, int general_cap = 16);

/// The backtracking route regardless of graph shape. Exposed so the two
/// orbit computations can be checked against each other.
AutomorphismGroupOrbits orbit_partition_backtracking(const Graph& g, int cap = 16);

/// Parts V_0 = {v}, V_1, ..., V_ecc(v) in distance order.
Partition distance_partition(const Graph& g, Vertex v);

QuotientMatrix quotient_matrix(const Graph& g, const Partition& p, QuotientBase base);

/// True iff every block of the base matrix under p has constant row sums.
bool is_equitable(const Graph& g, const Partition& p, QuotientBase base);

/// True iff every part of p lies inside some part of q.
bool refines(const Partition& p, const Partition& q);

/// The 2m^2+2-vertex construction whose 4-part partition {a} | A | B | {b}
/// is adjacency-equitable but not a status partition: a joined to the
/// m^2-cycle A, b joined to B (m disjoint m-cycles), plus a twisted perfect
/// matching between A and B. Requires m >= 3.
Graph generate_gm(int m);

// Vertex labels used by generate_gm.
inline Vertex gm_vertex_a() { return 0; }
inline Vertex gm_vertex_b() { return 1; }
inline Vertex gm_vertex_in_a(int m, int i, int j) { return 2 + i * m + j; }
inline Vertex gm_vertex_in_b(int m, int i, int j) { return 2 + m * m + i * m + j; }

/// The 4-part partition {{a}, A, B, {b}} of generate_gm(m).
Partition gm_four_part_partition(int m);

struct Prop45Pair {
  Vertex u = 0;
  Vertex v = 0;
  bool same_eccentricity = false;
  bool quotients_match = false;  // distance-partition quotients over D
};

/// Empirical record of the status-partition/equitability equivalence: every
/// equal-status vertex pair is compared through the quotient matrices of
/// its distance partitions (distance base; unequal eccentricities count as
/// a mismatch), against adjacency-equitability of the status partition.
struct Prop45Report {
  std::vector<Prop45Pair> pairs;
  bool all_pairs_match = true;
  bool status_partition_equitable = false;
  bool equivalence_holds = false;
};

Prop45Report prop45_report(const Graph& g);

/// For every h, i, j: the mean of |G_i(u) ∩ G_j(v)| over vertices v at
/// distance h from u must not depend on u (exact rational comparison).
bool is_distance_mean_regular(const Graph& g);

}  // namespace statseq

#endif  // STATSEQ_PARTITIONS_HPP
