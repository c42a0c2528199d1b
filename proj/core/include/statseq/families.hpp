#ifndef STATSEQ_FAMILIES_HPP
#define STATSEQ_FAMILIES_HPP

#include <vector>

#include "statseq/graph.hpp"

namespace statseq {

/// Named tree families. The family_T kinds append b >= 1 pendants to every
/// leaf of the base (a star, or a balanced double star).
enum class FamilyKind {
  kPath,                // params: n >= 1
  kStar,                // params: leaves >= 1 (order = leaves + 1)
  kDoubleStar,          // params: a >= 1, b >= 1 pendants on the two hubs
  kBalancedDoubleStar,  // params: a >= 1 pendants on each hub
  kFamilyTStar,         // params: leaves >= 2, b >= 1
  kFamilyTDoubleStar,   // params: a >= 1, b >= 1
  kSpider,              // params: legs, at least 3 of them, lengths >= 1
};

struct FamilySpec {
  FamilyKind kind;
  int n = 0;                  // path
  int a = 0;                  // pendant counts / star leaves
  int b = 0;
  std::vector<int> legs;      // spider leg lengths

  static FamilySpec path(int n) { return {FamilyKind::kPath, n, 0, 0, {}}; }
  static FamilySpec star(int leaves) { return {FamilyKind::kStar, 0, leaves, 0, {}}; }
  static FamilySpec double_star(int a, int b) { return {FamilyKind::kDoubleStar, 0, a, b, {}}; }
  static FamilySpec balanced_double_star(int a) {
    return {FamilyKind::kBalancedDoubleStar, 0, a, 0, {}};
  }
  static FamilySpec family_t_star(int leaves, int b) {
    return {FamilyKind::kFamilyTStar, 0, leaves, b, {}};
  }
  static FamilySpec family_t_double_star(int a, int b) {
    return {FamilyKind::kFamilyTDoubleStar, 0, a, b, {}};
  }
  static FamilySpec spider(std::vector<int> legs) {
    return {FamilyKind::kSpider, 0, 0, 0, std::move(legs)};
  }
};

/// Build the named tree with deterministic labels. Throws
/// std::invalid_argument on out-of-range parameters.
Tree generate(const FamilySpec& spec);

struct KBoundResult {
  int k = 0;            // distinct status values
  int lower_bound = 0;  // ceil((diam + 1) / 2)
  bool tight = false;   // k == lower_bound
};

/// k(T) against its diameter lower bound. k >= lower_bound always holds.
KBoundResult check_k_bound(const Tree& t);

/// Structural test: is t a star or a balanced double star? Equivalent to
/// k(T) = 2 (checked in the test suite, not assumed here).
bool classify_k2(const Tree& t);

/// Structural membership test for the pendant-extended family: equivalent
/// to k(T) = 3.
bool classify_k3(const Tree& t);

}  // namespace statseq

#endif  // STATSEQ_FAMILIES_HPP
