#ifndef STATSEQ_ORACLE_HPP
#define STATSEQ_ORACLE_HPP

#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "statseq/graph.hpp"

namespace statseq {

/// Canonical encoding of a tree up to isomorphism: the AHU parenthesis
/// string of the tree rooted at its center (lexicographically smaller of
/// the two rootings for bicentral trees). Equal strings <=> isomorphic.
using CanonicalForm = std::string;

CanonicalForm canonical_form(const Tree& t);

/// AHU encoding of a rooted tree (children sorted recursively).
CanonicalForm rooted_canonical_form(const Tree& t, Vertex root);

/// Largest order accepted by the free-tree enumerators.
inline constexpr int kEnumerationCap = 16;
/// The Prufer backend walks all n^(n-2) labeled trees, so its cap is lower.
inline constexpr int kPruferEnumerationCap = 10;

/// Lazy stream over one representative per isomorphism class of trees on n
/// vertices. Successor-style generation: walks the canonical level
/// sequences of all rooted trees (Beyer-Hedetniemi order) and keeps the
/// first rooted tree seen for each free-tree canonical form.
class FreeTreeEnumerator {
 public:
  explicit FreeTreeEnumerator(int n);
  std::optional<Tree> next();

 private:
  int n_;
  bool done_ = false;
  std::vector<int> levels_;
  std::unordered_set<CanonicalForm> seen_;
  bool first_ = true;
  bool advance();
};

/// Independent backend: decodes every Prufer sequence and dedups by
/// canonical form. Exhaustive over labeled trees; used to cross-validate
/// the successor backend at small orders.
class PruferTreeEnumerator {
 public:
  explicit PruferTreeEnumerator(int n);
  std::optional<Tree> next();

 private:
  int n_;
  bool done_ = false;
  std::vector<int> code_;
  bool first_ = true;
  std::unordered_set<CanonicalForm> seen_;
};

/// Collect all free trees of order n (successor backend).
std::vector<Tree> enumerate_free_trees(int n);

/// Visit all free trees of order n; return false from fn to stop early.
void for_each_free_tree(int n, const std::function<bool(const Tree&)>& fn);

/// All pairwise non-isomorphic trees whose status sequence equals seq.
/// Empty result means no tree realizes it.
std::vector<Tree> realize_exhaustive(const StatusSequence& seq);

/// True iff no non-isomorphic tree of the same order shares t's status
/// sequence. Requires order <= kEnumerationCap.
bool status_unique_in_trees(const Tree& t);

}  // namespace statseq

#endif  // STATSEQ_ORACLE_HPP
