#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monocurve/homogeneous.hpp"
#include "monocurve/semigroup.hpp"

namespace monocurve {

/// An Apery set with its Hasse diagram under the divisibility order of
/// the ambient monoid (y <= z iff z - y is a member). Nodes are indexed;
/// exactly one of `values` (affine) and `points` (projective) is used.
struct AperyPoset {
  std::vector<long long> values;
  std::vector<Vec2> points;
  std::vector<std::pair<int, int>> hasse;  // cover edges (lower, upper)
  bool graded = false;
  std::vector<long long> ranks;  // one entry per node when graded

  bool projective() const { return !points.empty(); }
  int size() const { return projective() ? static_cast<int>(points.size()) : static_cast<int>(values.size()); }
  std::string label(int node) const;
  int index_of(long long value) const;
  int index_of(Vec2 point) const;
  long long rank_of(long long value) const;
};

/// Poset on Ap(S, d): covers are steps by a minimal generator other
/// than d. Graded iff every element has a single factorization length;
/// the common length is then the rank.
AperyPoset hasse_affine(const NumericalSemigroup& S, const AperySet& ap);

/// Poset on the projective Apery set: covers are steps by the interior
/// generators a_1..a_{n-1}. Always graded by (u+v)/d.
AperyPoset hasse_projective(const HomogeneousMonoid& M, const ProjectiveAperySet& aps);

/// Gradedness via factorization lengths, with the rank map when graded.
std::pair<bool, std::optional<std::vector<long long>>> is_graded(const NumericalSemigroup& S,
                                                                 const AperySet& ap);

/// Same predicate through iterated sumsets of MSG \ {a_n}: graded iff
/// the sets Ap ∩ s*A' partition Ap, i.e. their cardinalities sum to d.
bool graded_via_sumsets(const NumericalSemigroup& S);

struct IsoResult {
  bool isomorphic = false;
  /// When isomorphic: mapping[p] = node of Q matched to node p of P.
  std::vector<int> mapping;
};

/// Order isomorphism of the two cover DAGs, by partition refinement on
/// local invariants followed by backtracking.
IsoResult are_isomorphic(const AperyPoset& P, const AperyPoset& Q);

/// Graphviz digraph, edges bottom-up, nodes grouped by rank when graded.
std::string to_dot(const AperyPoset& P);

}  // namespace monocurve
