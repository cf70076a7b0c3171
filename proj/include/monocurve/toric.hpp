#pragma once

#include <vector>

#include "monocurve/semigroup.hpp"

namespace monocurve {

/// A pure difference of monomials x^lead - x^tail with lead > tail in
/// the order of the basis it belongs to. Coefficients are always +1/-1,
/// which is preserved by S-polynomials and reduction.
struct Binomial {
  std::vector<int> lead;
  std::vector<int> tail;

  int vars() const { return static_cast<int>(lead.size()); }
  long long total(const std::vector<int>& e) const;
  /// Equal total degrees on both sides.
  bool homogeneous() const;
  bool involves(int var) const;
  /// Supports of the two sides are disjoint.
  bool coprime_sides() const;
  /// Weighted degree of the lead side (equals the tail side for
  /// S-homogeneous binomials).
  long long sdegree(const std::vector<long long>& weights) const;

  bool operator==(const Binomial&) const = default;
};

/// Degree reverse lexicographic order: weighted degree first, ties by
/// the last nonzero coordinate of the difference (read along `sequence`)
/// being negative. sequence.back() is the cheapest variable.
struct TermOrder {
  std::vector<long long> weights;
  std::vector<int> sequence;

  /// -1, 0, 1 as x^a <, =, > x^b.
  int cmp(const std::vector<int>& a, const std::vector<int>& b) const;

  /// Plain degrevlex x_0 > x_1 > ... > x_{nvars-1}.
  static TermOrder degrevlex(int nvars);
  /// Weighted degrevlex with `cheapest` moved to the end of the
  /// variable sequence.
  static TermOrder degrevlex_cheapest(int nvars, int cheapest, std::vector<long long> weights);
};

struct GroebnerBasis {
  TermOrder order;
  std::vector<Binomial> gens;  // reduced, sorted by lead ascending

  /// Minimal monomial generators of the initial ideal: the leads.
  std::vector<std::vector<int>> initial_generators() const;
};

/// Buchberger with normal selection (minimal S-degree first, FIFO ties)
/// followed by full inter-reduction; output is the unique reduced basis.
GroebnerBasis buchberger(std::vector<Binomial> gens, const TermOrder& order,
                         const std::vector<long long>& sdeg_weights);

/// Certificate check: every S-pair of the basis reduces to zero.
bool spairs_reduce_to_zero(const GroebnerBasis& gb);

/// Basis of the integer kernel of a small matrix (unimodular column
/// reduction).
std::vector<std::vector<long long>> integer_kernel_basis(const std::vector<std::vector<long long>>& rows,
                                                         int ncols);

/// S-degree weights of the toric ideal's ambient ring: the generators
/// themselves (affine, n variables) or all ones (projective, n+1
/// variables; the ideal is standard graded).
std::vector<long long> toric_weights(const Sequence& seq, bool projective);

/// Generators of the toric ideal of the curve: kernel-lattice binomials
/// saturated by every variable (graded reverse lexicographic orders
/// with the target variable cheapest), then minimalized degree by
/// degree. The result is a minimal generating set, so its size is the
/// first Betti number.
std::vector<Binomial> toric_ideal(const Sequence& seq, bool projective);

/// Reduced Groebner basis of the toric ideal for the reference order
/// degrevlex x_1 > ... > x_n (affine) or x_0 > ... > x_n (projective).
GroebnerBasis toric_groebner(const Sequence& seq, bool projective);

/// No minimal generator of the initial ideal is divisible by x_var.
bool initial_ideal_free_of(const GroebnerBasis& gb, int var);

/// x_var appears in every non-homogeneous element of the basis.
bool nonhomogeneous_all_involve(const GroebnerBasis& gb, int var);

/// The projective curve is arithmetically Cohen-Macaulay iff x_n does
/// not divide any minimal generator of the initial ideal of the affine
/// toric ideal.
bool cm_via_groebner(const Sequence& seq);

/// Groebner certificate for equal affine/projective Betti sequences:
/// the initial ideal is x_n-free and x_n appears in every
/// non-homogeneous binomial of the reduced basis. Equivalent to the
/// Apery poset isomorphism.
bool sengupta_criterion(const Sequence& seq);

}  // namespace monocurve
