#pragma once

#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "monocurve/homogeneous.hpp"
#include "monocurve/semigroup.hpp"

namespace monocurve {

/// Squarefree divisor complex of a degree b: faces are the vertex sets
/// F with b - sum of the corresponding generators still in the monoid.
/// Vertices are the presented generators (affine) or all of
/// a_0, ..., a_n (projective). Downward closed by construction.
struct DivisorComplex {
  int nverts = 0;
  std::vector<uint32_t> faces;  // sorted bitmasks; contains 0 iff b is a member

  bool full() const;
  bool has(uint32_t mask) const;
  /// Every maximal face contains the vertex (cones are acyclic).
  bool is_cone() const;
};

DivisorComplex divisor_complex(const NumericalSemigroup& S, long long b);
DivisorComplex divisor_complex(const HomogeneousMonoid& M, Vec2 b);

/// Ranks of the reduced homology of the complex over F_p (field_char
/// prime) or Q (field_char 0). Entry k is dim H~_{k-1}, so entry 0 is
/// the (-1)-st reduced homology.
std::vector<long long> reduced_homology_ranks(const DivisorComplex& dc, long long field_char);

/// Graded Betti numbers of the semigroup ring, via homology of the
/// divisor complexes.
struct BettiTable {
  std::vector<long long> totals;  // beta_0 .. beta_pd
  int pd = 0;
  long long cm_type = 0;
  long long regularity = -1;  // projective tables only
  long long field_char = 32003;
  long long curve_degree = 0;  // d, set for projective tables
  std::map<std::pair<int, long long>, long long> graded;                    // affine: (i, b)
  std::map<std::tuple<int, long long, long long>, long long> graded2;       // projective: (i, u, v)

  bool totals_equal(const BettiTable& o) const { return totals == o.totals; }
};

/// All S-degrees up to F + sum(generators) contribute; beyond that the
/// complex is the full simplex.
BettiTable betti_affine(const NumericalSemigroup& S, long long field_char = 32003);

/// Total degrees up to d + 2 contribute (Castelnuovo-Mumford regularity
/// of a degree-d curve is at most d - n + 2 and pd is at most n).
/// `degree_bound` overrides the default; an override that truncates
/// nonzero graded entries raises BoundExhaustedError.
BettiTable betti_projective(const HomogeneousMonoid& M, long long field_char = 32003,
                            long long degree_bound = 0);

/// Alternating sums of the graded Betti numbers as a coefficient vector
/// (index = degree), truncated at `bound`.
std::vector<long long> k_polynomial_affine(const BettiTable& t, long long bound);
std::vector<long long> k_polynomial_projective(const BettiTable& t, long long bound);

/// The same polynomials straight from the Hilbert series:
/// prod(1 - t^{a_i}) * sum_{s in S} t^s, respectively
/// (1-z)^{n+1} * sum_m #{y in S : rank y = m} z^m.
std::vector<long long> k_reference_affine(const NumericalSemigroup& S, long long bound);
std::vector<long long> k_reference_projective(const HomogeneousMonoid& M, long long bound);

}  // namespace monocurve
