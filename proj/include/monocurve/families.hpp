#pragma once

#include <vector>

#include "monocurve/semigroup.hpp"

namespace monocurve {

/// Arithmetic sequence a_i = a_1 + (i-1)e with gcd(a_1, e) = 1.
struct ArithmeticParams {
  long long a1 = 0;
  long long e = 0;
  int n = 0;

  ArithmeticParams(long long a1_, long long e_, int n_);

  long long term(int i) const { return a1 + (i - 1) * e; }  // 1-based
  long long degree() const { return term(n); }
  Sequence sequence() const;

  /// Division of b by n-1 with negative remainder: q_b = ceil(b/(n-1)),
  /// r_b = q_b (n-1) - b, so 0 <= r_b <= n-2.
  long long q_of(long long b) const { return (b + n - 2) / (n - 1); }
  long long r_of(long long b) const { return q_of(b) * (n - 1) - b; }

  long long q() const { return (a1 - 1) / (n - 1); }
  long long ell() const { return a1 - q() * (n - 1); }
  long long v(long long mu) const { return mu * a1 + term(2); }
};

/// Closed-form Apery set of the full arithmetic semigroup with respect
/// to d: { q_b a_1 + r_b e : 0 <= b < d }.
AperySet arithmetic_apery(const ArithmeticParams& p);

/// Apery poset of an arithmetic sequence is isomorphic to the
/// projective one exactly when a_1 > n - 2.
bool arithmetic_iso_check(const ArithmeticParams& p);

/// Closed-form Apery set (w.r.t. a_n) of the semigroup generated by the
/// arithmetic sequence with a_r removed, 2 <= r <= n-1. Requires
/// a_1 >= r (HypothesisError otherwise).
AperySet punctured_apery(const ArithmeticParams& p, int r);

/// Poset isomorphism criterion for the punctured arithmetic family
/// (n >= 4):
///   r = 2:            a_1 > n-2 and a_1 != n
///   3 <= r <= n-2:    a_1 >= n and r <= a_1 - n + 1
///   r = n-1:          a_1 >= n-2
bool punctured_iso_check(const ArithmeticParams& p, int r);

/// Sequence with the r-th term removed (1-based). DegenerateError when
/// fewer than two terms would remain.
Sequence projection(const Sequence& seq, int r, bool normalize_gcd = false);

/// N = (c_n - 1) * sum(c_2..c_{n-1}) for offsets 0 = c_1 < ... < c_n:
/// for every shift j >= N the affine and projective Betti sequences of
/// j+c_1 < ... < j+c_n agree.
long long vu_bound(const std::vector<long long>& offsets);

/// M = a_n + (a_n - 1) * sum(a_n - a_i): appending any j >= M to the
/// sequence yields an arithmetically Cohen-Macaulay projective curve.
long long cm_threshold(const std::vector<long long>& terms);

/// Arithmetically Gorenstein: Cohen-Macaulay, both charts symmetric,
/// and d divides F(S_1) + F(S_2).
bool gorenstein_check(const Sequence& seq);
struct GorensteinParts {
  bool cohen_macaulay = false;
  bool s1_symmetric = false;
  bool s2_symmetric = false;
  bool degree_divides_frobenius_sum = false;
  bool all() const { return cohen_macaulay && s1_symmetric && s2_symmetric && degree_divides_frobenius_sum; }
};
GorensteinParts gorenstein_parts(const Sequence& seq);

/// Small elements of a symmetric semigroup T with 2 not in T: the
/// positive members below F(T) define an arithmetically Gorenstein
/// projective curve of degree F(T) - 1. Verifies the witness set
/// inside the homogenized monoid. Raises NotSymmetricError /
/// TwoInSemigroupError on bad input.
Sequence gorenstein_construct(const NumericalSemigroup& T);

/// Cohen-Macaulay type of arithmetic curves: the unique t in
/// {1..n-1} congruent to a_1 - 1 mod n-1.
long long arithmetic_cm_type(long long a1, int n);

}  // namespace monocurve
