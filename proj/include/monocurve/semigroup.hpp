#pragma once

#include <set>
#include <vector>

#include "monocurve/errors.hpp"

namespace monocurve {

/// A strictly increasing sequence of positive integers a_1 < ... < a_n.
/// The last term is the degree d of the associated projective curve.
class Sequence {
 public:
  /// Validates the terms. When `normalize_gcd` is set and gcd > 1, every
  /// term is divided by the gcd; otherwise gcd > 1 raises GcdError from
  /// code that requires coprime terms (see requires_coprime()).
  explicit Sequence(std::vector<long long> terms, bool normalize_gcd = false);

  const std::vector<long long>& terms() const { return terms_; }
  long long term(int i) const { return terms_[i - 1]; }  // 1-based, a_i
  int size() const { return static_cast<int>(terms_.size()); }  // n
  long long degree() const { return terms_.back(); }            // d = a_n
  long long gcd() const { return gcd_; }

  /// Throws GcdError unless gcd of the terms is 1.
  void require_coprime() const;

  bool operator==(const Sequence& o) const { return terms_ == o.terms_; }

 private:
  std::vector<long long> terms_;
  long long gcd_ = 1;
};

/// Dual sequence d - a_{n-1} < ... < d - a_1 < d. An involution on
/// sequences (they always contain their own degree).
Sequence dual_sequence(const Sequence& seq);

/// Apery set of a numerical semigroup with respect to a member c:
/// the c smallest members, one per residue class mod c. elements[i] is
/// the unique element congruent to i mod c; elements[0] == 0.
struct AperySet {
  long long modulus = 0;
  std::vector<long long> elements;

  bool contains(long long y) const;
  long long max() const;
  /// Elements as a sorted set (residue order forgotten).
  std::vector<long long> sorted() const;
};

/// Numerical semigroup generated by a coprime sequence. Immutable after
/// construction; all queries are table lookups.
class NumericalSemigroup {
 public:
  explicit NumericalSemigroup(Sequence seq);

  const Sequence& generators() const { return seq_; }
  /// Minimal system of generators, sorted ascending.
  const std::vector<long long>& msg() const { return msg_; }
  /// Largest integer not in S; -1 when S = N.
  long long frobenius() const { return frobenius_; }
  /// Positive integers not in S, sorted.
  const std::vector<long long>& gaps() const { return gaps_; }
  long long genus() const { return static_cast<long long>(gaps_.size()); }

  bool member(long long x) const;

  /// Apery set with respect to c (default c = d = a_n). Throws
  /// NotMemberError when c is not in S.
  AperySet apery() const;
  AperySet apery(long long c) const;

  /// All factorization lengths |alpha| with sum(alpha_i * g_i) = b over
  /// the minimal generators. Throws NotMemberError when b not in S.
  std::set<long long> factorization_lengths(long long b) const;
  /// Length sets for every value 0..bound in one sweep.
  std::vector<std::set<long long>> factorization_length_table(long long bound) const;

  /// Exactly one of b, F - b lies in S for every integer b. S = N counts
  /// as symmetric (F = -1).
  bool is_symmetric() const;

 private:
  Sequence seq_;
  std::vector<long long> msg_;
  long long frobenius_ = -1;
  std::vector<long long> gaps_;
  std::vector<char> table_;  // membership for 0..F + sum(generators)
};

/// Convenience: build from raw terms.
NumericalSemigroup build_semigroup(std::vector<long long> terms, bool normalize_gcd = false);

}  // namespace monocurve
