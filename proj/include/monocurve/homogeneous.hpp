#pragma once

#include <compare>
#include <vector>

#include "monocurve/semigroup.hpp"

namespace monocurve {

/// A lattice point of N^2.
struct Vec2 {
  long long u = 0;
  long long v = 0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.u + b.u, a.v + b.v}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.u - b.u, a.v - b.v}; }
  auto operator<=>(const Vec2&) const = default;
};

/// The monoid S of N^2 spanned by (0,d), (a_1,d-a_1), ..., (d,0) for a
/// coprime sequence a_1 < ... < a_n = d. Every generator has coordinate
/// sum d, so members of total degree m*d are sums of exactly m
/// generators; membership is a DP over m.
class HomogeneousMonoid {
 public:
  explicit HomogeneousMonoid(Sequence base);

  const Sequence& base() const { return base_; }
  int n() const { return base_.size(); }
  long long degree() const { return base_.degree(); }
  /// Generators a_0 = (0,d), ..., a_n = (d,0).
  const std::vector<Vec2>& generators() const { return gens_; }

  bool member(Vec2 y) const;

  /// (y.u + y.v) / d; throws NotGradedPointError when d does not divide
  /// the coordinate sum.
  long long rank(Vec2 y) const;

 private:
  Sequence base_;
  std::vector<Vec2> gens_;
  std::vector<long long> first_coords_;  // 0, a_1, ..., d
  // reach_[m][y1] = 1 iff y1 is a sum of exactly m first coordinates.
  mutable std::vector<std::vector<char>> reach_;

  void ensure_degree(long long m) const;
};

/// Apery set of the homogenized monoid: members y with y - (0,d) and
/// y - (d,0) both outside S. Finite, with at least d elements.
struct ProjectiveAperySet {
  std::vector<Vec2> points;   // sorted by (rank, first coordinate)
  long long degree_bound = 0; // last total degree scanned by the enumeration

  int size() const { return static_cast<int>(points.size()); }
  bool contains(Vec2 y) const;
};

/// Enumerates the Apery set degree by degree. The scan runs to at least
/// ceil((F(S_1)+F(S_2))/d) + 2 and then keeps going until n+1
/// consecutive degrees contribute nothing new. `max_degree` (0 = auto)
/// caps the scan; hitting the cap raises BoundExhaustedError.
ProjectiveAperySet apery_projective(const HomogeneousMonoid& M, long long max_degree = 0);

}  // namespace monocurve
