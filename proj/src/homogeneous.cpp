#include "monocurve/homogeneous.hpp"

#include <algorithm>

namespace monocurve {

HomogeneousMonoid::HomogeneousMonoid(Sequence base) : base_(std::move(base)) {
  base_.require_coprime();
  const long long d = base_.degree();
  gens_.push_back({0, d});
  first_coords_.push_back(0);
  for (int i = 1; i <= base_.size(); ++i) {
    gens_.push_back({base_.term(i), d - base_.term(i)});
    first_coords_.push_back(base_.term(i));
  }
  reach_.push_back({1});  // degree 0: only (0,0)
}

void HomogeneousMonoid::ensure_degree(long long m) const {
  const long long d = base_.degree();
  while (static_cast<long long>(reach_.size()) <= m) {
    const long long k = static_cast<long long>(reach_.size());
    const std::vector<char>& prev = reach_.back();
    std::vector<char> cur(static_cast<size_t>(k * d) + 1, 0);
    for (long long y = 0; y <= k * d; ++y) {
      for (long long a : first_coords_) {
        if (a > y) break;
        if (y - a <= (k - 1) * d && prev[static_cast<size_t>(y - a)]) {
          cur[static_cast<size_t>(y)] = 1;
          break;
        }
      }
    }
    reach_.push_back(std::move(cur));
  }
}

bool HomogeneousMonoid::member(Vec2 y) const {
  if (y.u < 0 || y.v < 0) return false;
  const long long d = base_.degree();
  const long long total = y.u + y.v;
  if (total % d != 0) return false;
  const long long m = total / d;
  ensure_degree(m);
  return reach_[static_cast<size_t>(m)][static_cast<size_t>(y.u)] != 0;
}

long long HomogeneousMonoid::rank(Vec2 y) const {
  const long long d = base_.degree();
  if ((y.u + y.v) % d != 0)
    throw NotGradedPointError("coordinate sum not divisible by the degree");
  return (y.u + y.v) / d;
}

bool ProjectiveAperySet::contains(Vec2 y) const {
  return std::binary_search(points.begin(), points.end(), y, [](Vec2 a, Vec2 b) {
    return std::pair(a.u + a.v, a.u) < std::pair(b.u + b.v, b.u);
  });
}

ProjectiveAperySet apery_projective(const HomogeneousMonoid& M, long long max_degree) {
  const long long d = M.degree();
  const int n = M.n();
  const Vec2 a0{0, d};
  const Vec2 an{d, 0};

  // Base scan depth from the Frobenius numbers of the two charts.
  const NumericalSemigroup s1(M.base());
  const NumericalSemigroup s2(dual_sequence(M.base()));
  const long long f_sum = s1.frobenius() + s2.frobenius();
  const long long m0 = std::max<long long>(0, (f_sum + d - 1) / d + 2);
  const long long cap = max_degree > 0 ? max_degree : std::max<long long>(64, 4 * m0 + 4 * n + 64);

  ProjectiveAperySet out;
  long long quiet = 0;
  long long m = 0;
  for (;; ++m) {
    if (m > cap)
      throw BoundExhaustedError("Apery enumeration exceeded degree bound " + std::to_string(cap));
    bool found = false;
    for (long long y1 = 0; y1 <= m * d; ++y1) {
      const Vec2 y{y1, m * d - y1};
      if (!M.member(y)) continue;
      if (M.member(y - a0) || M.member(y - an)) continue;
      out.points.push_back(y);
      found = true;
    }
    quiet = found ? 0 : quiet + 1;
    if (m >= m0 && quiet >= n + 1) break;
  }
  out.degree_bound = m;
  return out;
}

}  // namespace monocurve
