#include "monocurve/betti.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

namespace monocurve {

bool DivisorComplex::full() const {
  return static_cast<long long>(faces.size()) == (1LL << nverts);
}

bool DivisorComplex::has(uint32_t mask) const {
  return std::binary_search(faces.begin(), faces.end(), mask);
}

bool DivisorComplex::is_cone() const {
  for (int v = 0; v < nverts; ++v) {
    const uint32_t bit = 1u << v;
    bool cone = true;
    for (uint32_t f : faces)
      if (!(f & bit) && !has(f | bit)) {
        cone = false;
        break;
      }
    if (cone) return true;
  }
  return false;
}

namespace {

void check_downward_closed(const DivisorComplex& dc) {
  for (uint32_t f : dc.faces)
    for (int v = 0; v < dc.nverts; ++v)
      if ((f >> v) & 1u)
        if (!dc.has(f & ~(1u << v)))
          throw InternalConsistencyError("divisor complex is not downward closed");
}

}  // namespace

DivisorComplex divisor_complex(const NumericalSemigroup& S, long long b) {
  const auto& gens = S.generators().terms();
  const int n = static_cast<int>(gens.size());
  std::vector<long long> sum(static_cast<size_t>(1) << n, 0);
  DivisorComplex dc;
  dc.nverts = n;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (mask) {
      const int v = std::countr_zero(mask);
      sum[mask] = sum[mask & (mask - 1)] + gens[static_cast<size_t>(v)];
    }
    if (S.member(b - sum[mask])) dc.faces.push_back(mask);
  }
  check_downward_closed(dc);
  return dc;
}

DivisorComplex divisor_complex(const HomogeneousMonoid& M, Vec2 b) {
  const auto& gens = M.generators();
  const int n = static_cast<int>(gens.size());
  std::vector<Vec2> sum(static_cast<size_t>(1) << n);
  DivisorComplex dc;
  dc.nverts = n;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (mask) {
      const int v = std::countr_zero(mask);
      sum[mask] = sum[mask & (mask - 1)] + gens[static_cast<size_t>(v)];
    }
    if (M.member(b - sum[mask])) dc.faces.push_back(mask);
  }
  check_downward_closed(dc);
  return dc;
}

namespace {

long long rank_mod_p(std::vector<std::vector<long long>> m, long long p) {
  if (m.empty() || m[0].empty()) return 0;
  const size_t rows = m.size(), cols = m[0].size();
  long long rank = 0;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t pivot = row;
    while (pivot < rows && m[pivot][col] % p == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[row]);
    // Normalize pivot to 1 via modular inverse (p prime).
    long long inv = 1, base = ((m[row][col] % p) + p) % p, e = p - 2;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    for (size_t c = col; c < cols; ++c) m[row][c] = ((m[row][c] % p) * inv % p + p) % p;
    for (size_t r = 0; r < rows; ++r) {
      if (r == row) continue;
      const long long f = ((m[r][col] % p) + p) % p;
      if (!f) continue;
      for (size_t c = col; c < cols; ++c)
        m[r][c] = ((m[r][c] - f * m[row][c]) % p + p) % p;
    }
    ++row;
    ++rank;
  }
  return rank;
}

long long rank_exact(const std::vector<std::vector<long long>>& m0) {
  using boost::multiprecision::cpp_int;
  if (m0.empty() || m0[0].empty()) return 0;
  std::vector<std::vector<cpp_int>> m(m0.size(), std::vector<cpp_int>(m0[0].size()));
  for (size_t r = 0; r < m0.size(); ++r)
    for (size_t c = 0; c < m0[r].size(); ++c) m[r][c] = m0[r][c];
  const size_t rows = m.size(), cols = m[0].size();
  cpp_int prev = 1;
  long long rank = 0;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t pivot = row;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[row]);
    for (size_t r = row + 1; r < rows; ++r) {
      for (size_t c = col + 1; c < cols; ++c)
        m[r][c] = (m[row][col] * m[r][c] - m[r][col] * m[row][c]) / prev;
      m[r][col] = 0;
    }
    prev = m[row][col];
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace

std::vector<long long> reduced_homology_ranks(const DivisorComplex& dc, long long field_char) {
  if (dc.faces.empty()) return {};
  std::vector<std::vector<uint32_t>> by_card(static_cast<size_t>(dc.nverts) + 1);
  for (uint32_t f : dc.faces) by_card[static_cast<size_t>(std::popcount(f))].push_back(f);
  int maxc = dc.nverts;
  while (maxc > 0 && by_card[static_cast<size_t>(maxc)].empty()) --maxc;

  // boundary_rank[c] = rank of C_c -> C_{c-1} in the cardinality grading
  // (card 0 = the empty face).
  std::vector<long long> boundary_rank(static_cast<size_t>(maxc) + 2, 0);
  for (int c = 1; c <= maxc; ++c) {
    const auto& cols_faces = by_card[static_cast<size_t>(c)];
    const auto& rows_faces = by_card[static_cast<size_t>(c - 1)];
    if (cols_faces.empty() || rows_faces.empty()) continue;
    std::vector<std::vector<long long>> mat(rows_faces.size(),
                                            std::vector<long long>(cols_faces.size(), 0));
    for (size_t j = 0; j < cols_faces.size(); ++j) {
      uint32_t f = cols_faces[j];
      int sign = 1;
      for (uint32_t rest = f; rest; rest &= rest - 1) {
        const uint32_t face = f & ~(rest & -rest);
        const auto it = std::lower_bound(rows_faces.begin(), rows_faces.end(), face);
        mat[static_cast<size_t>(it - rows_faces.begin())][j] = sign;
        sign = -sign;
      }
    }
    boundary_rank[static_cast<size_t>(c)] =
        field_char == 0 ? rank_exact(mat) : rank_mod_p(std::move(mat), field_char);
  }

  std::vector<long long> h(static_cast<size_t>(maxc) + 1, 0);
  for (int c = 0; c <= maxc; ++c)
    h[static_cast<size_t>(c)] = static_cast<long long>(by_card[static_cast<size_t>(c)].size()) -
                                boundary_rank[static_cast<size_t>(c)] -
                                boundary_rank[static_cast<size_t>(c) + 1];
  return h;
}

namespace {

void finalize_table(BettiTable& t) {
  int pd = 0;
  for (const auto& [key, v] : t.graded) pd = std::max(pd, key.first);
  for (const auto& [key, v] : t.graded2) pd = std::max(pd, std::get<0>(key));
  t.pd = pd;
  t.totals.assign(static_cast<size_t>(pd) + 1, 0);
  for (const auto& [key, v] : t.graded) t.totals[static_cast<size_t>(key.first)] += v;
  for (const auto& [key, v] : t.graded2) t.totals[static_cast<size_t>(std::get<0>(key))] += v;
  t.cm_type = t.totals.back();
}

}  // namespace

BettiTable betti_affine(const NumericalSemigroup& S, long long field_char) {
  BettiTable t;
  t.field_char = field_char;
  const auto& gens = S.generators().terms();
  const long long bound = S.frobenius() + std::accumulate(gens.begin(), gens.end(), 0LL);
  for (long long b = 0; b <= bound; ++b) {
    if (!S.member(b)) continue;
    const DivisorComplex dc = divisor_complex(S, b);
    if (dc.full() || dc.is_cone()) continue;
    const auto h = reduced_homology_ranks(dc, field_char);
    for (size_t i = 0; i < h.size(); ++i)
      if (h[i] != 0) t.graded[{static_cast<int>(i), b}] = h[i];
  }
  finalize_table(t);
  return t;
}

BettiTable betti_projective(const HomogeneousMonoid& M, long long field_char,
                            long long degree_bound) {
  if (degree_bound < 0) throw BoundExhaustedError("degree bound override must be nonnegative");
  BettiTable t;
  t.field_char = field_char;
  const long long d = M.degree();
  t.curve_degree = d;
  const long long bound = degree_bound > 0 ? degree_bound : d + 2;
  long long reg = 0;
  bool at_truncation = false;
  for (long long m = 0; m <= bound; ++m) {
    for (long long y1 = 0; y1 <= m * d; ++y1) {
      const Vec2 y{y1, m * d - y1};
      if (!M.member(y)) continue;
      const DivisorComplex dc = divisor_complex(M, y);
      if (dc.full() || dc.is_cone()) continue;
      const auto h = reduced_homology_ranks(dc, field_char);
      for (size_t i = 0; i < h.size(); ++i)
        if (h[i] != 0) {
          t.graded2[{static_cast<int>(i), y.u, y.v}] = h[i];
          reg = std::max(reg, m - static_cast<long long>(i));
          at_truncation |= m == bound;
        }
    }
  }
  // An override below the regularity-based default cannot certify that
  // nothing was cut off once the last scanned degree contributes.
  if (degree_bound > 0 && bound < d + 2 && at_truncation)
    throw BoundExhaustedError("graded Betti numbers reach the override bound " +
                              std::to_string(bound));
  finalize_table(t);
  t.regularity = reg;
  return t;
}

std::vector<long long> k_polynomial_affine(const BettiTable& t, long long bound) {
  std::vector<long long> out(static_cast<size_t>(bound) + 1, 0);
  for (const auto& [key, v] : t.graded) {
    const auto [i, b] = key;
    if (b <= bound) out[static_cast<size_t>(b)] += (i % 2 ? -v : v);
  }
  return out;
}

std::vector<long long> k_polynomial_projective(const BettiTable& t, long long bound) {
  std::vector<long long> out(static_cast<size_t>(bound) + 1, 0);
  for (const auto& [key, v] : t.graded2) {
    const auto [i, y1, y2] = key;
    const long long m = (y1 + y2) / t.curve_degree;
    if (m <= bound) out[static_cast<size_t>(m)] += (i % 2 ? -v : v);
  }
  return out;
}

std::vector<long long> k_reference_affine(const NumericalSemigroup& S, long long bound) {
  std::vector<long long> series(static_cast<size_t>(bound) + 1, 0);
  for (long long s = 0; s <= bound; ++s) series[static_cast<size_t>(s)] = S.member(s) ? 1 : 0;
  for (long long a : S.generators().terms()) {
    // multiply by (1 - t^a), truncated
    for (long long c = bound; c >= a; --c)
      series[static_cast<size_t>(c)] -= series[static_cast<size_t>(c - a)];
  }
  return series;
}

std::vector<long long> k_reference_projective(const HomogeneousMonoid& M, long long bound) {
  const long long d = M.degree();
  std::vector<long long> series(static_cast<size_t>(bound) + 1, 0);
  for (long long m = 0; m <= bound; ++m) {
    long long count = 0;
    for (long long y1 = 0; y1 <= m * d; ++y1)
      if (M.member({y1, m * d - y1})) ++count;
    series[static_cast<size_t>(m)] = count;
  }
  for (int k = 0; k < M.n() + 1; ++k)
    for (long long c = bound; c >= 1; --c)
      series[static_cast<size_t>(c)] -= series[static_cast<size_t>(c - 1)];
  return series;
}

}  // namespace monocurve
