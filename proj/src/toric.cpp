#include "monocurve/toric.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <queue>

namespace monocurve {

long long Binomial::total(const std::vector<int>& e) const {
  return std::accumulate(e.begin(), e.end(), 0LL);
}

bool Binomial::homogeneous() const { return total(lead) == total(tail); }

bool Binomial::involves(int var) const {
  return lead[static_cast<size_t>(var)] > 0 || tail[static_cast<size_t>(var)] > 0;
}

bool Binomial::coprime_sides() const {
  for (int i = 0; i < vars(); ++i)
    if (lead[static_cast<size_t>(i)] > 0 && tail[static_cast<size_t>(i)] > 0) return false;
  return true;
}

long long Binomial::sdegree(const std::vector<long long>& weights) const {
  long long s = 0;
  for (int i = 0; i < vars(); ++i) s += weights[static_cast<size_t>(i)] * lead[static_cast<size_t>(i)];
  return s;
}

int TermOrder::cmp(const std::vector<int>& a, const std::vector<int>& b) const {
  long long da = 0, db = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    da += weights[i] * a[i];
    db += weights[i] * b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (int k = static_cast<int>(sequence.size()) - 1; k >= 0; --k) {
    const int v = sequence[static_cast<size_t>(k)];
    if (a[static_cast<size_t>(v)] != b[static_cast<size_t>(v)])
      return a[static_cast<size_t>(v)] > b[static_cast<size_t>(v)] ? -1 : 1;
  }
  return 0;
}

TermOrder TermOrder::degrevlex(int nvars) {
  TermOrder o;
  o.weights.assign(static_cast<size_t>(nvars), 1);
  o.sequence.resize(static_cast<size_t>(nvars));
  std::iota(o.sequence.begin(), o.sequence.end(), 0);
  return o;
}

TermOrder TermOrder::degrevlex_cheapest(int nvars, int cheapest, std::vector<long long> weights) {
  TermOrder o;
  o.weights = std::move(weights);
  for (int v = 0; v < nvars; ++v)
    if (v != cheapest) o.sequence.push_back(v);
  o.sequence.push_back(cheapest);
  return o;
}

std::vector<std::vector<int>> GroebnerBasis::initial_generators() const {
  std::vector<std::vector<int>> out;
  for (const auto& g : gens) out.push_back(g.lead);
  return out;
}

namespace {

bool divides(const std::vector<int>& div, const std::vector<int>& m) {
  for (size_t i = 0; i < div.size(); ++i)
    if (div[i] > m[i]) return false;
  return true;
}

// Full normal form of x^u - x^v; nullopt when it reduces to zero.
std::optional<Binomial> normal_form(std::vector<int> u, std::vector<int> v,
                                    const std::vector<Binomial>& basis, const TermOrder& order) {
  for (;;) {
    const int c = order.cmp(u, v);
    if (c == 0) return std::nullopt;
    if (c < 0) std::swap(u, v);
    bool reduced = false;
    for (const auto& g : basis) {
      if (!divides(g.lead, u)) continue;
      for (size_t i = 0; i < u.size(); ++i) u[i] += g.tail[i] - g.lead[i];
      reduced = true;
      break;
    }
    if (reduced) continue;
    // Lead irreducible; bring the tail to normal form as well.
    for (bool again = true; again;) {
      again = false;
      for (const auto& g : basis) {
        if (!divides(g.lead, v)) continue;
        for (size_t i = 0; i < v.size(); ++i) v[i] += g.tail[i] - g.lead[i];
        again = true;
        break;
      }
    }
    return Binomial{std::move(u), std::move(v)};
  }
}

struct PendingPair {
  long long sdeg;
  long long serial;
  int i, j;
  bool operator>(const PendingPair& o) const {
    return std::pair(sdeg, serial) > std::pair(o.sdeg, o.serial);
  }
};

}  // namespace

GroebnerBasis buchberger(std::vector<Binomial> gens, const TermOrder& order,
                         const std::vector<long long>& sdeg_weights) {
  std::vector<Binomial> basis;
  std::priority_queue<PendingPair, std::vector<PendingPair>, std::greater<>> pairs;
  long long serial = 0;

  auto lcm_sdeg = [&](const Binomial& f, const Binomial& g) {
    long long s = 0;
    for (size_t i = 0; i < f.lead.size(); ++i)
      s += sdeg_weights[i] * std::max(f.lead[i], g.lead[i]);
    return s;
  };
  auto add = [&](Binomial b) {
    for (int k = 0; k < static_cast<int>(basis.size()); ++k)
      pairs.push({lcm_sdeg(basis[static_cast<size_t>(k)], b), serial++, k, static_cast<int>(basis.size())});
    basis.push_back(std::move(b));
  };

  for (auto& g : gens) {
    auto nf = normal_form(g.lead, g.tail, basis, order);
    if (nf) add(std::move(*nf));
  }

  while (!pairs.empty()) {
    const auto [sdeg, ser, i, j] = pairs.top();
    pairs.pop();
    const Binomial& f = basis[static_cast<size_t>(i)];
    const Binomial& g = basis[static_cast<size_t>(j)];
    bool coprime_leads = true;
    for (size_t k = 0; k < f.lead.size(); ++k)
      if (f.lead[k] > 0 && g.lead[k] > 0) {
        coprime_leads = false;
        break;
      }
    if (coprime_leads) continue;  // product criterion
    std::vector<int> a(f.lead.size()), b(f.lead.size());
    for (size_t k = 0; k < f.lead.size(); ++k) {
      const int l = std::max(f.lead[k], g.lead[k]);
      a[k] = l - f.lead[k] + f.tail[k];
      b[k] = l - g.lead[k] + g.tail[k];
    }
    auto nf = normal_form(std::move(a), std::move(b), basis, order);
    if (nf) add(std::move(*nf));
  }

  // Inter-reduce: minimal leads, then fully reduced tails.
  std::sort(basis.begin(), basis.end(),
            [&](const Binomial& x, const Binomial& y) { return order.cmp(x.lead, y.lead) < 0; });
  std::vector<Binomial> reduced;
  for (const auto& g : basis) {
    bool redundant = false;
    for (const auto& h : reduced)
      if (divides(h.lead, g.lead)) {
        redundant = true;
        break;
      }
    if (!redundant) reduced.push_back(g);
  }
  for (auto& g : reduced) {
    for (bool again = true; again;) {
      again = false;
      for (const auto& h : reduced) {
        if (&h == &g || !divides(h.lead, g.tail)) continue;
        for (size_t i = 0; i < g.tail.size(); ++i) g.tail[i] += h.tail[i] - h.lead[i];
        again = true;
        break;
      }
    }
  }

  GroebnerBasis out;
  out.order = order;
  out.gens = std::move(reduced);
  return out;
}

bool spairs_reduce_to_zero(const GroebnerBasis& gb) {
  const auto& basis = gb.gens;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) {
      std::vector<int> a(basis[i].lead.size()), b(basis[i].lead.size());
      for (size_t k = 0; k < a.size(); ++k) {
        const int l = std::max(basis[i].lead[k], basis[j].lead[k]);
        a[k] = l - basis[i].lead[k] + basis[i].tail[k];
        b[k] = l - basis[j].lead[k] + basis[j].tail[k];
      }
      if (normal_form(std::move(a), std::move(b), basis, gb.order)) return false;
    }
  return true;
}

std::vector<std::vector<long long>> integer_kernel_basis(const std::vector<std::vector<long long>>& rows,
                                                         int ncols) {
  std::vector<std::vector<long long>> a = rows;
  std::vector<std::vector<long long>> u(static_cast<size_t>(ncols),
                                        std::vector<long long>(static_cast<size_t>(ncols), 0));
  for (int c = 0; c < ncols; ++c) u[static_cast<size_t>(c)][static_cast<size_t>(c)] = 1;

  auto col_axpy = [&](int dst, int src, long long q) {  // col_dst -= q * col_src
    for (auto& row : a) row[static_cast<size_t>(dst)] -= q * row[static_cast<size_t>(src)];
    for (int k = 0; k < ncols; ++k)
      u[static_cast<size_t>(k)][static_cast<size_t>(dst)] -= q * u[static_cast<size_t>(k)][static_cast<size_t>(src)];
  };
  auto col_swap = [&](int x, int y) {
    for (auto& row : a) std::swap(row[static_cast<size_t>(x)], row[static_cast<size_t>(y)]);
    for (int k = 0; k < ncols; ++k)
      std::swap(u[static_cast<size_t>(k)][static_cast<size_t>(x)], u[static_cast<size_t>(k)][static_cast<size_t>(y)]);
  };

  int lead = 0;
  for (size_t r = 0; r < a.size() && lead < ncols; ++r) {
    for (;;) {
      int pivot = -1;
      for (int c = lead; c < ncols; ++c)
        if (a[r][static_cast<size_t>(c)] != 0 &&
            (pivot < 0 || std::llabs(a[r][static_cast<size_t>(c)]) < std::llabs(a[r][static_cast<size_t>(pivot)])))
          pivot = c;
      if (pivot < 0) break;
      bool clean = true;
      for (int c = lead; c < ncols; ++c) {
        if (c == pivot || a[r][static_cast<size_t>(c)] == 0) continue;
        col_axpy(c, pivot, a[r][static_cast<size_t>(c)] / a[r][static_cast<size_t>(pivot)]);
        if (a[r][static_cast<size_t>(c)] != 0) clean = false;
      }
      if (clean) {
        col_swap(pivot, lead);
        ++lead;
        break;
      }
    }
  }

  std::vector<std::vector<long long>> kernel;
  for (int c = lead; c < ncols; ++c) {
    std::vector<long long> v(static_cast<size_t>(ncols));
    for (int k = 0; k < ncols; ++k) v[static_cast<size_t>(k)] = u[static_cast<size_t>(k)][static_cast<size_t>(c)];
    kernel.push_back(std::move(v));
  }
  return kernel;
}

std::vector<long long> toric_weights(const Sequence& seq, bool projective) {
  if (projective) return std::vector<long long>(static_cast<size_t>(seq.size()) + 1, 1);
  return seq.terms();
}

namespace {

std::vector<std::vector<long long>> parametrization_rows(const Sequence& seq, bool projective) {
  const long long d = seq.degree();
  std::vector<std::vector<long long>> rows;
  if (projective) {
    std::vector<long long> r0, r1;
    r0.push_back(0);
    r1.push_back(d);
    for (long long t : seq.terms()) {
      r0.push_back(t);
      r1.push_back(d - t);
    }
    rows.push_back(r0);
    rows.push_back(r1);
  } else {
    rows.push_back(seq.terms());
  }
  return rows;
}

Binomial binomial_from_vector(const std::vector<long long>& v) {
  Binomial b;
  b.lead.resize(v.size());
  b.tail.resize(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    b.lead[i] = v[i] > 0 ? static_cast<int>(v[i]) : 0;
    b.tail[i] = v[i] < 0 ? static_cast<int>(-v[i]) : 0;
  }
  return b;
}

void check_sdegrees(const std::vector<Binomial>& gens, const std::vector<std::vector<long long>>& rows) {
  for (const auto& g : gens)
    for (const auto& row : rows) {
      long long s = 0;
      for (size_t i = 0; i < row.size(); ++i) s += row[i] * (g.lead[i] - g.tail[i]);
      if (s != 0) throw InternalConsistencyError("binomial is not S-homogeneous");
    }
}

}  // namespace

namespace {

// Kernel-lattice binomials saturated with respect to every variable: a
// graded reverse lex basis with the variable cheapest allows dividing
// out its content.
std::vector<Binomial> toric_saturated_generators(const Sequence& seq, bool projective) {
  seq.require_coprime();
  const auto rows = parametrization_rows(seq, projective);
  const int nv = projective ? seq.size() + 1 : seq.size();
  const auto weights = toric_weights(seq, projective);

  std::vector<Binomial> ideal;
  for (const auto& v : integer_kernel_basis(rows, nv)) ideal.push_back(binomial_from_vector(v));
  check_sdegrees(ideal, rows);

  for (bool changed = true; changed;) {
    changed = false;
    for (int v = 0; v < nv; ++v) {
      auto gb = buchberger(ideal, TermOrder::degrevlex_cheapest(nv, v, weights), weights);
      ideal = std::move(gb.gens);
      for (auto& g : ideal) {
        const int k = std::min(g.lead[static_cast<size_t>(v)], g.tail[static_cast<size_t>(v)]);
        if (k > 0) {
          g.lead[static_cast<size_t>(v)] -= k;
          g.tail[static_cast<size_t>(v)] -= k;
          changed = true;
        }
      }
    }
  }
  check_sdegrees(ideal, rows);
  return ideal;
}

}  // namespace

std::vector<Binomial> toric_ideal(const Sequence& seq, bool projective) {
  const int nv = projective ? seq.size() + 1 : seq.size();
  const auto weights = toric_weights(seq, projective);
  auto ideal = toric_saturated_generators(seq, projective);

  // Minimal generating set: sweep candidates by S-degree, keeping those
  // outside the ideal generated so far.
  const TermOrder ref = TermOrder::degrevlex(nv);
  std::sort(ideal.begin(), ideal.end(), [&](const Binomial& x, const Binomial& y) {
    const long long sx = x.sdegree(weights), sy = y.sdegree(weights);
    if (sx != sy) return sx < sy;
    const int c = ref.cmp(x.lead, y.lead);
    if (c != 0) return c < 0;
    return ref.cmp(x.tail, y.tail) < 0;
  });
  std::vector<Binomial> minimal;
  for (const auto& g : ideal) {
    if (!minimal.empty()) {
      auto gb = buchberger(minimal, ref, weights);
      if (!normal_form(g.lead, g.tail, gb.gens, ref)) continue;
    }
    Binomial h = g;
    if (ref.cmp(h.lead, h.tail) < 0) std::swap(h.lead, h.tail);
    minimal.push_back(std::move(h));
  }
  return minimal;
}

GroebnerBasis toric_groebner(const Sequence& seq, bool projective) {
  const int nv = projective ? seq.size() + 1 : seq.size();
  return buchberger(toric_saturated_generators(seq, projective), TermOrder::degrevlex(nv),
                    toric_weights(seq, projective));
}

bool initial_ideal_free_of(const GroebnerBasis& gb, int var) {
  for (const auto& g : gb.gens)
    if (g.lead[static_cast<size_t>(var)] > 0) return false;
  return true;
}

bool nonhomogeneous_all_involve(const GroebnerBasis& gb, int var) {
  for (const auto& g : gb.gens)
    if (!g.homogeneous() && !g.involves(var)) return false;
  return true;
}

bool cm_via_groebner(const Sequence& seq) {
  return initial_ideal_free_of(toric_groebner(seq, false), seq.size() - 1);
}

bool sengupta_criterion(const Sequence& seq) {
  const auto gb = toric_groebner(seq, false);
  const int xn = seq.size() - 1;
  return initial_ideal_free_of(gb, xn) && nonhomogeneous_all_involve(gb, xn);
}

}  // namespace monocurve
