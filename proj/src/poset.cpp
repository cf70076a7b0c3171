#include "monocurve/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace monocurve {

std::string AperyPoset::label(int node) const {
  if (!projective()) return std::to_string(values[static_cast<size_t>(node)]);
  const Vec2 p = points[static_cast<size_t>(node)];
  return "(" + std::to_string(p.u) + "," + std::to_string(p.v) + ")";
}

int AperyPoset::index_of(long long value) const {
  auto it = std::find(values.begin(), values.end(), value);
  return it == values.end() ? -1 : static_cast<int>(it - values.begin());
}

int AperyPoset::index_of(Vec2 point) const {
  auto it = std::find(points.begin(), points.end(), point);
  return it == points.end() ? -1 : static_cast<int>(it - points.begin());
}

long long AperyPoset::rank_of(long long value) const {
  const int i = index_of(value);
  if (i < 0 || !graded) throw InvalidInputError("no rank for " + std::to_string(value));
  return ranks[static_cast<size_t>(i)];
}

std::pair<bool, std::optional<std::vector<long long>>> is_graded(const NumericalSemigroup& S,
                                                                 const AperySet& ap) {
  const auto lengths = S.factorization_length_table(ap.max());
  std::vector<long long> rank;
  for (long long y : ap.elements) {
    const auto& ls = lengths[static_cast<size_t>(y)];
    if (ls.size() != 1) return {false, std::nullopt};
    rank.push_back(*ls.begin());
  }
  return {true, rank};
}

AperyPoset hasse_affine(const NumericalSemigroup& S, const AperySet& ap) {
  AperyPoset P;
  P.values = ap.sorted();
  std::vector<long long> steps;
  for (long long g : S.msg())
    if (g != ap.modulus) steps.push_back(g);
  for (int i = 0; i < P.size(); ++i) {
    for (long long g : steps) {
      const int j = P.index_of(P.values[static_cast<size_t>(i)] + g);
      if (j >= 0) P.hasse.emplace_back(i, j);
    }
  }
  std::sort(P.hasse.begin(), P.hasse.end());
  P.hasse.erase(std::unique(P.hasse.begin(), P.hasse.end()), P.hasse.end());

  auto [graded, rank_by_residue] = is_graded(S, ap);
  P.graded = graded;
  if (graded) {
    for (long long v : P.values)
      P.ranks.push_back((*rank_by_residue)[static_cast<size_t>(v % ap.modulus)]);
  }
  return P;
}

AperyPoset hasse_projective(const HomogeneousMonoid& M, const ProjectiveAperySet& aps) {
  AperyPoset P;
  P.points = aps.points;
  for (int i = 0; i < P.size(); ++i) {
    for (int k = 1; k <= M.n() - 1; ++k) {
      const Vec2 z = P.points[static_cast<size_t>(i)] + M.generators()[static_cast<size_t>(k)];
      const int j = P.index_of(z);
      if (j >= 0) P.hasse.emplace_back(i, j);
    }
  }
  std::sort(P.hasse.begin(), P.hasse.end());
  P.hasse.erase(std::unique(P.hasse.begin(), P.hasse.end()), P.hasse.end());
  P.graded = true;
  for (Vec2 p : P.points) P.ranks.push_back(M.rank(p));
  return P;
}

bool graded_via_sumsets(const NumericalSemigroup& S) {
  const AperySet ap = S.apery();
  const long long top = ap.max();
  std::vector<long long> interior;
  for (long long g : S.msg())
    if (g != S.generators().degree()) interior.push_back(g);

  // s-fold sumsets of MSG \ {a_n}, truncated at the largest Apery element.
  long long counted = 0;
  std::vector<char> cur(static_cast<size_t>(top) + 1, 0);
  cur[0] = 1;
  for (long long s = 0;; ++s) {
    bool any = false;
    for (long long y = 0; y <= top; ++y)
      if (cur[static_cast<size_t>(y)]) {
        any = true;
        if (ap.contains(y)) ++counted;
      }
    if (!any) break;
    if (interior.empty()) break;
    std::vector<char> next(static_cast<size_t>(top) + 1, 0);
    for (long long y = 0; y <= top; ++y)
      if (cur[static_cast<size_t>(y)])
        for (long long g : interior)
          if (y + g <= top) next[static_cast<size_t>(y + g)] = 1;
    cur = std::move(next);
  }
  return counted == static_cast<long long>(ap.elements.size());
}

namespace {

// 1-WL style color refinement on the cover DAG. Seed colors must be an
// order invariant for soundness.
std::vector<long long> refine_colors(int n, const std::vector<std::pair<int, int>>& edges,
                                     std::vector<long long> color) {
  for (;;) {
    std::vector<std::vector<long long>> sig(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) sig[static_cast<size_t>(v)].push_back(color[static_cast<size_t>(v)]);
    std::vector<std::vector<long long>> up(static_cast<size_t>(n)), down(static_cast<size_t>(n));
    for (auto [a, b] : edges) {
      up[static_cast<size_t>(a)].push_back(color[static_cast<size_t>(b)]);
      down[static_cast<size_t>(b)].push_back(color[static_cast<size_t>(a)]);
    }
    for (int v = 0; v < n; ++v) {
      auto& s = sig[static_cast<size_t>(v)];
      std::sort(up[static_cast<size_t>(v)].begin(), up[static_cast<size_t>(v)].end());
      std::sort(down[static_cast<size_t>(v)].begin(), down[static_cast<size_t>(v)].end());
      s.push_back(-1);
      s.insert(s.end(), up[static_cast<size_t>(v)].begin(), up[static_cast<size_t>(v)].end());
      s.push_back(-2);
      s.insert(s.end(), down[static_cast<size_t>(v)].begin(), down[static_cast<size_t>(v)].end());
    }
    std::map<std::vector<long long>, long long> renumber;
    std::vector<long long> next(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto [it, inserted] = renumber.try_emplace(sig[static_cast<size_t>(v)], static_cast<long long>(renumber.size()));
      next[static_cast<size_t>(v)] = it->second;
    }
    if (next == color) return color;
    color = std::move(next);
  }
}

struct AdjSets {
  std::vector<std::vector<int>> up, down;
  explicit AdjSets(int n, const std::vector<std::pair<int, int>>& edges)
      : up(static_cast<size_t>(n)), down(static_cast<size_t>(n)) {
    for (auto [a, b] : edges) {
      up[static_cast<size_t>(a)].push_back(b);
      down[static_cast<size_t>(b)].push_back(a);
    }
    for (auto& v : up) std::sort(v.begin(), v.end());
    for (auto& v : down) std::sort(v.begin(), v.end());
  }
};

bool extend_match(int v, const std::vector<std::vector<int>>& candidates, const AdjSets& ap,
                  const AdjSets& aq, std::vector<int>& p2q, std::vector<char>& used) {
  const int n = static_cast<int>(p2q.size());
  if (v == n) return true;
  for (int w : candidates[static_cast<size_t>(v)]) {
    if (used[static_cast<size_t>(w)]) continue;
    bool ok = true;
    // Check consistency against previously matched neighbours.
    for (int x : ap.up[static_cast<size_t>(v)]) {
      if (x < v && !std::binary_search(aq.up[static_cast<size_t>(w)].begin(), aq.up[static_cast<size_t>(w)].end(), p2q[static_cast<size_t>(x)])) { ok = false; break; }
    }
    if (ok)
      for (int x : ap.down[static_cast<size_t>(v)]) {
        if (x < v && !std::binary_search(aq.down[static_cast<size_t>(w)].begin(), aq.down[static_cast<size_t>(w)].end(), p2q[static_cast<size_t>(x)])) { ok = false; break; }
      }
    if (!ok) continue;
    p2q[static_cast<size_t>(v)] = w;
    used[static_cast<size_t>(w)] = 1;
    if (extend_match(v + 1, candidates, ap, aq, p2q, used)) return true;
    used[static_cast<size_t>(w)] = 0;
    p2q[static_cast<size_t>(v)] = -1;
  }
  return false;
}

}  // namespace

IsoResult are_isomorphic(const AperyPoset& P, const AperyPoset& Q) {
  if (P.size() != Q.size() || P.hasse.size() != Q.hasse.size()) return {};
  const int n = P.size();

  // Seed invariant: rank when both posets are graded, else 0.
  std::vector<long long> cp(static_cast<size_t>(n), 0), cq(static_cast<size_t>(n), 0);
  if (P.graded && Q.graded) {
    for (int v = 0; v < n; ++v) {
      cp[static_cast<size_t>(v)] = P.ranks[static_cast<size_t>(v)];
      cq[static_cast<size_t>(v)] = Q.ranks[static_cast<size_t>(v)];
    }
    auto mp = cp, mq = cq;
    std::sort(mp.begin(), mp.end());
    std::sort(mq.begin(), mq.end());
    if (mp != mq) return {};
  }

  // Joint refinement so color ids are comparable across the two posets.
  std::vector<std::pair<int, int>> joint_edges = P.hasse;
  for (auto [a, b] : Q.hasse) joint_edges.emplace_back(a + n, b + n);
  std::vector<long long> joint(static_cast<size_t>(2 * n));
  for (int v = 0; v < n; ++v) joint[static_cast<size_t>(v)] = cp[static_cast<size_t>(v)];
  for (int v = 0; v < n; ++v) joint[static_cast<size_t>(n + v)] = cq[static_cast<size_t>(v)];
  joint = refine_colors(2 * n, joint_edges, std::move(joint));

  std::map<long long, std::vector<int>> classes_q;
  for (int v = 0; v < n; ++v) classes_q[joint[static_cast<size_t>(n + v)]].push_back(v);
  std::vector<std::vector<int>> candidates(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    auto it = classes_q.find(joint[static_cast<size_t>(v)]);
    if (it == classes_q.end()) return {};
    candidates[static_cast<size_t>(v)] = it->second;
  }
  {
    // Color class sizes must match on both sides.
    std::map<long long, int> np, nq;
    for (int v = 0; v < n; ++v) {
      np[joint[static_cast<size_t>(v)]]++;
      nq[joint[static_cast<size_t>(n + v)]]++;
    }
    if (np != nq) return {};
  }

  AdjSets ap(n, P.hasse), aq(n, Q.hasse);
  std::vector<int> p2q(static_cast<size_t>(n), -1);
  std::vector<char> used(static_cast<size_t>(n), 0);
  if (!extend_match(0, candidates, ap, aq, p2q, used)) return {};

  // Edge-count equality plus injective cover-preservation gives a cover
  // DAG isomorphism, hence an order isomorphism.
  IsoResult res;
  res.isomorphic = true;
  res.mapping = std::move(p2q);
  return res;
}

std::string to_dot(const AperyPoset& P) {
  const int n = P.size();
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](int v) {
    const long long r = P.graded ? P.ranks[static_cast<size_t>(v)] : 0;
    const long long primary = P.projective() ? P.points[static_cast<size_t>(v)].u : P.values[static_cast<size_t>(v)];
    return std::pair(r, primary);
  };
  std::sort(order.begin(), order.end(), [&](int a, int b) { return key(a) < key(b); });

  std::ostringstream out;
  out << "digraph apery_poset {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int v : order) out << "  \"" << P.label(v) << "\";\n";
  std::vector<std::string> edge_lines;
  for (auto [a, b] : P.hasse)
    edge_lines.push_back("  \"" + P.label(a) + "\" -> \"" + P.label(b) + "\";\n");
  std::sort(edge_lines.begin(), edge_lines.end());
  for (const auto& e : edge_lines) out << e;
  if (P.graded) {
    std::map<long long, std::vector<int>> layers;
    for (int v : order) layers[P.ranks[static_cast<size_t>(v)]].push_back(v);
    for (const auto& [r, nodes] : layers) {
      out << "  { rank=same;";
      for (int v : nodes) out << " \"" << P.label(v) << "\";";
      out << " }\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace monocurve
