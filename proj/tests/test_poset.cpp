#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "monocurve/poset.hpp"
#include "oracles.hpp"

using namespace monocurve;

namespace {

AperyPoset affine_poset_of(const std::vector<long long>& terms) {
  const NumericalSemigroup s{Sequence(terms)};
  return hasse_affine(s, s.apery());
}

AperyPoset projective_poset_of(const std::vector<long long>& terms) {
  const HomogeneousMonoid m{Sequence(terms)};
  return hasse_projective(m, apery_projective(m));
}

bool is_chain(const AperyPoset& p) {
  return static_cast<int>(p.hasse.size()) == p.size() - 1;
}

}  // namespace

TEST_CASE("affine hasse diagram of a divisor chain is a total order") {
  const auto p = affine_poset_of({1, 2, 4, 8});
  CHECK(p.size() == 8);
  CHECK(is_chain(p));
  CHECK(p.graded);
}

TEST_CASE("affine hasse diagram of <5,11,13> carries the rank function") {
  const auto p = affine_poset_of({5, 11, 13});
  CHECK(p.size() == 13);
  CHECK(p.graded);
  CHECK(p.rank_of(0) == 0);
  CHECK(p.rank_of(5) == 1);
  CHECK(p.rank_of(11) == 1);
  CHECK(p.rank_of(10) == 2);
  CHECK(p.rank_of(16) == 2);
  CHECK(p.rank_of(22) == 2);
  CHECK(p.rank_of(15) == 3);
  CHECK(p.rank_of(21) == 3);
  CHECK(p.rank_of(27) == 3);
  CHECK(p.rank_of(20) == 4);
  CHECK(p.rank_of(32) == 4);
  CHECK(p.rank_of(25) == 5);
  CHECK(p.rank_of(30) == 6);

  // Reachability in the cover DAG equals divisibility order on Ap_1.
  const NumericalSemigroup s{Sequence({5, 11, 13})};
  std::vector<std::vector<char>> reach(static_cast<size_t>(p.size()),
                                       std::vector<char>(static_cast<size_t>(p.size()), 0));
  for (int v = 0; v < p.size(); ++v) reach[static_cast<size_t>(v)][static_cast<size_t>(v)] = 1;
  for (int k = 0; k < p.size(); ++k)
    for (auto [a, b] : p.hasse)
      for (int v = 0; v < p.size(); ++v)
        if (reach[static_cast<size_t>(v)][static_cast<size_t>(a)])
          reach[static_cast<size_t>(v)][static_cast<size_t>(b)] = 1;
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b) {
      const bool leq = s.member(p.values[static_cast<size_t>(b)] - p.values[static_cast<size_t>(a)]);
      CHECK(leq == static_cast<bool>(reach[static_cast<size_t>(a)][static_cast<size_t>(b)]));
    }
}

TEST_CASE("trivial affine chain for the naturals") {
  const NumericalSemigroup s{Sequence({1})};
  const auto p = hasse_affine(s, s.apery(3));
  CHECK(p.size() == 3);
  CHECK(is_chain(p));
}

TEST_CASE("projective poset is graded with max-chain lengths matching ranks") {
  const auto p = projective_poset_of({5, 11, 13});
  CHECK(p.size() == 16);
  CHECK(p.graded);
  // Longest path from (0,0) to each node equals its rank (Hasse steps
  // all raise rank by one).
  std::vector<long long> longest(static_cast<size_t>(p.size()), 0);
  for (int rounds = 0; rounds < p.size(); ++rounds)
    for (auto [a, b] : p.hasse)
      longest[static_cast<size_t>(b)] =
          std::max(longest[static_cast<size_t>(b)], longest[static_cast<size_t>(a)] + 1);
  for (int v = 0; v < p.size(); ++v) CHECK(longest[static_cast<size_t>(v)] == p.ranks[static_cast<size_t>(v)]);

  const auto single = projective_poset_of({1});
  CHECK(single.size() == 1);
  CHECK(single.hasse.empty());
}

TEST_CASE("gradedness via factorization lengths") {
  const NumericalSemigroup graded{Sequence({5, 11, 13})};
  const auto [g1, ranks1] = is_graded(graded, graded.apery());
  CHECK(g1);
  REQUIRE(ranks1.has_value());
  CHECK((*ranks1)[25 % 13] == 5);

  const NumericalSemigroup ungraded{Sequence({5, 7, 8, 9})};
  CHECK(ungraded.factorization_lengths(15) == std::set<long long>{2, 3});
  CHECK_FALSE(is_graded(ungraded, ungraded.apery()).first);

  const NumericalSemigroup naturals{Sequence({1})};
  CHECK(is_graded(naturals, naturals.apery(2)).first);
}

TEST_CASE("gradedness via iterated sumsets agrees") {
  CHECK(graded_via_sumsets(NumericalSemigroup{Sequence({5, 11, 13})}));
  CHECK_FALSE(graded_via_sumsets(NumericalSemigroup{Sequence({5, 7, 8, 9})}));
  CHECK(graded_via_sumsets(NumericalSemigroup{Sequence({1, 2})}));

  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 40; ++trial) {
    const NumericalSemigroup s{Sequence(oracle::random_sequence(rng, 30, 6))};
    CHECK(graded_via_sumsets(s) == is_graded(s, s.apery()).first);
  }
}

TEST_CASE("poset isomorphism") {
  SUBCASE("divisor chain: affine total order vs projective non-chain") {
    const auto res = are_isomorphic(affine_poset_of({1, 2, 4, 8}), projective_poset_of({1, 2, 4, 8}));
    CHECK_FALSE(res.isomorphic);
  }
  SUBCASE("arithmetic with a_1 > n-2: isomorphic with a witness") {
    const auto p = affine_poset_of({5, 6, 7, 8, 9, 10});
    const auto q = projective_poset_of({5, 6, 7, 8, 9, 10});
    const auto res = are_isomorphic(p, q);
    REQUIRE(res.isomorphic);
    // Witness maps cover edges to cover edges bijectively.
    std::set<std::pair<int, int>> qe(q.hasse.begin(), q.hasse.end());
    for (auto [a, b] : p.hasse)
      CHECK(qe.count({res.mapping[static_cast<size_t>(a)], res.mapping[static_cast<size_t>(b)]}) == 1);
  }
  SUBCASE("identity") {
    const auto p = affine_poset_of({5, 11, 13});
    CHECK(are_isomorphic(p, p).isomorphic);
  }
  SUBCASE("<5,11,13>: sizes 13 vs 16") {
    CHECK_FALSE(are_isomorphic(affine_poset_of({5, 11, 13}), projective_poset_of({5, 11, 13})).isomorphic);
  }
}

TEST_CASE("isomorphic posets have equal rank multisets and degree sequences") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 30; ++trial) {
    const auto terms = oracle::random_sequence(rng, 24, 6);
    const auto p = affine_poset_of(terms);
    const auto q = projective_poset_of(terms);
    const auto res = are_isomorphic(p, q);
    if (!res.isomorphic) continue;
    auto degree_multiset = [](const AperyPoset& poset) {
      std::vector<std::pair<int, int>> deg(static_cast<size_t>(poset.size()), {0, 0});
      for (auto [a, b] : poset.hasse) {
        deg[static_cast<size_t>(a)].first++;
        deg[static_cast<size_t>(b)].second++;
      }
      std::sort(deg.begin(), deg.end());
      return deg;
    };
    CHECK(degree_multiset(p) == degree_multiset(q));
    if (p.graded && q.graded) {
      auto rp = p.ranks, rq = q.ranks;
      std::sort(rp.begin(), rp.end());
      std::sort(rq.begin(), rq.end());
      CHECK(rp == rq);
    }
  }
}

namespace {

// Permutation oracle for order isomorphism of small cover DAGs.
bool iso_brute_force(const AperyPoset& p, const AperyPoset& q) {
  if (p.size() != q.size() || p.hasse.size() != q.hasse.size()) return false;
  std::vector<int> perm(static_cast<size_t>(p.size()));
  std::iota(perm.begin(), perm.end(), 0);
  std::set<std::pair<int, int>> qe(q.hasse.begin(), q.hasse.end());
  do {
    bool ok = true;
    for (auto [a, b] : p.hasse)
      if (!qe.count({perm[static_cast<size_t>(a)], perm[static_cast<size_t>(b)]})) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("isomorphism decision agrees with the permutation oracle on small posets") {
  std::mt19937_64 rng(31337);
  int compared = 0;
  while (compared < 25) {
    const auto terms = oracle::random_sequence(rng, 9, 5);
    const auto p = affine_poset_of(terms);
    const auto q = projective_poset_of(terms);
    if (p.size() > 8 || q.size() > 8) continue;
    ++compared;
    CHECK(are_isomorphic(p, q).isomorphic == iso_brute_force(p, q));
  }
}

TEST_CASE("ranks increase by one along every cover edge") {
  std::mt19937_64 rng(246);
  for (int trial = 0; trial < 30; ++trial) {
    const auto terms = oracle::random_sequence(rng, 28, 6);
    for (const auto& p : {affine_poset_of(terms), projective_poset_of(terms)}) {
      if (!p.graded) continue;
      CHECK(p.ranks[0] >= 0);
      for (auto [a, b] : p.hasse)
        REQUIRE(p.ranks[static_cast<size_t>(b)] == p.ranks[static_cast<size_t>(a)] + 1);
    }
  }
}

TEST_CASE("dot export") {
  const NumericalSemigroup s{Sequence({1})};
  const auto single = hasse_affine(s, s.apery(1));
  const std::string one = to_dot(single);
  CHECK(one.find("digraph") != std::string::npos);
  CHECK(one.find("\"0\";") != std::string::npos);
  CHECK(one.find("->") == std::string::npos);

  const auto p = affine_poset_of({5, 11, 13});
  const std::string dot = to_dot(p);
  size_t arrows = 0;
  for (size_t at = dot.find("->"); at != std::string::npos; at = dot.find("->", at + 1)) ++arrows;
  CHECK(arrows == p.hasse.size());
  CHECK(to_dot(p) == dot);  // deterministic

  const auto chain = hasse_affine(s, s.apery(3));
  const std::string cdot = to_dot(chain);
  CHECK(cdot.find("\"0\" -> \"1\"") != std::string::npos);
  CHECK(cdot.find("\"1\" -> \"2\"") != std::string::npos);
}
