#include "monocurve/families.hpp"

#include <algorithm>
#include <numeric>

#include "monocurve/homogeneous.hpp"

namespace monocurve {

ArithmeticParams::ArithmeticParams(long long a1_, long long e_, int n_) : a1(a1_), e(e_), n(n_) {
  if (a1 < 1 || e < 1 || n < 2) throw InvalidInputError("arithmetic family needs a1, e >= 1 and n >= 2");
  if (std::gcd(a1, e) != 1) throw InvalidInputError("arithmetic family needs gcd(a1, e) = 1");
}

Sequence ArithmeticParams::sequence() const {
  std::vector<long long> terms;
  for (int i = 1; i <= n; ++i) terms.push_back(term(i));
  return Sequence(terms);
}

namespace {

AperySet place_by_residue(const std::vector<long long>& values, long long modulus) {
  AperySet ap;
  ap.modulus = modulus;
  ap.elements.assign(static_cast<size_t>(modulus), -1);
  for (long long v : values) {
    long long& slot = ap.elements[static_cast<size_t>(v % modulus)];
    if (slot != -1) throw InternalConsistencyError("two Apery values share a residue class");
    slot = v;
  }
  for (long long v : ap.elements)
    if (v == -1) throw InternalConsistencyError("residue class without an Apery value");
  return ap;
}

}  // namespace

AperySet arithmetic_apery(const ArithmeticParams& p) {
  const long long d = p.degree();
  std::vector<long long> values;
  for (long long b = 0; b < d; ++b) values.push_back(p.q_of(b) * p.a1 + p.r_of(b) * p.e);
  return place_by_residue(values, d);
}

bool arithmetic_iso_check(const ArithmeticParams& p) { return p.a1 > p.n - 2; }

AperySet punctured_apery(const ArithmeticParams& p, int r) {
  if (p.n < 4) throw HypothesisError("closed form requires n >= 4");
  if (r < 2 || r > p.n - 1) throw InvalidInputError("puncture index must lie in 2..n-1");
  if (p.a1 < r) throw HypothesisError("closed form requires a_1 >= r");
  {
    long long g = 0;
    for (int i = 1; i <= p.n; ++i)
      if (i != r) g = std::gcd(g, p.term(i));
    if (g != 1) throw HypothesisError("punctured generators are not coprime");
  }
  const long long d = p.degree();
  std::vector<long long> values;
  for (long long v : arithmetic_apery(p).elements) values.push_back(v);

  auto replace = [&values](long long from, long long to) {
    auto it = std::find(values.begin(), values.end(), from);
    if (it == values.end()) throw InternalConsistencyError("expected Apery element is missing");
    *it = to;
  };

  if (r == 2) {
    const long long t = (p.a1 % (p.n - 1) == 0) ? p.q() + p.e : p.q() + p.e - 1;
    for (long long mu = 0; mu <= t; ++mu) replace(p.v(mu), p.v(mu) + d);
  } else if (r == p.n - 1) {
    const long long mult = (p.a1 % (p.n - 1) == 0) ? p.q() + 1 : p.q();
    replace(p.term(r), p.term(r) + mult * d);
  } else {
    replace(p.term(r), p.term(r) + d);
  }
  return place_by_residue(values, d);
}

bool punctured_iso_check(const ArithmeticParams& p, int r) {
  if (p.n < 4) throw HypothesisError("punctured criterion requires n >= 4");
  if (r < 2 || r > p.n - 1) throw InvalidInputError("puncture index must lie in 2..n-1");
  if (r == 2) return p.a1 > p.n - 2 && p.a1 != p.n;
  if (r == p.n - 1) return p.a1 >= p.n - 2;
  return p.a1 >= p.n && r <= p.a1 - p.n + 1;
}

Sequence projection(const Sequence& seq, int r, bool normalize_gcd) {
  if (r < 1 || r > seq.size()) throw InvalidInputError("projection index out of range");
  if (seq.size() <= 2) throw DegenerateError("projection would leave fewer than two terms");
  std::vector<long long> terms;
  for (int i = 1; i <= seq.size(); ++i)
    if (i != r) terms.push_back(seq.term(i));
  return Sequence(terms, normalize_gcd);
}

long long vu_bound(const std::vector<long long>& offsets) {
  if (offsets.empty() || offsets.front() != 0)
    throw InvalidInputError("offsets must start with 0");
  for (size_t i = 1; i < offsets.size(); ++i)
    if (offsets[i] <= offsets[i - 1]) throw InvalidInputError("offsets must be strictly increasing");
  long long interior = 0;
  for (size_t i = 1; i + 1 < offsets.size(); ++i) interior += offsets[i];
  return (offsets.back() - 1) * interior;
}

long long cm_threshold(const std::vector<long long>& terms) {
  if (terms.empty()) throw InvalidInputError("empty sequence");
  const long long an = terms.back();
  long long sum = 0;
  for (size_t i = 0; i + 1 < terms.size(); ++i) sum += an - terms[i];
  return an + (an - 1) * sum;
}

GorensteinParts gorenstein_parts(const Sequence& seq) {
  seq.require_coprime();
  const long long d = seq.degree();
  const NumericalSemigroup s1(seq);
  const NumericalSemigroup s2(dual_sequence(seq));
  GorensteinParts parts;
  parts.s1_symmetric = s1.is_symmetric();
  parts.s2_symmetric = s2.is_symmetric();
  const long long fsum = s1.frobenius() + s2.frobenius();
  parts.degree_divides_frobenius_sum = ((fsum % d) + d) % d == 0;

  // Cohen-Macaulay via the residue-pair test: (r_i, t_{d-i}) in S.
  const HomogeneousMonoid M(seq);
  const AperySet ap1 = s1.apery(d);
  const AperySet ap2 = s2.apery(d);
  parts.cohen_macaulay = true;
  for (long long i = 1; i < d; ++i) {
    const Vec2 y{ap1.elements[static_cast<size_t>(i)], ap2.elements[static_cast<size_t>(d - i)]};
    if (!M.member(y)) {
      parts.cohen_macaulay = false;
      break;
    }
  }
  return parts;
}

bool gorenstein_check(const Sequence& seq) { return gorenstein_parts(seq).all(); }

Sequence gorenstein_construct(const NumericalSemigroup& T) {
  if (!T.is_symmetric()) throw NotSymmetricError("semigroup is not symmetric");
  if (T.member(2)) throw TwoInSemigroupError("2 is a member of the semigroup");
  const long long f = T.frobenius();
  std::vector<long long> terms;
  for (long long x = 1; x < f; ++x)
    if (T.member(x)) terms.push_back(x);
  const Sequence seq(terms);
  const long long d = seq.degree();
  if (d != f - 1) throw InternalConsistencyError("largest small element is not F - 1");

  // Witness set from the construction: must lie inside the homogenized
  // monoid, and the curve must test Gorenstein.
  const HomogeneousMonoid M(seq);
  std::vector<Vec2> witness{{0, 0}, {2 * d + 1, d - 1}};
  for (long long a = 2; a < d; ++a) {
    if (T.member(a))
      witness.push_back({a, d - a});
    else
      witness.push_back({d + a, d - a});
  }
  for (Vec2 y : witness)
    if (!M.member(y)) throw InternalConsistencyError("witness element escapes the monoid");
  if (!gorenstein_check(seq)) throw InternalConsistencyError("constructed curve is not Gorenstein");
  return seq;
}

long long arithmetic_cm_type(long long a1, int n) {
  if (n < 2) throw InvalidInputError("type formula needs n >= 2");
  const long long r = (a1 - 1) % (n - 1);
  return r == 0 ? n - 1 : r;
}

}  // namespace monocurve
