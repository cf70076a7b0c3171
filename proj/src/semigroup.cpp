#include "monocurve/semigroup.hpp"

#include <algorithm>
#include <numeric>

namespace monocurve {

Sequence::Sequence(std::vector<long long> terms, bool normalize_gcd) : terms_(std::move(terms)) {
  if (terms_.empty()) throw InvalidInputError("sequence must be nonempty");
  long long prev = 0;
  for (long long t : terms_) {
    if (t <= prev) throw InvalidInputError("sequence terms must be strictly increasing and positive");
    prev = t;
  }
  gcd_ = 0;
  for (long long t : terms_) gcd_ = std::gcd(gcd_, t);
  if (normalize_gcd && gcd_ > 1) {
    for (long long& t : terms_) t /= gcd_;
    gcd_ = 1;
  }
}

void Sequence::require_coprime() const {
  if (gcd_ != 1) throw GcdError("generators are not relatively prime (gcd = " + std::to_string(gcd_) + ")");
}

Sequence dual_sequence(const Sequence& seq) {
  const long long d = seq.degree();
  std::vector<long long> out;
  for (int i = seq.size() - 1; i >= 1; --i) out.push_back(d - seq.term(i));
  out.push_back(d);
  return Sequence(out);
}

bool AperySet::contains(long long y) const {
  if (y < 0) return false;
  return elements[static_cast<size_t>(y % modulus)] == y;
}

long long AperySet::max() const { return *std::max_element(elements.begin(), elements.end()); }

std::vector<long long> AperySet::sorted() const {
  std::vector<long long> out = elements;
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Membership closure of arbitrary positive generators on 0..bound.
// Works for any gcd; used both for the main table and for msg pruning.
std::vector<char> closure_table(const std::vector<long long>& gens, long long bound) {
  std::vector<char> in(static_cast<size_t>(bound) + 1, 0);
  in[0] = 1;
  for (long long x = 1; x <= bound; ++x) {
    for (long long g : gens) {
      if (g > x) break;  // gens sorted ascending
      if (in[static_cast<size_t>(x - g)]) {
        in[static_cast<size_t>(x)] = 1;
        break;
      }
    }
  }
  return in;
}

}  // namespace

NumericalSemigroup::NumericalSemigroup(Sequence seq) : seq_(std::move(seq)) {
  seq_.require_coprime();
  const auto& gens = seq_.terms();
  const long long a1 = gens.front();

  // Grow the closure table until a_1 consecutive members appear; every
  // larger integer is then a member, so the last gap is the Frobenius
  // number.
  long long bound = std::accumulate(gens.begin(), gens.end(), 0LL) + a1;
  std::vector<char> table;
  for (;;) {
    table = closure_table(gens, bound);
    long long run = 0;
    long long last_gap = -1;
    bool done = false;
    for (long long x = 0; x <= bound; ++x) {
      if (table[static_cast<size_t>(x)]) {
        if (++run == a1) {
          done = true;
          break;
        }
      } else {
        run = 0;
        last_gap = x;
      }
    }
    if (done) {
      frobenius_ = last_gap;
      break;
    }
    bound *= 2;
  }

  // Final table covers 0..F + sum(generators) so downstream queries
  // (Apery scans, divisor complexes) are lookups.
  const long long span = frobenius_ + std::accumulate(gens.begin(), gens.end(), 0LL);
  table_ = closure_table(gens, std::max(span, a1));

  for (long long x = 1; x <= frobenius_; ++x)
    if (!table_[static_cast<size_t>(x)]) gaps_.push_back(x);

  // Minimal generators: drop any presented generator representable by
  // the others, largest first, rescanning after each removal.
  msg_ = gens;
  bool removed = true;
  while (removed && msg_.size() > 1) {
    removed = false;
    for (int i = static_cast<int>(msg_.size()) - 1; i >= 0; --i) {
      std::vector<long long> rest;
      for (int j = 0; j < static_cast<int>(msg_.size()); ++j)
        if (j != i) rest.push_back(msg_[j]);
      const auto t = closure_table(rest, msg_[static_cast<size_t>(i)]);
      if (t[static_cast<size_t>(msg_[static_cast<size_t>(i)])]) {
        msg_.erase(msg_.begin() + i);
        removed = true;
        break;
      }
    }
  }
}

bool NumericalSemigroup::member(long long x) const {
  if (x < 0) return false;
  if (x < static_cast<long long>(table_.size())) return table_[static_cast<size_t>(x)] != 0;
  return x > frobenius_;
}

AperySet NumericalSemigroup::apery() const { return apery(seq_.degree()); }

AperySet NumericalSemigroup::apery(long long c) const {
  if (c < 1 || !member(c)) throw NotMemberError("Apery modulus " + std::to_string(c) + " is not a nonzero member");
  AperySet ap;
  ap.modulus = c;
  ap.elements.assign(static_cast<size_t>(c), -1);
  // Minimal member in each residue class; all lie below F + c + 1.
  for (long long r = 0; r < c; ++r) {
    for (long long x = r;; x += c) {
      if (member(x)) {
        ap.elements[static_cast<size_t>(r)] = x;
        break;
      }
    }
  }
  return ap;
}

std::vector<std::set<long long>> NumericalSemigroup::factorization_length_table(long long bound) const {
  std::vector<std::set<long long>> lengths(static_cast<size_t>(bound) + 1);
  lengths[0].insert(0);
  for (long long x = 1; x <= bound; ++x) {
    for (long long g : msg_) {
      if (g > x) break;
      for (long long l : lengths[static_cast<size_t>(x - g)]) lengths[static_cast<size_t>(x)].insert(l + 1);
    }
  }
  return lengths;
}

std::set<long long> NumericalSemigroup::factorization_lengths(long long b) const {
  if (!member(b)) throw NotMemberError(std::to_string(b) + " is not a member");
  auto table = factorization_length_table(b);
  return table[static_cast<size_t>(b)];
}

bool NumericalSemigroup::is_symmetric() const {
  if (frobenius_ == -1) return true;  // S = N
  for (long long b = 0; b <= frobenius_; ++b)
    if (member(b) == member(frobenius_ - b)) return false;
  return true;
}

NumericalSemigroup build_semigroup(std::vector<long long> terms, bool normalize_gcd) {
  return NumericalSemigroup(Sequence(std::move(terms), normalize_gcd));
}

}  // namespace monocurve
