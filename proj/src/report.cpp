#include "monocurve/report.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <numeric>
#include <sstream>
#include <thread>

#include "monocurve/betti.hpp"
#include "monocurve/families.hpp"
#include "monocurve/homogeneous.hpp"
#include "monocurve/poset.hpp"
#include "monocurve/toric.hpp"

namespace monocurve {

namespace {

nlohmann::json json_betti(const BettiTable& t, bool projective) {
  nlohmann::json out;
  out["totals"] = t.totals;
  out["pd"] = t.pd;
  out["cm_type"] = t.cm_type;
  out["field_char"] = t.field_char;
  if (projective) out["regularity"] = t.regularity;
  return out;
}

bool betti_dominates(const BettiTable& proj, const BettiTable& aff) {
  for (size_t i = 0; i < std::max(proj.totals.size(), aff.totals.size()); ++i) {
    const long long p = i < proj.totals.size() ? proj.totals[i] : 0;
    const long long a = i < aff.totals.size() ? aff.totals[i] : 0;
    if (p < a) return false;
  }
  return true;
}

}  // namespace

nlohmann::json analyze_curve(const Sequence& seq, const AnalyzeOptions& opt) {
  seq.require_coprime();
  if (seq.size() < 2) throw InvalidInputError("curve analysis needs at least two generators");
  const long long d = seq.degree();
  const int n = seq.size();

  const NumericalSemigroup s1(seq);
  const Sequence dual = dual_sequence(seq);
  const NumericalSemigroup s2(dual);
  const AperySet ap1 = s1.apery(d);
  const AperySet ap2 = s2.apery(d);
  const HomogeneousMonoid monoid(seq);
  const ProjectiveAperySet aps = apery_projective(monoid, opt.apery_bound);

  const AperyPoset affine_poset = hasse_affine(s1, ap1);
  const AperyPoset projective_poset = hasse_projective(monoid, aps);
  const IsoResult iso = are_isomorphic(affine_poset, projective_poset);

  // Three independent Cohen-Macaulay tests.
  const bool cm_apery_count = aps.size() == d;
  bool cm_residue_pairs = true;
  for (long long i = 1; i < d; ++i) {
    const Vec2 y{ap1.elements[static_cast<size_t>(i)], ap2.elements[static_cast<size_t>(d - i)]};
    if (!monoid.member(y)) {
      cm_residue_pairs = false;
      break;
    }
  }
  const GroebnerBasis affine_gb = toric_groebner(seq, false);
  const bool cm_groebner = initial_ideal_free_of(affine_gb, n - 1);
  const bool sengupta = cm_groebner && nonhomogeneous_all_involve(affine_gb, n - 1);
  const bool sumset_graded = graded_via_sumsets(s1);
  bool msg_condition = true;
  for (int i = 1; i <= n - 1; ++i)
    msg_condition = msg_condition && std::binary_search(s1.msg().begin(), s1.msg().end(), seq.term(i));

  const GorensteinParts gor = gorenstein_parts(seq);
  const auto affine_mingens = toric_ideal(seq, false);
  const auto projective_mingens = toric_ideal(seq, true);

  nlohmann::json report;
  report["input"]["sequence"] = seq.terms();
  report["input"]["degree"] = d;
  report["semigroup"]["msg"] = s1.msg();
  report["semigroup"]["frobenius"] = s1.frobenius();
  report["semigroup"]["genus"] = s1.genus();
  report["semigroup"]["symmetric"] = s1.is_symmetric();
  report["semigroup"]["dual_sequence"] = dual.terms();
  report["semigroup"]["dual_frobenius"] = s2.frobenius();
  report["apery"]["affine"] = ap1.elements;
  report["apery"]["dual"] = ap2.elements;
  {
    nlohmann::json pts = nlohmann::json::array();
    for (Vec2 p : aps.points) pts.push_back({p.u, p.v});
    report["apery"]["projective"]["points"] = pts;
    report["apery"]["projective"]["count"] = aps.size();
    report["apery"]["projective"]["degree_bound"] = aps.degree_bound;
  }
  report["posets"]["affine_graded"] = affine_poset.graded;
  report["posets"]["affine_graded_via_sumsets"] = sumset_graded;
  report["posets"]["iso"] = iso.isomorphic;
  if (iso.isomorphic) {
    nlohmann::json witness = nlohmann::json::array();
    for (int v = 0; v < affine_poset.size(); ++v) {
      const Vec2 img = projective_poset.points[static_cast<size_t>(iso.mapping[static_cast<size_t>(v)])];
      witness.push_back({affine_poset.values[static_cast<size_t>(v)], {img.u, img.v}});
    }
    report["posets"]["iso_witness"] = witness;
  } else {
    report["posets"]["iso_witness"] = nullptr;
  }
  report["cm"]["apery_count"] = cm_apery_count;
  report["cm"]["residue_pairs"] = cm_residue_pairs;
  report["cm"]["groebner"] = cm_groebner;
  report["cm"]["verdict"] = cm_groebner;
  report["gorenstein"]["verdict"] = gor.all();
  report["gorenstein"]["cohen_macaulay"] = gor.cohen_macaulay;
  report["gorenstein"]["s1_symmetric"] = gor.s1_symmetric;
  report["gorenstein"]["s2_symmetric"] = gor.s2_symmetric;
  report["gorenstein"]["degree_divides_frobenius_sum"] = gor.degree_divides_frobenius_sum;
  report["toric"]["affine_minimal_generators"] = affine_mingens.size();
  report["toric"]["projective_minimal_generators"] = projective_mingens.size();
  report["toric"]["sengupta"] = sengupta;

  nlohmann::json checks;
  checks["cm_tests_agree"] = (cm_apery_count == cm_residue_pairs) && (cm_residue_pairs == cm_groebner);
  checks["graded_routes_agree"] = affine_poset.graded == sumset_graded;
  checks["sengupta_implies_iso"] = !sengupta || iso.isomorphic;
  checks["iso_iff_cm_graded_msg"] =
      iso.isomorphic == (cm_groebner && affine_poset.graded && msg_condition);

  if (!opt.skip_betti) {
    const BettiTable aff = betti_affine(s1, opt.field_char);
    const BettiTable proj = betti_projective(monoid, opt.field_char, opt.betti_bound);
    report["betti"]["affine"] = json_betti(aff, false);
    report["betti"]["projective"] = json_betti(proj, true);
    report["betti"]["equal"] = aff.totals == proj.totals;

    checks["pd_affine"] = aff.pd == n - 1;
    checks["pd_projective_matches_cm"] = (proj.pd == n - 1) == cm_groebner;
    checks["beta1_affine_matches_toric"] =
        aff.totals.size() > 1 && aff.totals[1] == static_cast<long long>(affine_mingens.size());
    checks["beta1_projective_matches_toric"] =
        proj.totals.size() > 1 && proj.totals[1] == static_cast<long long>(projective_mingens.size());
    checks["iso_implies_betti_equal"] = !iso.isomorphic || aff.totals == proj.totals;
    checks["betti_domination"] = betti_dominates(proj, aff);
    checks["gorenstein_matches_type"] = gor.all() == (cm_groebner && proj.cm_type == 1);

    const long long abound = s1.frobenius() + std::accumulate(seq.terms().begin(), seq.terms().end(), 0LL);
    checks["k_identity_affine"] = k_polynomial_affine(aff, abound) == k_reference_affine(s1, abound);
    const long long pbound = (opt.betti_bound > 0 ? opt.betti_bound : d + 2) + n + 2;
    checks["k_identity_projective"] =
        k_polynomial_projective(proj, pbound) == k_reference_projective(monoid, pbound);
  } else {
    report["betti"] = nullptr;
  }
  report["cross_checks"] = checks;

  std::string failing;
  for (const auto& [name, ok] : checks.items())
    if (!ok.get<bool>()) failing += (failing.empty() ? "" : ", ") + name;
  if (!failing.empty())
    throw InternalConsistencyError("cross-checks failed: " + failing);
  return report;
}

long long shift_cm_bound(const std::vector<long long>& offsets) {
  vu_bound(offsets);  // validates the shape
  // The shifted family is dual to appending j + c_n to the reversed gap
  // offsets, which turns the appending CM threshold into a shift bound.
  std::vector<long long> dual_base;
  for (size_t i = offsets.size() - 1; i >= 1; --i) dual_base.push_back(offsets.back() - offsets[i]);
  dual_base.erase(dual_base.begin());  // drop leading 0
  dual_base.push_back(offsets.back());
  return cm_threshold(dual_base) - offsets.back();
}

std::vector<SweepRow> shift_sweep(const std::vector<long long>& offsets, long long j_from,
                                  long long j_to, const AnalyzeOptions& opt) {
  if (offsets.size() < 2) throw InvalidInputError("sweep needs at least two offsets");
  if (j_from < 1) throw InvalidInputError("shifts must be positive");
  const long long n_bound = vu_bound(offsets);
  const long long m_bound = shift_cm_bound(offsets);

  std::vector<long long> shifts;
  for (long long j = j_from; j <= j_to; ++j) shifts.push_back(j);
  std::vector<SweepRow> rows(shifts.size());

  auto run = [&](size_t idx) {
    const long long j = shifts[idx];
    std::vector<long long> terms;
    for (long long c : offsets) terms.push_back(j + c);
    const Sequence seq(terms, /*normalize_gcd=*/true);
    SweepRow row;
    row.shift = j;
    row.sequence = seq.terms();
    row.cohen_macaulay = gorenstein_parts(seq).cohen_macaulay;
    const NumericalSemigroup s1(seq);
    const HomogeneousMonoid monoid(seq);
    row.betti_affine = betti_affine(s1, opt.field_char).totals;
    row.betti_projective = betti_projective(monoid, opt.field_char, opt.betti_bound).totals;
    row.betti_equal = row.betti_affine == row.betti_projective;
    row.shift_ge_vu_bound = j >= n_bound;
    row.shift_ge_cm_bound = j >= m_bound;
    rows[idx] = std::move(row);
  };

  const size_t workers = std::max<size_t>(1, std::thread::hardware_concurrency());
  std::vector<std::future<void>> futures;
  std::atomic<size_t> next{0};
  for (size_t w = 0; w < std::min(workers, shifts.size()); ++w)
    futures.push_back(std::async(std::launch::async, [&]() {
      for (size_t idx = next++; idx < shifts.size(); idx = next++) run(idx);
    }));
  for (auto& f : futures) f.get();
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "j,sequence,cm,betti_affine,betti_projective,betti_equal,j_ge_N,j_ge_M\n";
  auto joined = [](const std::vector<long long>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
  };
  for (const auto& r : rows)
    out << r.shift << ',' << joined(r.sequence) << ',' << (r.cohen_macaulay ? 1 : 0) << ','
        << joined(r.betti_affine) << ',' << joined(r.betti_projective) << ','
        << (r.betti_equal ? 1 : 0) << ',' << (r.shift_ge_vu_bound ? 1 : 0) << ','
        << (r.shift_ge_cm_bound ? 1 : 0) << '\n';
  return out.str();
}

nlohmann::json gorenstein_report(const std::vector<long long>& generators,
                                 const AnalyzeOptions& opt) {
  const NumericalSemigroup t{Sequence(generators)};
  const Sequence small = gorenstein_construct(t);
  nlohmann::json out;
  out["input"]["generators"] = generators;
  out["input"]["frobenius"] = t.frobenius();
  out["sequence"] = small.terms();
  out["degree"] = small.degree();
  out["analysis"] = analyze_curve(small, opt);
  return out;
}

}  // namespace monocurve
