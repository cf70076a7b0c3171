#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "monocurve/semigroup.hpp"

namespace monocurve {

struct AnalyzeOptions {
  bool skip_betti = false;
  long long field_char = 32003;
  long long betti_bound = 0;  // 0 = default (d + 2)
  long long apery_bound = 0;  // 0 = default escalation cap
};

/// Full pipeline over one sequence: semigroup invariants, Apery sets,
/// posets, the independent Cohen-Macaulay tests, Gorenstein parts,
/// Betti tables, and a cross-check matrix of every redundant
/// computation. Inconsistencies raise InternalConsistencyError rather
/// than being patched over.
nlohmann::json analyze_curve(const Sequence& seq, const AnalyzeOptions& opt = {});

struct SweepRow {
  long long shift = 0;
  std::vector<long long> sequence;
  bool cohen_macaulay = false;
  std::vector<long long> betti_affine;
  std::vector<long long> betti_projective;
  bool betti_equal = false;
  bool shift_ge_vu_bound = false;
  bool shift_ge_cm_bound = false;
};

/// Least shift known to make the projective closure of the shifted
/// family arithmetically Cohen-Macaulay: the appending threshold of the
/// dual base, expressed in shift coordinates.
long long shift_cm_bound(const std::vector<long long>& offsets);

/// One row per shift j in [j_from, j_to] for the family j+c_1, ...,
/// j+c_n (offsets start at 0; shifted terms are gcd-normalized when
/// needed). Rows are computed concurrently and returned sorted by j.
std::vector<SweepRow> shift_sweep(const std::vector<long long>& offsets, long long j_from,
                                  long long j_to, const AnalyzeOptions& opt = {});

/// Fixed-layout CSV: j,sequence,cm,betti_affine,betti_projective,
/// betti_equal,j_ge_N,j_ge_M.
std::string sweep_csv(const std::vector<SweepRow>& rows);

/// Gorenstein construction report for the semigroup generated by
/// `generators`.
nlohmann::json gorenstein_report(const std::vector<long long>& generators,
                                 const AnalyzeOptions& opt = {});

}  // namespace monocurve
