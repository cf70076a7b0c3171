#include <doctest.h>

#include <algorithm>
#include "monocurve/report.hpp"

using namespace monocurve;

TEST_CASE("analyze report is consistent and round-trips byte-identically") {
  const auto report = analyze_curve(Sequence({4, 5, 6, 7, 8}));
  CHECK(report["betti"]["affine"]["totals"] == nlohmann::json({1, 7, 14, 11, 3}));
  CHECK(report["betti"]["projective"]["totals"] == nlohmann::json({1, 7, 14, 11, 3}));
  CHECK(report["betti"]["equal"] == true);
  for (const auto& [name, ok] : report["cross_checks"].items()) {
    INFO(name);
    CHECK(ok.get<bool>());
  }
  const std::string text = report.dump(2);
  CHECK(nlohmann::json::parse(text).dump(2) == text);
}

TEST_CASE("divisor chain example: not isomorphic but equal Betti sequences") {
  const auto report = analyze_curve(Sequence({1, 2, 4, 8}));
  CHECK(report["posets"]["iso"] == false);
  CHECK(report["betti"]["equal"] == true);
  CHECK(report["betti"]["affine"]["totals"] == nlohmann::json({1, 3, 3, 1}));
}

TEST_CASE("two generator curve") {
  const auto report = analyze_curve(Sequence({3, 4}));
  CHECK(report["betti"]["affine"]["totals"] == nlohmann::json({1, 1}));
  CHECK(report["toric"]["affine_minimal_generators"] == 1);
}

TEST_CASE("skip-betti mode omits resolutions") {
  AnalyzeOptions opt;
  opt.skip_betti = true;
  const auto report = analyze_curve(Sequence({5, 11, 13}), opt);
  CHECK(report["betti"].is_null());
  CHECK(report["posets"]["iso"] == false);
  CHECK(report["apery"]["projective"]["count"] == 16);
}

TEST_CASE("analyze rejects unusable inputs") {
  CHECK_THROWS_AS(analyze_curve(Sequence({2, 4, 6})), GcdError);
  CHECK_THROWS_AS(analyze_curve(Sequence({1})), InvalidInputError);
}

TEST_CASE("shift sweep rows and csv layout") {
  const auto rows = shift_sweep({0, 1, 2, 3, 4}, 4, 5);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].shift == 4);
  CHECK(rows[0].sequence == std::vector<long long>{4, 5, 6, 7, 8});
  CHECK(rows[0].betti_equal);  // intro example (a)
  CHECK(rows[1].shift == 5);

  const auto rows6 = shift_sweep({0, 1, 2, 3, 4, 5}, 4, 4);
  CHECK_FALSE(rows6[0].betti_equal);  // intro example (b)

  const std::string csv = sweep_csv(rows);
  CHECK(csv.rfind("j,sequence,cm,betti_affine,betti_projective,betti_equal,j_ge_N,j_ge_M\n", 0) == 0);
  CHECK(csv.find("4,4 5 6 7 8,1,1 7 14 11 3,1 7 14 11 3,1,") != std::string::npos);
  const size_t lines = static_cast<size_t>(std::count(csv.begin(), csv.end(), '\n'));
  CHECK(lines == rows.size() + 1);
}

TEST_CASE("sweep bounds") {
  // Appending j to {4,9,10} is the shifted family of its gap offsets,
  // so the appending threshold 73 becomes a shift bound at 73 - 10.
  CHECK(shift_cm_bound({0, 1, 6, 10}) == 63);
  CHECK(shift_cm_bound({0, 7}) == 0);
  CHECK_THROWS_AS(shift_sweep({0, 2}, 0, 3), InvalidInputError);
}

TEST_CASE("gorenstein report") {
  const auto report = gorenstein_report({4, 9, 10});
  CHECK(report["sequence"] == nlohmann::json({4, 8, 9, 10, 12, 13, 14}));
  CHECK(report["analysis"]["gorenstein"]["verdict"] == true);
  CHECK(report["analysis"]["betti"]["projective"]["regularity"] == 3);
}
