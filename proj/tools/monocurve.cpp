#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "monocurve/families.hpp"
#include "monocurve/homogeneous.hpp"
#include "monocurve/poset.hpp"
#include "monocurve/report.hpp"

namespace {

// Exit codes: 0 ok, 2 bad input, 3 internal consistency failure,
// 4 precondition failure.
constexpr int kBadInput = 2;
constexpr int kInconsistent = 3;
constexpr int kPrecondition = 4;

std::vector<long long> parse_terms(const std::string& spec) {
  std::vector<long long> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    const long long v = std::stoll(item, &pos);
    if (pos != item.size()) throw monocurve::InvalidInputError("bad integer: " + item);
    out.push_back(v);
  }
  if (out.empty()) throw monocurve::InvalidInputError("empty sequence");
  return out;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of affine and projective monomial curves"};
  app.require_subcommand(1);

  std::string seq_spec, out_path, which = "ap1", offsets_spec, format;
  bool normalize = false, skip_betti = false;
  long long field_char = 32003, betti_bound = 0, apery_bound = 0;
  long long j_from = 1, j_to = 1;
  int proj_r = 1;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--normalize", normalize, "divide the input by its gcd");
    cmd->add_option("--field-char", field_char, "homology field characteristic (prime, or 0 for exact rationals)");
    cmd->add_option("--betti-bound", betti_bound, "override the projective Betti degree bound");
    cmd->add_option("--apery-bound", apery_bound, "cap for the projective Apery degree scan");
    cmd->add_option("--format", format, "output format: json, csv or dot")
        ->check(CLI::IsMember({"json", "csv", "dot"}));
    cmd->add_option("-o,--out", out_path, "output file (default stdout)");
  };
  auto require_format = [&](const char* natural) {
    if (!format.empty() && format != natural)
      throw monocurve::InvalidInputError("this command emits " + std::string(natural) + " output");
  };

  auto* analyze = app.add_subcommand("analyze", "full invariant report for a sequence (JSON)");
  analyze->add_option("sequence", seq_spec, "comma-separated generators, e.g. 4,5,6,7,8")->required();
  analyze->add_flag("--skip-betti", skip_betti, "poset-only mode, no resolutions");
  add_common(analyze);

  auto* hasse = app.add_subcommand("hasse", "Apery poset as a Graphviz digraph");
  hasse->add_option("sequence", seq_spec)->required();
  hasse->add_option("--which", which, "ap1 (affine) or aps (projective)")
      ->check(CLI::IsMember({"ap1", "aps"}));
  add_common(hasse);

  auto* sweep = app.add_subcommand("shift-sweep", "Betti comparison along the shifted family (CSV)");
  sweep->add_option("offsets", offsets_spec, "comma-separated offsets starting at 0")->required();
  sweep->add_option("--from", j_from, "first shift");
  sweep->add_option("--to", j_to, "last shift");
  add_common(sweep);

  auto* gor = app.add_subcommand("gorenstein", "Gorenstein curve from a symmetric semigroup (JSON)");
  gor->add_option("generators", seq_spec, "comma-separated generators of the semigroup")->required();
  add_common(gor);

  auto* project = app.add_subcommand("project", "report for the r-th canonical projection (JSON)");
  project->add_option("sequence", seq_spec)->required();
  project->add_option("-r", proj_r, "1-based index of the term to drop")->required();
  add_common(project);

  CLI11_PARSE(app, argc, argv);

  monocurve::AnalyzeOptions opt;
  opt.skip_betti = skip_betti;
  opt.field_char = field_char;
  opt.betti_bound = betti_bound;
  opt.apery_bound = apery_bound;

  try {
    if (analyze->parsed()) {
      require_format("json");
      const monocurve::Sequence seq(parse_terms(seq_spec), normalize);
      emit(monocurve::analyze_curve(seq, opt).dump(2) + "\n", out_path);
    } else if (hasse->parsed()) {
      require_format("dot");
      const monocurve::Sequence seq(parse_terms(seq_spec), normalize);
      seq.require_coprime();
      const monocurve::NumericalSemigroup s1(seq);
      if (which == "ap1") {
        emit(monocurve::to_dot(monocurve::hasse_affine(s1, s1.apery())), out_path);
      } else {
        const monocurve::HomogeneousMonoid monoid(seq);
        const auto aps = monocurve::apery_projective(monoid, apery_bound);
        emit(monocurve::to_dot(monocurve::hasse_projective(monoid, aps)), out_path);
      }
    } else if (sweep->parsed()) {
      require_format("csv");
      const auto rows = monocurve::shift_sweep(parse_terms(offsets_spec), j_from, j_to, opt);
      emit(monocurve::sweep_csv(rows), out_path);
    } else if (gor->parsed()) {
      require_format("json");
      emit(monocurve::gorenstein_report(parse_terms(seq_spec), opt).dump(2) + "\n", out_path);
    } else if (project->parsed()) {
      require_format("json");
      const monocurve::Sequence seq(parse_terms(seq_spec), normalize);
      auto projected = monocurve::projection(seq, proj_r, normalize);
      nlohmann::json out;
      out["projection"]["dropped_index"] = proj_r;
      out["projection"]["dropped_term"] = seq.term(proj_r);
      out["report"] = monocurve::analyze_curve(projected, opt);
      emit(out.dump(2) + "\n", out_path);
    }
  } catch (const monocurve::InternalConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return kInconsistent;
  } catch (const monocurve::NotSymmetricError& e) {
    std::cerr << "precondition failure: " << e.what() << "\n";
    return kPrecondition;
  } catch (const monocurve::TwoInSemigroupError& e) {
    std::cerr << "precondition failure: " << e.what() << "\n";
    return kPrecondition;
  } catch (const monocurve::HypothesisError& e) {
    std::cerr << "precondition failure: " << e.what() << "\n";
    return kPrecondition;
  } catch (const monocurve::DegenerateError& e) {
    std::cerr << "precondition failure: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::invalid_argument& e) {
    std::cerr << "bad input: " << e.what() << "\n";
    return kBadInput;
  } catch (const monocurve::GcdError& e) {
    std::cerr << "bad input: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "bad input: " << e.what() << "\n";
    return kBadInput;
  }
  return 0;
}
