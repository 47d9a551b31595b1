// Copyright (C) 2026 The adiabat authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit when any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "adiabat/adiabat.h"
#include "adiabat/anticrossing.hpp"
#include "adiabat/basis.hpp"
#include "adiabat/clique.hpp"
#include "adiabat/error.hpp"
#include "adiabat/hamiltonian.hpp"
#include "adiabat/spectral.hpp"

using namespace adiabat;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

HamiltonianPair toy1(double alpha) { return make_clique_pair(toy_example_1(alpha).graph, MixerKind::swap_chain); }
HamiltonianPair toy2(double alpha) { return make_clique_pair(toy_example_2(alpha).graph, MixerKind::swap_chain); }

Outcome encoding() {
  Outcome out;
  const BasisSet b = BasisSet::weight(6, 3);
  const auto top = static_cast<Eigen::Index>(*b.find(bitstring_from_string("111000")));
  const auto bottom = static_cast<Eigen::Index>(*b.find(bitstring_from_string("000111")));
  for (const Rational alpha : {Rational(0), Rational(1, 2), Rational(2, 3)}) {
    const double a = alpha.to_double();
    const Vector t = build_clique_target(toy_example_1(alpha).graph, b);
    out.require(t(top) == -3.0 * a, "E(111000) != -3 alpha at alpha = " + alpha.to_string());
    out.require(t(bottom) == 1.0 - 4.5 * a, "E(000111) != 1 - 4.5 alpha at alpha = " + alpha.to_string());
  }
  int agreed = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    RandomInstanceParams p;
    p.n = 4 + static_cast<int>(seed % 5);
    p.k = 1 + static_cast<int>(seed % static_cast<std::uint64_t>(p.n - 1));
    p.seed = 1000 + seed;
    p.alpha = 0.05 * static_cast<double>(seed % 15);
    const CliqueInstance inst = random_instance(p);
    std::vector<double> oracle;
    for (const auto& e : brute_force(inst.graph).table) oracle.push_back(e.energy);
    std::sort(oracle.begin(), oracle.end());
    Vector diag = make_clique_pair(inst.graph, MixerKind::swap_chain).target;
    std::sort(diag.begin(), diag.end());
    bool same = static_cast<std::size_t>(diag.size()) == oracle.size();
    for (std::size_t i = 0; same && i < oracle.size(); ++i) same = diag(static_cast<Eigen::Index>(i)) == oracle[i];
    agreed += same;
  }
  out.require(agreed == 50, std::to_string(50 - agreed) + " random instances disagree");
  out.note(std::to_string(agreed) + "/50 random spectra identical");
  return out;
}

Outcome identities() {
  Outcome out;
  double worst5 = 0.0;
  double worst6 = 0.0;
  std::size_t evaluated = 0;
  for (int which = 0; which < 2; ++which) {
    for (double alpha : {0.0, 0.5}) {
      const HamiltonianPair p = which == 0 ? toy1(alpha) : toy2(alpha);
      for (int t = 0; t <= 20; ++t) {
        const double s = t / 20.0;
        const Eigensystem e = eigendecompose(p.at(s));
        const double gap = e.value(1) - e.value(0);
        for (std::size_t i = 0; i < p.basis.size(); ++i) {
          for (std::size_t k = 0; k < e.size(); ++k)
            if (auto r = energy_identity_residual(p, e, s, i, k)) {
              worst5 = std::max(worst5, std::abs(*r) / (1e-8 * (1 + std::abs(e.value(k)))));
              ++evaluated;
            }
          if (auto r = gap_identity_residual(p, e, s, i)) {
            worst6 = std::max(worst6, std::abs(*r) / (1e-8 * (1 + gap)));
            ++evaluated;
          }
        }
      }
    }
  }
  out.require(worst5 <= 1.0, "energy identity above tolerance");
  out.require(worst6 <= 1.0, "gap identity above tolerance");
  out.note(std::to_string(evaluated) + " residuals, worst/tol " + fmt(worst5) + " and " + fmt(worst6));
  return out;
}

Vector aligned(Vector v, const Eigen::Ref<const Vector>& ref) {
  if (v.dot(ref) < 0) v = -v;
  return v;
}

Outcome derivative_formulas() {
  Outcome out;
  const HamiltonianPair p = toy1(0.5);
  const double s_star = min_gap(p).s_star;
  std::mt19937_64 rng(2026);
  std::uniform_real_distribution<double> dist(0.05, 0.95);
  double e1 = 0.0;
  double e2 = 0.0;
  double ev = 0.0;
  int count = 0;
  while (count < 20) {
    const double s = dist(rng);
    if (std::abs(s - s_star) < 0.05) continue;
    ++count;
    const double h1 = 1e-5;
    const double h2 = 1e-4;
    const Eigensystem e = eigendecompose(p.at(s));
    const Eigensystem ep = eigendecompose(p.at(s + h1));
    const Eigensystem em = eigendecompose(p.at(s - h1));
    const Eigensystem ep2 = eigendecompose(p.at(s + h2));
    const Eigensystem em2 = eigendecompose(p.at(s - h2));
    e1 = std::max(e1, std::abs(eigenvalue_derivative(p, e, 0) - (ep.value(0) - em.value(0)) / (2 * h1)));
    e2 = std::max(e2, std::abs(eigenvalue_second_derivative(p, e, 0) -
                               (ep2.value(0) - 2 * e.value(0) + em2.value(0)) / (h2 * h2)));
    const Vector fd = (aligned(ep.vector(0), e.vector(0)) - aligned(em.vector(0), e.vector(0))) / (2 * h1);
    ev = std::max(ev, (eigenvector_derivative(p, e, 0) - fd).norm());
  }
  out.require(e1 <= 1e-6, "first derivative error " + fmt(e1));
  out.require(e2 <= 1e-5, "second derivative error " + fmt(e2));
  out.require(ev <= 1e-6, "vector derivative error " + fmt(ev));
  out.note("ground level, max errors " + fmt(e1) + " / " + fmt(e2) + " / " + fmt(ev));
  return out;
}

Outcome gap_expression() {
  Outcome out;
  struct Case {
    bool second;
    double alpha;
  };
  double worst = 0.0;
  for (const Case c : {Case{false, 0.0}, Case{false, 0.2}, Case{false, 0.5}, Case{false, 0.6}, Case{false, 0.66},
                       Case{true, 0.2}}) {
    const HamiltonianPair p = c.second ? toy2(c.alpha) : toy1(c.alpha);
    const MinGap g = min_gap(p);
    const double curvature = std::abs(eigenvalue_second_derivative(p, g.s_star, 1) -
                                      eigenvalue_second_derivative(p, g.s_star, 0));
    const double r = check_prop1(p, partition_final_levels(p), g.s_star, 1e-6 + curvature * 1e-10);
    const double ratio = r / (1e-6 * (1 + g.delta_min));
    worst = std::max(worst, ratio);
    out.require(ratio <= 1.0, std::string(c.second ? "toy 2" : "toy 1") + " alpha " + fmt(c.alpha) +
                                  " residual " + fmt(r));
  }
  out.note("worst residual/tol " + fmt(worst));
  return out;
}

Outcome definitions() {
  Outcome out;
  const AntiCrossingReport r0 = analyze(toy1(0.0));
  const AntiCrossingReport r5 = analyze(toy1(0.5));
  if (!r0.choi || !r0.g_def || !r5.choi || !r5.g_def) {
    out.require(false, "a measurement is missing");
    return out;
  }
  out.note("alpha 0: choi gamma " + fmt(r0.choi->gamma) + " eps " + fmt(r0.choi->epsilon) + ", g gamma " +
           fmt(r0.g_def->gamma) + " eps " + fmt(r0.g_def->epsilon));
  out.note("alpha 0.5: choi gamma " + fmt(r5.choi->gamma) + ", g gamma " + fmt(r5.g_def->gamma) + " eps " +
           fmt(r5.g_def->epsilon));
  out.require(r0.choi->satisfied && r0.choi->gamma <= 0.1 && r0.choi->epsilon <= 0.1,
              "alpha 0 first definition not within 0.1");
  out.require(!r5.choi->satisfied, "alpha 0.5 first definition satisfied");
  out.require(r5.g_def->satisfied && r5.g_def->gamma <= 0.1 && r5.g_def->epsilon <= 0.1,
              "alpha 0.5 g-definition not within 0.1");
  for (const AntiCrossingReport* r : {&r0, &r5}) {
    if (r->choi->satisfied && r->g_def->satisfied)
      out.require(r->g_def->gamma <= r->choi->gamma && r->g_def->epsilon <= r->choi->epsilon,
                  "g-definition parameters exceed the first definition's");
  }
  return out;
}

Outcome gap_bound() {
  Outcome out;
  const AntiCrossingReport r0 = analyze(toy1(0.0));
  double worst = 1e300;
  if (!r0.corollary1_margin) {
    out.require(false, "toy 1 alpha 0 has no margin");
  } else {
    worst = *r0.corollary1_margin;
    out.require(*r0.corollary1_margin >= 0.0, "toy 1 margin negative");
  }
  int found = 0;
  std::uint64_t seed = 0;
  for (; seed < 400 && found < 10; ++seed) {
    RandomInstanceParams p;
    p.n = 6;
    p.k = 3;
    p.seed = seed;
    const HamiltonianPair pair = make_clique_pair(random_instance(p).graph, MixerKind::swap_chain);
    AntiCrossingReport r;
    try {
      r = analyze(pair);
    } catch (const Error&) {
      continue;
    }
    if (!r.choi || !r.choi->satisfied || !r.corollary1_margin) continue;
    ++found;
    worst = std::min(worst, *r.corollary1_margin);
    out.require(*r.corollary1_margin >= 0.0, "seed " + std::to_string(seed) + " margin " + fmt(*r.corollary1_margin));
  }
  out.require(found == 10, "only " + std::to_string(found) + " random instances satisfy the first definition");
  out.note(std::to_string(found) + " random instances from seeds < " + std::to_string(seed) + ", smallest margin " +
           fmt(worst));
  return out;
}

Outcome rotation() {
  Outcome out;
  double previous_gap = 1e300;
  double previous_slope = -1.0;
  for (double alpha : {0.6, 0.63, 0.66}) {
    const HamiltonianPair p = toy1(alpha);
    const MinGap g = min_gap(p);
    const double h = derivative_step(p, g.s_star, g.delta_min);
    const Theorem2Check t = check_theorem2(p, g.s_star, h);
    const Corollary2Check c = check_corollary2(p, g.s_star, h);
    const std::string tag = "alpha " + fmt(alpha);
    out.note(tag + ": gap " + fmt(g.delta_min) + " thm " + fmt(t.residual0) + "/" + fmt(t.residual1) + " cor " +
             fmt(c.sum_residual) + "/" + fmt(c.diff_residual) + " (exact form " + fmt(c.exact_residual) + ") g0' " +
             fmt(c.g0_prime) + " offdiag " + fmt(t.offdiag_max));
    out.require(std::max(t.residual0, t.residual1) <= 1e-2, tag + " rotation residual above 1e-2");
    out.require(std::max(c.sum_residual, c.diff_residual) <= 1e-2, tag + " overlap-rate residual above 1e-2");
    out.require(c.g0_prime * c.g1_prime < 0.0, tag + " g0' and g1' share a sign");
    if (g.delta_min < previous_gap)
      out.require(std::abs(c.g0_prime) > previous_slope, tag + " |g0'| not increasing as the gap shrinks");
    else
      out.require(false, tag + " gap did not shrink");
    previous_gap = g.delta_min;
    previous_slope = std::abs(c.g0_prime);
  }
  return out;
}

Outcome dominance() {
  Outcome out;
  auto pair = std::make_shared<const HamiltonianPair>(toy2(0.2));
  const SpectralSweep sw = sweep(pair, uniform_grid(0.0, 1.0, 1001));
  const OverlapSeries ov = compute_overlaps(sw, partition_final_levels(*pair));
  struct Span {
    long first = -1;
    long last = -1;
  };
  std::vector<Span> spans;
  for (Eigen::Index k : {2, 1, 0}) {
    Span sp;
    for (Eigen::Index t = 0; t < ov.g.rows(); ++t)
      if (ov.g(t, k) > 0.5) {
        if (sp.first < 0) sp.first = static_cast<long>(t);
        sp.last = static_cast<long>(t);
      }
    out.require(sp.first >= 0, "g_" + std::to_string(k) + " never dominant");
    if (sp.first >= 0)
      out.note("g_" + std::to_string(k) + " on [" + fmt(sw.grid()[static_cast<std::size_t>(sp.first)]) + ", " +
               fmt(sw.grid()[static_cast<std::size_t>(sp.last)]) + "]");
    spans.push_back(sp);
  }
  for (std::size_t i = 1; i < spans.size(); ++i)
    if (spans[i].first >= 0 && spans[i - 1].first >= 0)
      out.require(spans[i - 1].last < spans[i].first, "dominance intervals overlap or are out of order");
  return out;
}

std::map<std::string, std::string> read_csv_tree(const fs::path& root) {
  std::map<std::string, std::string> files;
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".csv") continue;
    std::ifstream in(entry.path(), std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    files[fs::relative(entry.path(), root).generic_string()] = s.str();
  }
  return files;
}

Outcome determinism() {
  Outcome out;
  const fs::path root = fs::current_path() / "acceptance_scan";
  fs::remove_all(root);
  adb_instance* inst = nullptr;
  adb_config* cfg = nullptr;
  auto ok = [&](adb_status st) {
    if (st != ADB_OK) out.require(false, std::string("C API: ") + adb_last_error());
    return st == ADB_OK;
  };
  if (!ok(adb_instance_from_fixture("toy1", &inst)) || !ok(adb_config_new(&cfg)) ||
      !ok(adb_config_set_source(cfg, "fixture:toy1")) || !ok(adb_config_set_alpha_list(cfg, "0,0.5")) ||
      !ok(adb_config_set_output_dir(cfg, root.string().c_str()))) {
    adb_config_free(cfg);
    adb_instance_free(inst);
    return out;
  }
  std::vector<std::map<std::string, std::string>> runs;
  for (int run = 0; run < 2; ++run) {
    char* summary = nullptr;
    if (!ok(adb_cmd_scan(inst, cfg, &summary))) break;
    adb_string_free(summary);
    runs.push_back(read_csv_tree(root));
  }
  adb_config_free(cfg);
  adb_instance_free(inst);
  if (runs.size() == 2) {
    out.require(!runs[0].empty(), "no CSV written");
    out.require(runs[0] == runs[1], "CSV outputs differ between runs");
    std::size_t bytes = 0;
    for (const auto& [name, text] : runs[0]) bytes += text.size();
    out.note(std::to_string(runs[0].size()) + " CSV files, " + std::to_string(bytes) + " bytes compared");
  }
  fs::remove_all(root);
  return out;
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "encoding correctness", 5, encoding},
      {2, "spectral identities", 10, identities},
      {3, "derivative formulas vs finite differences", 10, derivative_formulas},
      {4, "exact min-gap expression", 30, gap_expression},
      {5, "definition behaviour", 30, definitions},
      {6, "gap bound from the first definition", 60, gap_bound},
      {7, "eigenvector rotation at the anti-crossing", 60, rotation},
      {8, "multi-level dominance order", 10, dominance},
      {9, "scan determinism", 1e9, determinism},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > c.budget_seconds) out.require(false, "over the " + fmt(c.budget_seconds) + " s budget");
    failures += !out.pass;
    std::printf("%s criterion %d: %s (%.2f s) %s\n", out.pass ? "PASS" : "FAIL", c.id, c.name, elapsed,
                out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
