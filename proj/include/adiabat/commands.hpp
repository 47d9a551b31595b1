// Copyright (C) 2026 The adiabat authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "adiabat/io.hpp"

namespace adiabat {

/// Names accepted by RunConfig::checks.
inline const std::vector<std::string> kCheckNames = {"oracle", "spectral", "identities", "lemma1", "bounds",
                                                      "overlaps", "prop1", "corollary1", "theorem2", "corollary2",
                                                      "definitions"};

struct RunConfig {
  std::string source;               // "fixture:<name>" or the instance path
  std::vector<AlphaValue> alphas;   // empty: the instance's own alpha
  int grid_points = 1001;
  double refine_tol = 1e-10;
  int levels = 6;
  std::string out_dir = "out";
  std::vector<std::string> checks;  // empty: every check
  std::size_t window_half_points = 2000;

  /// Throws Error(invalid_argument) on grid_points < 51, refine_tol <= 0,
  /// levels < 1 or an unknown check name.
  void validate() const;
  bool check_enabled(const std::string& name) const;
};

/// Builtin instances: "toy1", "toy2" and
/// "random:n=..,k=..,p=..,seed=..[,low=..][,high=..][,alpha=..]".
InstanceDocument fixture_document(const std::string& name);

/// Writes energies.csv, gap.csv, overlaps_{a,b,g}.csv and report.json into
/// out_dir/alpha_<label>/ for every alpha. Returns a JSON summary.
std::string run_scan(const InstanceDocument& doc, const RunConfig& config);

struct VerifyOutcome {
  std::string summary_json;
  bool passed = false;
};

/// Runs the enabled checks for every alpha. passed is true iff every
/// asserted check passes; reported-only checks never fail the run.
VerifyOutcome run_verify(const InstanceDocument& doc, const RunConfig& config);

}  // namespace adiabat
