// Copyright (C) 2026 The adiabat authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adiabat/hamiltonian.hpp"
#include "adiabat/rational.hpp"

namespace adiabat {

struct CliqueSolution {
  std::vector<std::vector<int>> subsets;  // 1-based node tuples, ascending
  double energy = 0.0;
};

struct CliqueInstance {
  ProblemGraph graph;
  std::string description;
  std::optional<CliqueSolution> expected;
};

/// Triangle 1-2-3, path 1-6-5-2 and pendant 6-4, weights [1,1,1,1.5,1.5,1.5],
/// k = 3. The expectation is filled from the oracle for the given alpha.
CliqueInstance toy_example_1(const Rational& alpha);
CliqueInstance toy_example_1(double alpha);

/// Toy example 1 with nodes 1<->3 and 5<->6 relabelled.
CliqueInstance toy_example_2(const Rational& alpha);
CliqueInstance toy_example_2(double alpha);

struct RandomInstanceParams {
  int n = 6;
  int k = 3;
  double edge_probability = 0.5;
  double weight_low = 1.0;
  double weight_high = 2.0;
  std::uint64_t seed = 0;
  double alpha = 0.5;
};

/// Erdos-Renyi G(n, p) with uniform weights. The stream is std::mt19937_64
/// seeded with `seed`; each draw u = (x >> 11) * 2^-53 lies in [0, 1). Pairs
/// (i, j), i < j, are visited in lexicographic order and kept when u < p;
/// then n weights low + (high - low) u follow.
CliqueInstance random_instance(const RandomInstanceParams& params);

struct OracleEntry {
  std::vector<int> nodes;
  int missing_edges = 0;
  double energy = 0.0;
  std::optional<Rational> exact;
};

struct OracleResult {
  std::vector<std::vector<int>> best_subsets;
  double best_energy = 0.0;
  std::optional<Rational> best_exact;
  /// Every k-subset, sorted by energy (exact when available), ties in
  /// lexicographic node order.
  std::vector<OracleEntry> table;
  bool exact = false;
};

inline constexpr std::uint64_t kMaxOracleSubsets = 1'000'000;

/// Exhaustive evaluation over all k-subsets. Energies are exact rationals
/// when alpha and every weight are exactly representable and no intermediate
/// overflows; otherwise ties are decided on the double values.
OracleResult brute_force(const ProblemGraph& graph);

}  // namespace adiabat
