// Copyright (C) 2026 The adiabat authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adiabat/basis.hpp"
#include "adiabat/linalg.hpp"
#include "adiabat/rational.hpp"

namespace adiabat {

/// Dense matrices beyond this dimension are refused.
inline constexpr std::size_t kMaxDenseDimension = 16384;

struct Edge {
  int u = 0;  // 1-based, u < v
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Weighted graph with clique size k and weight importance alpha. When alpha
/// came from an exact source (a fixture or a "p/q" string) the exact value is
/// kept next to the double so the classical oracle can compare energies
/// without rounding.
struct ProblemGraph {
  int n = 0;
  std::vector<Edge> edges;
  std::vector<double> weights;
  int k = 0;
  double alpha = 0.0;
  std::optional<Rational> alpha_exact;

  /// Throws Error(invalid_argument) on self-loops, endpoints outside [1, n],
  /// duplicate edges, a weight count different from n, negative weights,
  /// negative alpha or k outside (0, n).
  void validate() const;
  bool has_edge(int a, int b) const noexcept;
  void set_alpha(double value);
  void set_alpha(const Rational& value);
};

enum class MixerKind { swap_chain, swap_cycle, transverse_field };

std::string_view to_string(MixerKind kind) noexcept;
std::optional<MixerKind> parse_mixer(std::string_view name) noexcept;

/// H0 = -sum_i sigma_x^(i) on the full n-qubit basis.
Matrix build_transverse_field(int n);

/// H0 = -sum_i S^{i,i+1} on the Hamming-weight-k subspace, where S exchanges
/// |01> and |10> and annihilates |00> and |11>. The sum runs over i = 1..n-1;
/// with wrap it also includes the (n, 1) pair.
Matrix build_swap_mixer(int n, int k, bool wrap);

/// Clique energy of a single bitstring: the number of non-adjacent selected
/// pairs minus alpha times the selected weight.
double clique_energy(const ProblemGraph& graph, Bitstring x);

/// Diagonal of H1 for the clique problem, evaluated on every basis state.
Vector build_clique_target(const ProblemGraph& graph, const BasisSet& basis);

/// Generic diagonal target: a verbatim copy of the energies.
Vector build_diagonal_target(std::span<const double> energies, const BasisSet& basis);

/// Mixer and diagonal target on a shared basis. E_i(1) of basis state i is
/// target[i].
struct HamiltonianPair {
  BasisSet basis;
  Matrix mixer;
  Vector target;

  /// H(s) = (1 - s) H0 + s diag(H1).
  Matrix at(double s) const;
  /// dH/ds = H1 - H0 for the linear schedule.
  Matrix derivative() const;
};

/// Validates dimensions, symmetry and the sign of the mixer's off-diagonal.
HamiltonianPair make_pair(BasisSet basis, Matrix mixer, Vector target);

/// Builds the basis, mixer and clique target for a problem graph. The swap
/// mixers live on the weight-k subspace; the transverse field uses the full
/// basis and evaluates the clique energy on every bitstring.
HamiltonianPair make_clique_pair(const ProblemGraph& graph, MixerKind mixer);

Matrix interpolate(const HamiltonianPair& pair, double s);

}  // namespace adiabat
