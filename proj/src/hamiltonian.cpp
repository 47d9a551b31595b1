// Copyright (C) 2026 The adiabat authors
// SPDX-License-Identifier: Apache-2.0

#include "adiabat/hamiltonian.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "adiabat/error.hpp"

namespace adiabat {

void ProblemGraph::validate() const {
  if (n < 2 || n > kMaxQubits) throw Error(ErrorCode::invalid_argument, "node count must be in [2, 20]");
  if (k <= 0 || k >= n) throw Error(ErrorCode::invalid_argument, "clique size must satisfy 0 < k < n");
  if (weights.size() != static_cast<std::size_t>(n))
    throw Error(ErrorCode::invalid_argument, "expected one weight per node");
  for (double w : weights)
    if (!std::isfinite(w) || w < 0.0) throw Error(ErrorCode::invalid_argument, "weights must be finite and nonnegative");
  if (!std::isfinite(alpha) || alpha < 0.0) throw Error(ErrorCode::invalid_argument, "alpha must be finite and nonnegative");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.u < 1 || e.u > n || e.v < 1 || e.v > n)
      throw Error(ErrorCode::invalid_argument, "edge endpoint outside [1, n]");
    if (e.u == e.v) throw Error(ErrorCode::invalid_argument, "self-loops are not allowed");
    for (std::size_t j = 0; j < i; ++j) {
      const Edge& f = edges[j];
      if ((f.u == e.u && f.v == e.v) || (f.u == e.v && f.v == e.u))
        throw Error(ErrorCode::invalid_argument, "duplicate edge");
    }
  }
}

bool ProblemGraph::has_edge(int a, int b) const noexcept {
  return std::any_of(edges.begin(), edges.end(),
                     [&](const Edge& e) { return (e.u == a && e.v == b) || (e.u == b && e.v == a); });
}

void ProblemGraph::set_alpha(double value) {
  alpha = value;
  alpha_exact.reset();
}

void ProblemGraph::set_alpha(const Rational& value) {
  alpha = value.to_double();
  alpha_exact = value;
}

std::string_view to_string(MixerKind kind) noexcept {
  switch (kind) {
    case MixerKind::swap_chain:
      return "swap_chain";
    case MixerKind::swap_cycle:
      return "swap_cycle";
    case MixerKind::transverse_field:
      return "transverse_field";
  }
  return "unknown";
}

std::optional<MixerKind> parse_mixer(std::string_view name) noexcept {
  if (name == "swap_chain") return MixerKind::swap_chain;
  if (name == "swap_cycle") return MixerKind::swap_cycle;
  if (name == "transverse_field") return MixerKind::transverse_field;
  return std::nullopt;
}

namespace {

void require_dense_capacity(std::size_t dim) {
  if (dim > kMaxDenseDimension)
    throw Error(ErrorCode::capacity, "dense dimension " + std::to_string(dim) + " exceeds the limit of " +
                                         std::to_string(kMaxDenseDimension));
}

// adjacency[node] has bit (n - m) set for every neighbour m of node.
std::vector<Bitstring> adjacency_masks(const ProblemGraph& graph) {
  std::vector<Bitstring> masks(static_cast<std::size_t>(graph.n) + 1, 0);
  for (const Edge& e : graph.edges) {
    masks[static_cast<std::size_t>(e.u)] |= Bitstring{1} << (graph.n - e.v);
    masks[static_cast<std::size_t>(e.v)] |= Bitstring{1} << (graph.n - e.u);
  }
  return masks;
}

double energy_with_masks(const ProblemGraph& graph, const std::vector<Bitstring>& masks, Bitstring x) {
  int missing = 0;
  double weight = 0.0;
  for (int node = 1; node <= graph.n; ++node) {
    if (!node_selected(x, graph.n, node)) continue;
    weight += graph.weights[static_cast<std::size_t>(node - 1)];
    // Selected nodes after this one that are not neighbours.
    const Bitstring later = (Bitstring{1} << (graph.n - node)) - 1;
    missing += std::popcount(x & later & ~masks[static_cast<std::size_t>(node)]);
  }
  return static_cast<double>(missing) - graph.alpha * weight;
}

}  // namespace

Matrix build_transverse_field(int n) {
  const BasisSet basis = BasisSet::full(n);
  const std::size_t dim = basis.size();
  require_dense_capacity(dim);
  Matrix h0 = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t a = 0; a < dim; ++a)
    for (int bit = 0; bit < n; ++bit) h0(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(a ^ (std::size_t{1} << bit))) = -1.0;
  return h0;
}

Matrix build_swap_mixer(int n, int k, bool wrap) {
  const BasisSet basis = BasisSet::weight(n, k);
  const std::size_t dim = basis.size();
  require_dense_capacity(dim);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i < n; ++i) pairs.emplace_back(i, i + 1);
  // For n = 2 the wrap-around pair is the same pair again.
  if (wrap && n > 2) pairs.emplace_back(n, 1);

  Matrix h0 = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t a = 0; a < dim; ++a) {
    const Bitstring x = basis.state(a);
    for (auto [i, j] : pairs) {
      if (node_selected(x, n, i) == node_selected(x, n, j)) continue;
      const Bitstring swapped = x ^ (Bitstring{1} << (n - i)) ^ (Bitstring{1} << (n - j));
      h0(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(basis.rank(swapped))) -= 1.0;
    }
  }
  return h0;
}

double clique_energy(const ProblemGraph& graph, Bitstring x) {
  return energy_with_masks(graph, adjacency_masks(graph), x);
}

Vector build_clique_target(const ProblemGraph& graph, const BasisSet& basis) {
  graph.validate();
  if (basis.qubits() != graph.n) throw Error(ErrorCode::invalid_argument, "basis and graph disagree on n");
  const auto masks = adjacency_masks(graph);
  Vector target(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i)
    target(static_cast<Eigen::Index>(i)) = energy_with_masks(graph, masks, basis.state(i));
  return target;
}

Vector build_diagonal_target(std::span<const double> energies, const BasisSet& basis) {
  if (energies.size() != basis.size())
    throw Error(ErrorCode::invalid_argument, "expected " + std::to_string(basis.size()) + " energies, got " +
                                                 std::to_string(energies.size()));
  Vector target(static_cast<Eigen::Index>(energies.size()));
  for (std::size_t i = 0; i < energies.size(); ++i) {
    if (!std::isfinite(energies[i])) throw Error(ErrorCode::invalid_argument, "energies must be finite");
    target(static_cast<Eigen::Index>(i)) = energies[i];
  }
  return target;
}

Matrix HamiltonianPair::at(double s) const { return interpolate(*this, s); }

Matrix HamiltonianPair::derivative() const {
  Matrix d = -mixer;
  d.diagonal() += target;
  return d;
}

HamiltonianPair make_pair(BasisSet basis, Matrix mixer, Vector target) {
  const auto dim = static_cast<Eigen::Index>(basis.size());
  require_dense_capacity(basis.size());
  if (mixer.rows() != dim || mixer.cols() != dim)
    throw Error(ErrorCode::invalid_argument, "mixer dimension does not match the basis");
  if (target.size() != dim) throw Error(ErrorCode::invalid_argument, "target dimension does not match the basis");
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = i + 1; j < dim; ++j) {
      if (mixer(i, j) != mixer(j, i)) throw Error(ErrorCode::invalid_argument, "mixer is not symmetric");
      if (mixer(i, j) > 0.0) throw Error(ErrorCode::invalid_argument, "mixer off-diagonal entries must be <= 0");
    }
  }
  if (!target.allFinite() || !mixer.allFinite()) throw Error(ErrorCode::invalid_argument, "non-finite entries");
  return HamiltonianPair{std::move(basis), std::move(mixer), std::move(target)};
}

HamiltonianPair make_clique_pair(const ProblemGraph& graph, MixerKind mixer) {
  graph.validate();
  switch (mixer) {
    case MixerKind::swap_chain:
    case MixerKind::swap_cycle: {
      BasisSet basis = BasisSet::weight(graph.n, graph.k);
      Vector target = build_clique_target(graph, basis);
      return make_pair(std::move(basis), build_swap_mixer(graph.n, graph.k, mixer == MixerKind::swap_cycle),
                       std::move(target));
    }
    case MixerKind::transverse_field: {
      BasisSet basis = BasisSet::full(graph.n);
      Vector target = build_clique_target(graph, basis);
      return make_pair(std::move(basis), build_transverse_field(graph.n), std::move(target));
    }
  }
  throw Error(ErrorCode::invalid_argument, "unknown mixer");
}

Matrix interpolate(const HamiltonianPair& pair, double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw Error(ErrorCode::invalid_argument, "interpolation parameter must lie in [0, 1]");
  Matrix h = (1.0 - s) * pair.mixer;
  h.diagonal() += s * pair.target;
  return h;
}

}  // namespace adiabat
