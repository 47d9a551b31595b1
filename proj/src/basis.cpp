// Copyright (C) 2026 The adiabat authors
// SPDX-License-Identifier: Apache-2.0

#include "adiabat/basis.hpp"

#include <bit>

#include "adiabat/error.hpp"

namespace adiabat {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return result;
}

std::string to_string(Bitstring x, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int node = 1; node <= n; ++node)
    if (node_selected(x, n, node)) s[static_cast<std::size_t>(node - 1)] = '1';
  return s;
}

Bitstring bitstring_from_string(std::string_view text) {
  if (text.empty() || text.size() > static_cast<std::size_t>(kMaxQubits))
    throw Error(ErrorCode::invalid_argument, "bitstring length must be in [1, 20]");
  Bitstring x = 0;
  for (char c : text) {
    if (c != '0' && c != '1') throw Error(ErrorCode::invalid_argument, "bitstring may only contain '0' and '1'");
    x = (x << 1) | static_cast<Bitstring>(c == '1');
  }
  return x;
}

BasisSet::BasisSet(int n, int k, BasisMode mode) : n_(n), k_(k), mode_(mode) {}

BasisSet BasisSet::full(int n) {
  if (n < 1 || n > kMaxQubits) throw Error(ErrorCode::invalid_argument, "qubit count must be in [1, 20]");
  if (n > kMaxFullQubits)
    throw Error(ErrorCode::capacity, "full basis is limited to " + std::to_string(kMaxFullQubits) + " qubits");
  BasisSet basis(n, -1, BasisMode::full);
  const std::size_t dim = std::size_t{1} << n;
  basis.states_.resize(dim);
  for (std::size_t i = 0; i < dim; ++i) basis.states_[i] = static_cast<Bitstring>(i);
  return basis;
}

BasisSet BasisSet::weight(int n, int k) {
  if (n < 1 || n > kMaxQubits) throw Error(ErrorCode::invalid_argument, "qubit count must be in [1, 20]");
  if (k <= 0 || k >= n) throw Error(ErrorCode::invalid_argument, "Hamming weight must satisfy 0 < k < n");
  BasisSet basis(n, k, BasisMode::weight_k);
  const auto dim = static_cast<std::size_t>(binomial(n, k));
  basis.states_.resize(dim);
  for (std::size_t i = 0; i < dim; ++i) basis.states_[i] = basis.unrank(i);
  return basis;
}

// In weight-k mode the lexicographic order on node tuples is the reverse of
// the numeric order, and the numeric order is the colexicographic order on
// bit positions, which the combinatorial number system ranks directly.
std::size_t BasisSet::rank(Bitstring x) const {
  if (n_ < 32 && (x >> n_) != 0) throw Error(ErrorCode::invalid_argument, "bitstring wider than the register");
  if (mode_ == BasisMode::full) return x;
  if (std::popcount(x) != k_) throw Error(ErrorCode::invalid_argument, "bitstring has the wrong Hamming weight");
  std::uint64_t colex = 0;
  int j = 0;
  for (int pos = 0; pos < n_; ++pos) {
    if ((x >> pos) & 1U) {
      ++j;
      colex += binomial(pos, j);
    }
  }
  return static_cast<std::size_t>(binomial(n_, k_) - 1 - colex);
}

Bitstring BasisSet::unrank(std::size_t index) const {
  if (mode_ == BasisMode::full) {
    if (index >= (std::size_t{1} << n_)) throw Error(ErrorCode::invalid_argument, "basis index out of range");
    return static_cast<Bitstring>(index);
  }
  const std::uint64_t total = binomial(n_, k_);
  if (index >= total) throw Error(ErrorCode::invalid_argument, "basis index out of range");
  std::uint64_t colex = total - 1 - index;
  Bitstring x = 0;
  int pos = n_ - 1;
  for (int j = k_; j >= 1; --j) {
    while (binomial(pos, j) > colex) --pos;
    x |= Bitstring{1} << pos;
    colex -= binomial(pos, j);
    --pos;
  }
  return x;
}

std::optional<std::size_t> BasisSet::find(Bitstring x) const noexcept {
  if (n_ < 32 && (x >> n_) != 0) return std::nullopt;
  if (mode_ == BasisMode::weight_k && std::popcount(x) != k_) return std::nullopt;
  return rank(x);
}

namespace {

void require_operator_on(const Matrix& h0, const BasisSet& basis) {
  const auto dim = static_cast<Eigen::Index>(basis.size());
  if (h0.rows() != dim || h0.cols() != dim)
    throw Error(ErrorCode::invalid_argument, "mixer dimension does not match the basis");
}

}  // namespace

std::vector<std::vector<std::size_t>> mixer_graph(const Matrix& h0, const BasisSet& basis) {
  require_operator_on(h0, basis);
  const auto dim = h0.rows();
  std::vector<std::vector<std::size_t>> adjacency(static_cast<std::size_t>(dim));
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      if (i == j) continue;
      if (h0(i, j) != h0(j, i)) throw Error(ErrorCode::invalid_argument, "mixer is not symmetric");
      if (h0(i, j) > 0.0)
        throw Error(ErrorCode::invalid_argument,
                    "mixer has a positive off-diagonal entry; -H0 is not an adjacency matrix");
      if (h0(i, j) < 0.0) adjacency[static_cast<std::size_t>(i)].push_back(static_cast<std::size_t>(j));
    }
  }
  return adjacency;
}

Vector neighbor_state(std::size_t index, const Matrix& h0, const BasisSet& basis) {
  require_operator_on(h0, basis);
  if (index >= basis.size()) throw Error(ErrorCode::invalid_argument, "basis index out of range");
  return -h0.row(static_cast<Eigen::Index>(index)).transpose();
}

}  // namespace adiabat
