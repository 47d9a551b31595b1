// Copyright (C) 2026 The adiabat authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "adiabat/linalg.hpp"

namespace adiabat {

/// Computational basis state. Node i (1-based) of an n-node register lives at
/// bit (n - i), so the printed string reads node 1 first and the integer value
/// of the bitstring equals its binary reading.
using Bitstring = std::uint32_t;

inline constexpr int kMaxQubits = 20;
inline constexpr int kMaxFullQubits = 14;

enum class BasisMode { full, weight_k };

std::uint64_t binomial(int n, int k);

std::string to_string(Bitstring x, int n);
Bitstring bitstring_from_string(std::string_view text);
inline bool node_selected(Bitstring x, int n, int node) { return ((x >> (n - node)) & 1U) != 0; }

/// Ordered list of basis states. Full mode is ordered by binary value
/// (000 first, 111 last). Weight-k mode is ordered lexicographically by the
/// tuple of selected nodes, so {1,2,...,k} comes first; rank and unrank go
/// through the combinatorial number system and never consult a lookup table.
class BasisSet {
 public:
  static BasisSet full(int n);
  static BasisSet weight(int n, int k);

  int qubits() const noexcept { return n_; }
  BasisMode mode() const noexcept { return mode_; }
  /// Hamming weight of every state in weight-k mode, -1 in full mode.
  int hamming_weight() const noexcept { return k_; }

  std::size_t size() const noexcept { return states_.size(); }
  Bitstring state(std::size_t index) const { return states_.at(index); }
  std::span<const Bitstring> states() const noexcept { return states_; }
  std::string label(std::size_t index) const { return to_string(state(index), n_); }

  std::size_t rank(Bitstring x) const;
  Bitstring unrank(std::size_t index) const;
  std::optional<std::size_t> find(Bitstring x) const noexcept;

  friend bool operator==(const BasisSet& a, const BasisSet& b) noexcept {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.mode_ == b.mode_;
  }

 private:
  BasisSet(int n, int k, BasisMode mode);

  int n_ = 0;
  int k_ = -1;
  BasisMode mode_ = BasisMode::full;
  std::vector<Bitstring> states_;
};

/// Adjacency lists of G(H0): i and j are adjacent iff <x_i|(-H0)|x_j> > 0.
/// Throws when H0 is not symmetric or has a positive off-diagonal entry.
std::vector<std::vector<std::size_t>> mixer_graph(const Matrix& h0, const BasisSet& basis);

/// The vector (-H0)|x_i> in basis coordinates.
Vector neighbor_state(std::size_t index, const Matrix& h0, const BasisSet& basis);

}  // namespace adiabat
