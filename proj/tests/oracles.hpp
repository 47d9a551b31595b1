// Copyright (C) 2026 The adiabat authors
// SPDX-License-Identifier: Apache-2.0

// Independent reference computations used only by the tests.

#pragma once

#include <vector>

#include "adiabat/linalg.hpp"

namespace oracle {

using adiabat::Matrix;
using adiabat::Vector;

/// Cyclic Jacobi rotations until the off-diagonal norm is below 1e-15 of the
/// Frobenius norm. Ascending eigenvalues. `reverse_sweep` visits pairs in the
/// opposite order so two runs are independent routes.
Vector jacobi_eigenvalues(Matrix a, bool reverse_sweep = false);

/// -1/2 sum_i (X_i X_{i+1} + Y_i Y_{i+1}) built from 2x2 Pauli matrices and
/// Kronecker products on the full space, then restricted to the given
/// bitstrings (rows and columns in that order). Qubit 1 is the most
/// significant bit.
Matrix pauli_swap_mixer(int n, const std::vector<unsigned>& states, bool wrap);

/// H(s) = (1 - s)[[0,-1],[-1,0]] + s diag(0, eps).
struct TwoLevel {
  double eps;
  Matrix mixer() const;
  Vector target() const;
  double lower(double s) const;
  double upper(double s) const;
  double gap(double s) const { return upper(s) - lower(s); }
  /// Normalised eigenvector of the lower (k = 0) or upper level with a
  /// positive first component.
  Vector vector(double s, int k) const;
};

}  // namespace oracle
