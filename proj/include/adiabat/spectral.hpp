// Copyright (C) 2026 The adiabat authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "adiabat/hamiltonian.hpp"
#include "adiabat/linalg.hpp"

namespace adiabat {

/// Two eigenvalues are degenerate when |a - b| <= kDegeneracyTolerance * (1 + scale),
/// scale being the largest magnitude in the spectrum under consideration.
inline constexpr double kDegeneracyTolerance = 1e-9;
/// Ratio identities are skipped when the divided component is this small.
inline constexpr double kComponentGuard = 1e-12;

bool degenerate(double a, double b, double scale) noexcept;

/// Ascending eigenvalues with orthonormal eigenvectors stored as columns.
struct Eigensystem {
  Vector values;
  Matrix vectors;

  std::size_t size() const noexcept { return static_cast<std::size_t>(values.size()); }
  double value(std::size_t k) const { return values(static_cast<Eigen::Index>(k)); }
  auto vector(std::size_t k) const { return vectors.col(static_cast<Eigen::Index>(k)); }
  double scale() const noexcept { return values.size() ? values.cwiseAbs().maxCoeff() : 0.0; }
};

/// Symmetric eigendecomposition. Each eigenvector is returned in a canonical
/// sign: positive component sum, or a positive largest component when the
/// sum vanishes.
Eigensystem eigendecompose(const Matrix& h);

/// Flips the sign of every column of `current` whose overlap with the same
/// column of `reference` is negative.
void align_signs(const Matrix& reference, Eigensystem& current);

/// Eigendecompositions along an s-grid with a continuous gauge: level k at
/// step t is matched to the previous step by maximal absolute overlap and its
/// sign chosen so the matched overlap is nonnegative.
class SpectralSweep {
 public:
  SpectralSweep(std::shared_ptr<const HamiltonianPair> pair, std::vector<double> grid,
                std::vector<Eigensystem> points, std::vector<std::vector<std::size_t>> matching);

  const HamiltonianPair& pair() const noexcept { return *pair_; }
  const std::shared_ptr<const HamiltonianPair>& shared_pair() const noexcept { return pair_; }
  const std::vector<double>& grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return grid_.size(); }
  std::size_t dimension() const noexcept { return pair_->basis.size(); }

  const Eigensystem& at(std::size_t t) const { return points_.at(t); }
  double energy(std::size_t t, std::size_t k) const { return at(t).value(k); }

  /// For t > 0, matched_from(t)[k] is the level at step t - 1 that level k
  /// continues. Step 0 maps every level to itself.
  std::span<const std::size_t> matched_from(std::size_t t) const { return matching_.at(t); }

 private:
  std::shared_ptr<const HamiltonianPair> pair_;
  std::vector<double> grid_;
  std::vector<Eigensystem> points_;
  std::vector<std::vector<std::size_t>> matching_;
};

SpectralSweep sweep(std::shared_ptr<const HamiltonianPair> pair, std::vector<double> grid);

/// n points evenly spaced on [lo, hi], endpoints included.
std::vector<double> uniform_grid(double lo, double hi, std::size_t n);

double gap_at(const HamiltonianPair& pair, double s);
/// dDelta/ds from the eigenvalue derivative formula; E0 and E1 must be
/// separated from their neighbours.
double gap_derivative(const HamiltonianPair& pair, double s);

enum class GapLocation { start, interior, end };

struct MinGap {
  double s_star = 0.0;
  double delta_min = 0.0;
  GapLocation location = GapLocation::interior;
  /// E0(1) and E1(1) coincide within the degeneracy tolerance.
  bool degenerate_final_ground = false;
  /// Width of the final golden-section bracket.
  double s_uncertainty = 0.0;
  /// |dDelta/ds| at the returned point (interior minima only).
  double stationarity = 0.0;
};

/// Global minimum of Delta(s) = E1(s) - E0(s): a coarse scan over [0, 1]
/// brackets the smallest sample, golden-section search narrows the bracket to
/// tol, and a bisection on dDelta/ds polishes the stationary point. Throws
/// Error(degenerate) when the gap vanishes at every coarse sample.
MinGap min_gap(const HamiltonianPair& pair, int coarse_points = 201, double tol = 1e-10);

/// H'|v> = (H1 - H0)|v> without forming H'.
Vector apply_derivative(const HamiltonianPair& pair, const Eigen::Ref<const Vector>& v);

/// dE_k/ds = <E_k|H'|E_k>.
double eigenvalue_derivative(const HamiltonianPair& pair, double s, std::size_t k);
double eigenvalue_derivative(const HamiltonianPair& pair, const Eigensystem& eig, std::size_t k);

/// d|E_k>/ds = sum_{j != k} <E_j|H'|E_k> / (E_k - E_j) |E_j>, in the gauge of
/// eigendecompose() at s.
Vector eigenvector_derivative(const HamiltonianPair& pair, double s, std::size_t k);
Vector eigenvector_derivative(const HamiltonianPair& pair, const Eigensystem& eig, std::size_t k);

/// d2E_k/ds2 = 2 sum_{j != k} <E_j|H'|E_k>^2 / (E_k - E_j).
double eigenvalue_second_derivative(const HamiltonianPair& pair, double s, std::size_t k);
double eigenvalue_second_derivative(const HamiltonianPair& pair, const Eigensystem& eig, std::size_t k);

/// Index of the unique minimum of the target; throws Error(degenerate) when
/// the minimum is shared within the degeneracy tolerance.
std::size_t ground_state_index(const HamiltonianPair& pair);

/// E_k(s) minus its expression through basis state i and its neighbours:
/// E_k - [s E_i(1) - (1 - s) <x_i|(-H0)|E_k> / <x_i|E_k>].
/// nullopt when |<x_i|E_k>| <= kComponentGuard.
std::optional<double> energy_identity_residual(const HamiltonianPair& pair, const Eigensystem& eig, double s,
                                               std::size_t i, std::size_t k);
std::optional<double> energy_identity_residual(const HamiltonianPair& pair, double s, std::size_t i,
                                               std::size_t k);

/// Delta(s) - (1 - s)[<neigh(x_i)|E_0>/<x_i|E_0> - <neigh(x_i)|E_1>/<x_i|E_1>].
std::optional<double> gap_identity_residual(const HamiltonianPair& pair, const Eigensystem& eig, double s,
                                            std::size_t i);
std::optional<double> gap_identity_residual(const HamiltonianPair& pair, double s, std::size_t i);

struct FailureCondition {
  /// <neigh(GS)|E_0>/<GS|E_0> - <neigh(GS)|E_1>/<GS|E_1>.
  double ratio_difference = 0.0;
  /// Delta(s) / (1 - s); equals ratio_difference for s < 1.
  double gap_ratio = 0.0;
};

/// Evaluates the ratio difference at the target's ground state and checks it
/// against Delta(s)/(1-s) to 1e-8 (1 + Delta) plus the rounding allowed by
/// the two GS components, throwing Error(numerical) if the two disagree.
/// nullopt when a component is below the guard or s == 1.
std::optional<FailureCondition> failure_condition(const HamiltonianPair& pair, double s);

struct GapBounds {
  double delta_squared = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  bool lower_holds = false;
  bool upper_holds = false;
};

/// The two triangle-inequality bounds on Delta(s*)^2 through basis state i.
/// Violations are reported through the flags, never thrown.
std::optional<GapBounds> min_gap_bounds(const HamiltonianPair& pair, double s_star, std::size_t i);

}  // namespace adiabat
