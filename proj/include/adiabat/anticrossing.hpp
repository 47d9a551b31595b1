// Copyright (C) 2026 The adiabat authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "adiabat/hamiltonian.hpp"
#include "adiabat/linalg.hpp"
#include "adiabat/spectral.hpp"

namespace adiabat {

struct FinalLevel {
  double energy = 0.0;
  std::vector<std::size_t> members;  // basis indices, ascending
};

/// Basis states grouped by final energy E_k(1) = target[i].
struct FinalLevelPartition {
  std::vector<FinalLevel> levels;  // strictly increasing energies
  double tolerance = 0.0;
  std::vector<std::size_t> level_of;  // basis index -> level

  std::size_t size() const noexcept { return levels.size(); }
  bool ground_unique() const noexcept { return !levels.empty() && levels[0].members.size() == 1; }
};

/// Default grouping tolerance: kDegeneracyTolerance * (1 + max |target|).
double default_level_tolerance(const HamiltonianPair& pair);

/// Sorted energies are cut into clusters; a cluster starts at its lowest
/// energy and absorbs every following energy within tol of that start, so
/// the spread inside a level never exceeds tol.
FinalLevelPartition partition_final_levels(const HamiltonianPair& pair, double tol);
FinalLevelPartition partition_final_levels(const HamiltonianPair& pair);

/// a(t, k) = sum over level k of |<x_i|E_0(s_t)>|^2, b likewise with E_1,
/// g(t, k) = |<GS|E_k(s_t)>|^2. g has no columns when the ground level is
/// degenerate.
struct OverlapSeries {
  std::vector<double> grid;
  Matrix a;
  Matrix b;
  Matrix g;
  std::optional<std::size_t> ground_index;

  std::size_t size() const noexcept { return grid.size(); }
  bool has_g() const noexcept { return g.cols() > 0; }
};

/// a and b only; never throws on a degenerate ground level.
OverlapSeries level_overlaps(const SpectralSweep& sweep, const FinalLevelPartition& partition);

/// a, b and g. Throws Error(degenerate) when the ground level has more than
/// one member.
OverlapSeries compute_overlaps(const SpectralSweep& sweep, const FinalLevelPartition& partition);

/// Grid s* + j h for j = -half_points..half_points, h = min(s*, 1 - s*) / half_points.
std::vector<double> local_grid(double s_star, std::size_t half_points);

struct WilkinsonFit {
  double a = 0.0;
  double b = 0.0;
  double e_center = 0.0;
  double delta_fit = 0.0;
  double rms = 0.0;
  bool valid = false;
};

/// Least-squares fit of E_pm(s) = Ec + B x pm (1/2) sqrt(D^2 + A^2 x^2),
/// x = s - s_star, to two branches. The fit is valid when
/// |D - delta_min| <= 0.05 delta_min and rms <= 0.05 delta_min.
WilkinsonFit wilkinson_fit(std::span<const double> s, std::span<const double> lower, std::span<const double> upper,
                           double s_star, double delta_min);

/// Fits on a dedicated sweep of `points` samples centred on s*, half-width
/// twice the hyperbola width delta_min / A estimated from the gap's
/// curvature. Requires at least 7 points.
WilkinsonFit wilkinson_fit(const HamiltonianPair& pair, double s_star, double delta_min, std::size_t points = 41);

struct DefinitionMeasurement {
  bool satisfied = false;
  double gamma = 1.0;
  double epsilon = 1.0;
  double delta_window = 0.0;
  /// The dominant pair swaps on at least one window (endpoint violation < 1/2).
  bool swap_observed = false;
};

/// Smallest (gamma, epsilon) for which the first definition holds on a
/// symmetric window of `series` around grid index `center`. The window is
/// chosen to minimise gamma; satisfied iff gamma < 1/2 and epsilon < 1/2.
DefinitionMeasurement measure_choi(const OverlapSeries& series, std::size_t center);
/// Same measurement using only g_0 and g_1.
DefinitionMeasurement measure_g_def(const OverlapSeries& series, std::size_t center);

/// Index of the grid point nearest to s.
std::size_t nearest_index(std::span<const double> grid, double s);

/// |Delta(s*) - sum_k E_k(1) (b_k(s*) - a_k(s*))|. Throws
/// Error(invalid_argument) when |dDelta/ds(s*)| exceeds stationarity_tol.
double check_prop1(const HamiltonianPair& pair, const FinalLevelPartition& partition, double s_star,
                   double stationarity_tol);

/// K epsilon - delta_min, K = 2(E_0(1) + E_1(1) + 2M) on final energies shifted
/// so E_0(1) = 0, M the largest shifted energy. Throws Error(not_applicable)
/// when the first definition is not satisfied.
double check_corollary1(const DefinitionMeasurement& choi, const FinalLevelPartition& partition, double delta_min);

/// Eigensystem at s with E_0 in canonical sign and E_1 signed so that
/// <E_0|H'|E_1> >= 0.
Eigensystem anticrossing_gauge(const HamiltonianPair& pair, double s);

struct Theorem2Check {
  double beta = 0.0;
  double h = 0.0;
  double residual0 = 0.0;  // |dE0/ds + beta E1| / |beta|
  double residual1 = 0.0;  // |dE1/ds - beta E0| / |beta|
  double offdiag_max = 0.0;
};

/// Central differences of the two lowest eigenvectors at s*. Throws
/// Error(invalid_argument) when Delta(s* pm h) / Delta(s*) > 2 or h > 1e-4.
Theorem2Check check_theorem2(const HamiltonianPair& pair, double s_star, double h);

struct Corollary2Check {
  double beta = 0.0;
  double h = 0.0;
  double g0 = 0.0;
  double g1 = 0.0;
  double g0_prime = 0.0;
  double g1_prime = 0.0;
  double sum_residual = 0.0;   // |g0' + g1'| / |beta|
  double diff_residual = 0.0;  // |g0' - g1' - 2 g01 beta| / |beta|, g01 = (g0 + g1) / 2
  /// |g0' - g1' + 4 beta <GS|E0><GS|E1>| / |beta|.
  double exact_residual = 0.0;
};

/// Requires a unique target minimum; errors as check_theorem2.
Corollary2Check check_corollary2(const HamiltonianPair& pair, double s_star, double h);

/// Largest step that keeps Delta(s* pm h) close to delta_min: min(1e-4, 0.02 delta_min / A).
double derivative_step(const HamiltonianPair& pair, double s_star, double delta_min);

struct AnalysisOptions {
  int coarse_points = 201;
  double refine_tol = 1e-10;
  std::size_t window_half_points = 2000;
  std::size_t fit_points = 41;
};

struct AntiCrossingReport {
  MinGap gap;
  double beta = 0.0;
  std::vector<FinalLevel> levels;
  Vector a_star;  // per final level
  Vector b_star;
  std::optional<Vector> g_star;  // per instantaneous level
  std::optional<WilkinsonFit> wilkinson;
  std::optional<DefinitionMeasurement> choi;
  std::optional<DefinitionMeasurement> g_def;
  std::optional<double> prop1;
  std::optional<double> corollary1_margin;
  std::optional<Theorem2Check> theorem2;
  std::optional<Corollary2Check> corollary2;
  /// Reasons for every quantity left empty.
  std::vector<std::pair<std::string, std::string>> skipped;
  std::vector<std::string> warnings;
};

AntiCrossingReport analyze(const HamiltonianPair& pair, const AnalysisOptions& options = {});

}  // namespace adiabat
