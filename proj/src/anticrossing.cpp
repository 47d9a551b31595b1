// Copyright (C) 2026 The adiabat authors
// SPDX-License-Identifier: Apache-2.0

#include "adiabat/anticrossing.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>

#include <unsupported/Eigen/LevenbergMarquardt>

#include "adiabat/error.hpp"

namespace adiabat {

double default_level_tolerance(const HamiltonianPair& pair) {
  const double scale = pair.target.size() ? pair.target.cwiseAbs().maxCoeff() : 0.0;
  return kDegeneracyTolerance * (1.0 + scale);
}

FinalLevelPartition partition_final_levels(const HamiltonianPair& pair, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::invalid_argument, "level tolerance must be positive");
  const auto dim = static_cast<std::size_t>(pair.target.size());
  std::vector<std::size_t> order(dim);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return pair.target(static_cast<Eigen::Index>(x)) < pair.target(static_cast<Eigen::Index>(y));
  });

  FinalLevelPartition partition;
  partition.tolerance = tol;
  partition.level_of.assign(dim, 0);
  double start = 0.0;
  for (std::size_t i : order) {
    const double e = pair.target(static_cast<Eigen::Index>(i));
    if (partition.levels.empty() || e - start > tol) {
      start = e;
      partition.levels.push_back({e, {}});
    }
    partition.levels.back().members.push_back(i);
    partition.level_of[i] = partition.levels.size() - 1;
  }
  for (auto& level : partition.levels) std::sort(level.members.begin(), level.members.end());
  return partition;
}

FinalLevelPartition partition_final_levels(const HamiltonianPair& pair) {
  return partition_final_levels(pair, default_level_tolerance(pair));
}

namespace {

void require_shared_basis(const SpectralSweep& sweep, const FinalLevelPartition& partition) {
  if (partition.level_of.size() != sweep.dimension())
    throw Error(ErrorCode::invalid_argument, "partition and sweep do not share a basis");
}

void accumulate_levels(const Eigensystem& eig, const FinalLevelPartition& partition, Eigen::Ref<Vector> a,
                       Eigen::Ref<Vector> b) {
  a.setZero();
  b.setZero();
  for (std::size_t i = 0; i < partition.level_of.size(); ++i) {
    const auto ii = static_cast<Eigen::Index>(i);
    const auto level = static_cast<Eigen::Index>(partition.level_of[i]);
    a(level) += eig.vectors(ii, 0) * eig.vectors(ii, 0);
    if (eig.size() > 1) b(level) += eig.vectors(ii, 1) * eig.vectors(ii, 1);
  }
}

}  // namespace

OverlapSeries level_overlaps(const SpectralSweep& sweep, const FinalLevelPartition& partition) {
  require_shared_basis(sweep, partition);
  OverlapSeries series;
  series.grid = sweep.grid();
  const auto rows = static_cast<Eigen::Index>(sweep.size());
  const auto levels = static_cast<Eigen::Index>(partition.size());
  series.a = Matrix::Zero(rows, levels);
  series.b = Matrix::Zero(rows, levels);
  Vector a(levels);
  Vector b(levels);
  for (std::size_t t = 0; t < sweep.size(); ++t) {
    accumulate_levels(sweep.at(t), partition, a, b);
    series.a.row(static_cast<Eigen::Index>(t)) = a.transpose();
    series.b.row(static_cast<Eigen::Index>(t)) = b.transpose();
  }
  if (partition.ground_unique()) series.ground_index = partition.levels[0].members[0];
  return series;
}

OverlapSeries compute_overlaps(const SpectralSweep& sweep, const FinalLevelPartition& partition) {
  if (!partition.ground_unique())
    throw Error(ErrorCode::degenerate, "g-series need a unique ground state; the final ground level has " +
                                           std::to_string(partition.levels.empty() ? 0 : partition.levels[0].members.size()) +
                                           " members");
  OverlapSeries series = level_overlaps(sweep, partition);
  const auto gs = static_cast<Eigen::Index>(*series.ground_index);
  const auto dim = static_cast<Eigen::Index>(sweep.dimension());
  series.g = Matrix(static_cast<Eigen::Index>(sweep.size()), dim);
  for (std::size_t t = 0; t < sweep.size(); ++t)
    series.g.row(static_cast<Eigen::Index>(t)) = sweep.at(t).vectors.row(gs).array().square();
  return series;
}

std::vector<double> local_grid(double s_star, std::size_t half_points) {
  if (half_points < 1) throw Error(ErrorCode::invalid_argument, "a local grid needs at least one point per side");
  const double h = std::min(s_star, 1.0 - s_star) / static_cast<double>(half_points);
  if (!(h > 0.0)) throw Error(ErrorCode::invalid_argument, "local grid centre must lie strictly inside (0, 1)");
  std::vector<double> grid;
  grid.reserve(2 * half_points + 1);
  const auto j_max = static_cast<long>(half_points);
  for (long j = -j_max; j <= j_max; ++j) grid.push_back(j == 0 ? s_star : s_star + static_cast<double>(j) * h);
  grid.front() = std::max(grid.front(), 0.0);
  grid.back() = std::min(grid.back(), 1.0);
  return grid;
}

std::size_t nearest_index(std::span<const double> grid, double s) {
  if (grid.empty()) throw Error(ErrorCode::invalid_argument, "empty grid");
  std::size_t best = 0;
  for (std::size_t t = 1; t < grid.size(); ++t)
    if (std::abs(grid[t] - s) < std::abs(grid[best] - s)) best = t;
  return best;
}

// ---------------------------------------------------------------------------
// Wilkinson fit

namespace {

// Residuals of the gap branch sqrt(D^2 + A^2 x^2) against the data.
struct GapFunctor : Eigen::DenseFunctor<double> {
  const std::vector<double>& x;
  const std::vector<double>& gap;

  GapFunctor(const std::vector<double>& x_, const std::vector<double>& gap_)
      : Eigen::DenseFunctor<double>(2, static_cast<int>(x_.size())), x(x_), gap(gap_) {}

  int operator()(const InputType& p, ValueType& f) const {
    for (std::size_t t = 0; t < x.size(); ++t)
      f(static_cast<Eigen::Index>(t)) = std::sqrt(p(0) * p(0) + p(1) * p(1) * x[t] * x[t]) - gap[t];
    return 0;
  }

  int df(const InputType& p, JacobianType& j) const {
    for (std::size_t t = 0; t < x.size(); ++t) {
      const double r = std::max(std::sqrt(p(0) * p(0) + p(1) * p(1) * x[t] * x[t]), 1e-300);
      j(static_cast<Eigen::Index>(t), 0) = p(0) / r;
      j(static_cast<Eigen::Index>(t), 1) = p(1) * x[t] * x[t] / r;
    }
    return 0;
  }
};

}  // namespace

WilkinsonFit wilkinson_fit(std::span<const double> s, std::span<const double> lower, std::span<const double> upper,
                           double s_star, double delta_min) {
  if (s.size() != lower.size() || s.size() != upper.size())
    throw Error(ErrorCode::invalid_argument, "fit series lengths differ");
  if (s.size() < 7) throw Error(ErrorCode::invalid_argument, "a Wilkinson fit needs at least 7 points");
  if (!(s.front() <= s_star && s_star <= s.back()))
    throw Error(ErrorCode::invalid_argument, "fit window must bracket s*");

  const std::size_t count = s.size();
  std::vector<double> x(count);
  std::vector<double> gap(count);
  Matrix design(static_cast<Eigen::Index>(count), 2);
  Vector mean(static_cast<Eigen::Index>(count));
  Vector gap_sq(static_cast<Eigen::Index>(count));
  for (std::size_t t = 0; t < count; ++t) {
    const auto r = static_cast<Eigen::Index>(t);
    x[t] = s[t] - s_star;
    gap[t] = upper[t] - lower[t];
    mean(r) = 0.5 * (lower[t] + upper[t]);
    gap_sq(r) = gap[t] * gap[t];
    design(r, 0) = 1.0;
    design(r, 1) = x[t];
  }

  WilkinsonFit fit;
  const Vector centre = design.colPivHouseholderQr().solve(mean);
  fit.e_center = centre(0);
  fit.b = centre(1);

  // Starting point from the linearised model gap^2 = D^2 + A^2 x^2.
  Matrix quad(static_cast<Eigen::Index>(count), 2);
  for (std::size_t t = 0; t < count; ++t) {
    quad(static_cast<Eigen::Index>(t), 0) = 1.0;
    quad(static_cast<Eigen::Index>(t), 1) = x[t] * x[t];
  }
  const Vector lin = quad.colPivHouseholderQr().solve(gap_sq);
  Vector p(2);
  p(0) = std::sqrt(std::max(lin(0), delta_min * delta_min * 1e-6));
  p(1) = std::sqrt(std::max(lin(1), 0.0));

  GapFunctor functor(x, gap);
  Eigen::LevenbergMarquardt<GapFunctor> lm(functor);
  lm.setMaxfev(2000);
  lm.minimize(p);

  fit.delta_fit = std::abs(p(0));
  fit.a = std::abs(p(1));

  double ss = 0.0;
  for (std::size_t t = 0; t < count; ++t) {
    const double half = 0.5 * std::sqrt(fit.delta_fit * fit.delta_fit + fit.a * fit.a * x[t] * x[t]);
    const double base = fit.e_center + fit.b * x[t];
    ss += std::pow(lower[t] - (base - half), 2) + std::pow(upper[t] - (base + half), 2);
  }
  fit.rms = std::sqrt(ss / static_cast<double>(2 * count));
  fit.valid = std::isfinite(fit.rms) && delta_min > 0.0 && std::abs(fit.delta_fit - delta_min) <= 0.05 * delta_min &&
              fit.rms <= 0.05 * delta_min;
  return fit;
}

namespace {

double gap_curvature(const HamiltonianPair& pair, const Eigensystem& eig) {
  return eigenvalue_second_derivative(pair, eig, 1) - eigenvalue_second_derivative(pair, eig, 0);
}

}  // namespace

WilkinsonFit wilkinson_fit(const HamiltonianPair& pair, double s_star, double delta_min, std::size_t points) {
  if (points < 7) throw Error(ErrorCode::invalid_argument, "a Wilkinson fit needs at least 7 points");
  const Eigensystem eig = eigendecompose(interpolate(pair, s_star));
  double half = 0.05;
  try {
    const double curvature = gap_curvature(pair, eig);
    if (curvature > 0.0 && delta_min > 0.0) half = 2.0 * delta_min / std::sqrt(curvature * delta_min);
  } catch (const Error&) {
    // Degenerate neighbours: keep the default half-width.
  }
  half = std::min({half, s_star, 1.0 - s_star});
  if (!(half > 0.0)) throw Error(ErrorCode::invalid_argument, "fit window collapses at the interval ends");
  const auto s = uniform_grid(s_star - half, s_star + half, points);
  std::vector<double> lower(points);
  std::vector<double> upper(points);
  for (std::size_t t = 0; t < points; ++t) {
    const Eigensystem e = eigendecompose(interpolate(pair, s[t]));
    lower[t] = e.value(0);
    upper[t] = e.value(1);
  }
  return wilkinson_fit(s, lower, upper, s_star, delta_min);
}

// ---------------------------------------------------------------------------
// Definitions

namespace {

struct Sides {
  std::size_t max_half;
};

Sides window_extent(const OverlapSeries& series, std::size_t center) {
  if (center >= series.size()) throw Error(ErrorCode::invalid_argument, "window centre outside the grid");
  const std::size_t max_half = std::min(center, series.size() - 1 - center);
  if (max_half < 1) throw Error(ErrorCode::invalid_argument, "window centre needs grid points on both sides");
  return {max_half};
}

template <typename Leak, typename Violation>
DefinitionMeasurement measure_windows(const OverlapSeries& series, std::size_t center, double epsilon, Leak leak,
                                      Violation violation) {
  const std::size_t max_half = window_extent(series, center).max_half;
  DefinitionMeasurement m;
  m.epsilon = std::clamp(epsilon, 0.0, 1.0);
  double running_leak = leak(center);
  double best_violation = 1.0;
  double best_gamma = 2.0;
  std::size_t best_half = 1;
  for (std::size_t d = 1; d <= max_half; ++d) {
    running_leak = std::max({running_leak, leak(center - d), leak(center + d)});
    const double v = violation(center - d, center + d);
    best_violation = std::min(best_violation, v);
    const double gamma = std::max(running_leak, v);
    if (gamma < best_gamma) {
      best_gamma = gamma;
      best_half = d;
    }
  }
  m.gamma = std::clamp(best_gamma, 0.0, 1.0);
  m.delta_window = std::max(series.grid[center + best_half] - series.grid[center],
                            series.grid[center] - series.grid[center - best_half]);
  m.swap_observed = best_violation < 0.5;
  m.satisfied = m.gamma < 0.5 && m.epsilon < 0.5;
  return m;
}

}  // namespace

DefinitionMeasurement measure_choi(const OverlapSeries& series, std::size_t center) {
  if (series.a.cols() < 2 || series.b.cols() < 2)
    throw Error(ErrorCode::invalid_argument, "the first definition needs at least two final levels");
  const auto& a = series.a;
  const auto& b = series.b;
  auto at = [](const Matrix& m, std::size_t t, Eigen::Index k) { return m(static_cast<Eigen::Index>(t), k); };
  const double epsilon = std::max({std::abs(at(a, center, 0) - 0.5), std::abs(at(a, center, 1) - 0.5),
                                   std::abs(at(b, center, 0) - 0.5), std::abs(at(b, center, 1) - 0.5)});
  auto leak = [&](std::size_t t) {
    return std::max(1.0 - (at(a, t, 0) + at(a, t, 1)), 1.0 - (at(b, t, 0) + at(b, t, 1)));
  };
  auto violation = [&](std::size_t l, std::size_t r) {
    return std::max({at(a, l, 0), 1.0 - at(a, r, 0), 1.0 - at(a, l, 1), at(a, r, 1), 1.0 - at(b, l, 0), at(b, r, 0),
                     at(b, l, 1), 1.0 - at(b, r, 1)});
  };
  return measure_windows(series, center, epsilon, leak, violation);
}

DefinitionMeasurement measure_g_def(const OverlapSeries& series, std::size_t center) {
  if (series.g.cols() < 2) throw Error(ErrorCode::invalid_argument, "the g-definition needs g_0 and g_1");
  const auto& g = series.g;
  auto at = [&](std::size_t t, Eigen::Index k) { return g(static_cast<Eigen::Index>(t), k); };
  const double g0 = at(center, 0);
  const double g1 = at(center, 1);
  const double epsilon = std::max({std::abs(g0 - 0.5), std::abs(g1 - 0.5), std::abs(g0 - g1) / 2.0});
  auto leak = [&](std::size_t t) { return 1.0 - (at(t, 0) + at(t, 1)); };
  auto violation = [&](std::size_t l, std::size_t r) {
    return std::max({at(l, 0), 1.0 - at(r, 0), 1.0 - at(l, 1), at(r, 1)});
  };
  return measure_windows(series, center, epsilon, leak, violation);
}

// ---------------------------------------------------------------------------
// Gap expression, gap bound, rotation of the lowest pair

double check_prop1(const HamiltonianPair& pair, const FinalLevelPartition& partition, double s_star,
                   double stationarity_tol) {
  if (partition.level_of.size() != pair.basis.size())
    throw Error(ErrorCode::invalid_argument, "partition and pair do not share a basis");
  const Eigensystem eig = eigendecompose(interpolate(pair, s_star));
  const double slope = eigenvalue_derivative(pair, eig, 1) - eigenvalue_derivative(pair, eig, 0);
  if (std::abs(slope) > stationarity_tol)
    throw Error(ErrorCode::invalid_argument, "s* is not stationary: |dDelta/ds| = " + std::to_string(std::abs(slope)));
  const auto levels = static_cast<Eigen::Index>(partition.size());
  Vector a(levels);
  Vector b(levels);
  accumulate_levels(eig, partition, a, b);
  double sum = 0.0;
  for (Eigen::Index k = 0; k < levels; ++k) sum += partition.levels[static_cast<std::size_t>(k)].energy * (b(k) - a(k));
  return std::abs((eig.value(1) - eig.value(0)) - sum);
}

double check_corollary1(const DefinitionMeasurement& choi, const FinalLevelPartition& partition, double delta_min) {
  if (!choi.satisfied) throw Error(ErrorCode::not_applicable, "the first definition is not satisfied");
  if (partition.size() < 2) throw Error(ErrorCode::not_applicable, "fewer than two final levels");
  const double e0 = partition.levels[0].energy;
  const double e1 = partition.levels[1].energy - e0;
  const double m = partition.levels.back().energy - e0;
  const double k = 2.0 * (0.0 + e1 + 2.0 * m);
  return k * choi.epsilon - delta_min;
}

Eigensystem anticrossing_gauge(const HamiltonianPair& pair, double s) {
  Eigensystem eig = eigendecompose(interpolate(pair, s));
  if (eig.size() >= 2 && eig.vector(0).dot(apply_derivative(pair, eig.vector(1))) < 0.0) eig.vectors.col(1) *= -1.0;
  return eig;
}

namespace {

struct Stencil {
  Eigensystem centre;
  Eigensystem plus;
  Eigensystem minus;
  double gap = 0.0;
  double beta = 0.0;
};

Stencil derivative_stencil(const HamiltonianPair& pair, double s_star, double h) {
  if (!(h > 0.0) || h > 1e-4) throw Error(ErrorCode::invalid_argument, "derivative step must lie in (0, 1e-4]");
  if (s_star - h < 0.0 || s_star + h > 1.0)
    throw Error(ErrorCode::invalid_argument, "derivative stencil leaves [0, 1]");
  Stencil st;
  st.centre = anticrossing_gauge(pair, s_star);
  if (st.centre.size() < 2) throw Error(ErrorCode::invalid_argument, "need at least two levels");
  st.gap = st.centre.value(1) - st.centre.value(0);
  if (degenerate(st.centre.value(0), st.centre.value(1), st.centre.scale()))
    throw Error(ErrorCode::degenerate, "E0 and E1 touch at s*");
  st.plus = eigendecompose(interpolate(pair, s_star + h));
  st.minus = eigendecompose(interpolate(pair, s_star - h));
  for (const Eigensystem* e : {&st.plus, &st.minus}) {
    const double ratio = (e->value(1) - e->value(0)) / st.gap;
    if (ratio > 2.0)
      throw Error(ErrorCode::invalid_argument,
                  "step too large for the anti-crossing width: Delta(s* +- h) / Delta_min = " + std::to_string(ratio));
  }
  align_signs(st.centre.vectors, st.plus);
  align_signs(st.centre.vectors, st.minus);
  st.beta = st.centre.vector(0).dot(apply_derivative(pair, st.centre.vector(1))) / st.gap;
  if (st.beta == 0.0) throw Error(ErrorCode::degenerate, "the coupling between E0 and E1 vanishes at s*");
  return st;
}

}  // namespace

Theorem2Check check_theorem2(const HamiltonianPair& pair, double s_star, double h) {
  const Stencil st = derivative_stencil(pair, s_star, h);
  Theorem2Check out;
  out.beta = st.beta;
  out.h = h;
  const Vector d0 = (st.plus.vector(0) - st.minus.vector(0)) / (2.0 * h);
  const Vector d1 = (st.plus.vector(1) - st.minus.vector(1)) / (2.0 * h);
  const double scale = std::abs(st.beta);
  out.residual0 = (d0 + st.beta * st.centre.vector(1)).norm() / scale;
  out.residual1 = (d1 - st.beta * st.centre.vector(0)).norm() / scale;
  for (std::size_t i = 0; i < 2; ++i) {
    const Vector coupling = st.centre.vectors.transpose() * apply_derivative(pair, st.centre.vector(i));
    for (Eigen::Index j = 2; j < coupling.size(); ++j) out.offdiag_max = std::max(out.offdiag_max, std::abs(coupling(j)));
  }
  return out;
}

Corollary2Check check_corollary2(const HamiltonianPair& pair, double s_star, double h) {
  const auto gs = static_cast<Eigen::Index>(ground_state_index(pair));
  const Stencil st = derivative_stencil(pair, s_star, h);
  Corollary2Check out;
  out.beta = st.beta;
  out.h = h;
  const double c0 = st.centre.vectors(gs, 0);
  const double c1 = st.centre.vectors(gs, 1);
  out.g0 = c0 * c0;
  out.g1 = c1 * c1;
  auto sq = [](double v) { return v * v; };
  out.g0_prime = (sq(st.plus.vectors(gs, 0)) - sq(st.minus.vectors(gs, 0))) / (2.0 * h);
  out.g1_prime = (sq(st.plus.vectors(gs, 1)) - sq(st.minus.vectors(gs, 1))) / (2.0 * h);
  const double scale = std::abs(st.beta);
  const double g01 = 0.5 * (out.g0 + out.g1);
  out.sum_residual = std::abs(out.g0_prime + out.g1_prime) / scale;
  out.diff_residual = std::abs(out.g0_prime - out.g1_prime - 2.0 * g01 * st.beta) / scale;
  out.exact_residual = std::abs(out.g0_prime - out.g1_prime + 4.0 * st.beta * c0 * c1) / scale;
  return out;
}

double derivative_step(const HamiltonianPair& pair, double s_star, double delta_min) {
  double h = 1e-4;
  try {
    const double curvature = gap_curvature(pair, eigendecompose(interpolate(pair, s_star)));
    if (curvature > 0.0 && delta_min > 0.0) h = std::min(h, 0.02 * delta_min / std::sqrt(curvature * delta_min));
  } catch (const Error&) {
    // Degenerate neighbours: fall back to the upper bound.
  }
  return std::min(h, 0.5 * std::min(s_star, 1.0 - s_star));
}

// ---------------------------------------------------------------------------
// Report

AntiCrossingReport analyze(const HamiltonianPair& pair, const AnalysisOptions& options) {
  AntiCrossingReport report;
  report.gap = min_gap(pair, options.coarse_points, options.refine_tol);
  const FinalLevelPartition partition = partition_final_levels(pair);
  report.levels = partition.levels;
  if (report.gap.degenerate_final_ground)
    report.warnings.push_back("E0(1) and E1(1) are degenerate; the minimum gap closes at s = 1");
  if (!partition.ground_unique()) report.warnings.push_back("the final ground level is degenerate");

  const double s_star = report.gap.s_star;
  const double delta_min = report.gap.delta_min;
  const Eigensystem eig = anticrossing_gauge(pair, s_star);
  if (delta_min > 0.0) report.beta = eig.vector(0).dot(apply_derivative(pair, eig.vector(1))) / delta_min;
  const auto levels = static_cast<Eigen::Index>(partition.size());
  report.a_star = Vector(levels);
  report.b_star = Vector(levels);
  accumulate_levels(eig, partition, report.a_star, report.b_star);
  if (partition.ground_unique()) {
    const auto gs = static_cast<Eigen::Index>(partition.levels[0].members[0]);
    report.g_star = eig.vectors.row(gs).array().square().transpose();
  }

  auto skip_all = [&](const std::string& reason) {
    for (const char* name : {"wilkinson", "choi", "g_def", "prop1", "corollary1", "theorem2", "corollary2"})
      report.skipped.emplace_back(name, reason);
  };
  if (report.gap.location != GapLocation::interior) {
    skip_all("the minimum gap lies at an end of the interpolation");
    return report;
  }

  try {
    report.wilkinson = wilkinson_fit(pair, s_star, delta_min, options.fit_points);
  } catch (const Error& e) {
    report.skipped.emplace_back("wilkinson", e.what());
  }

  const auto shared = std::make_shared<const HamiltonianPair>(pair);
  const SpectralSweep window = sweep(shared, local_grid(s_star, options.window_half_points));
  const std::size_t centre = options.window_half_points;
  const OverlapSeries series =
      partition.ground_unique() ? compute_overlaps(window, partition) : level_overlaps(window, partition);
  if (partition.size() >= 2) {
    report.choi = measure_choi(series, centre);
  } else {
    report.skipped.emplace_back("choi", "fewer than two final levels");
  }
  if (series.has_g()) {
    report.g_def = measure_g_def(series, centre);
  } else {
    report.skipped.emplace_back("g_def", "the final ground level is degenerate");
  }

  double curvature = 0.0;
  try {
    curvature = std::abs(gap_curvature(pair, eig));
  } catch (const Error&) {
  }
  try {
    report.prop1 = check_prop1(pair, partition, s_star, 1e-6 + curvature * options.refine_tol);
  } catch (const Error& e) {
    report.skipped.emplace_back("prop1", e.what());
  }

  if (report.choi) {
    try {
      report.corollary1_margin = check_corollary1(*report.choi, partition, delta_min);
    } catch (const Error& e) {
      report.skipped.emplace_back("corollary1", e.what());
    }
  } else {
    report.skipped.emplace_back("corollary1", "the first definition was not measured");
  }

  const double h = derivative_step(pair, s_star, delta_min);
  try {
    report.theorem2 = check_theorem2(pair, s_star, h);
  } catch (const Error& e) {
    report.skipped.emplace_back("theorem2", e.what());
  }
  if (partition.ground_unique()) {
    try {
      report.corollary2 = check_corollary2(pair, s_star, h);
    } catch (const Error& e) {
      report.skipped.emplace_back("corollary2", e.what());
    }
  } else {
    report.skipped.emplace_back("corollary2", "the final ground level is degenerate");
  }
  return report;
}

}  // namespace adiabat
