// Copyright (C) 2026 The adiabat authors
// SPDX-License-Identifier: Apache-2.0

#include "adiabat/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "adiabat/error.hpp"

namespace adiabat {

bool degenerate(double a, double b, double scale) noexcept {
  return std::abs(a - b) <= kDegeneracyTolerance * (1.0 + std::abs(scale));
}

namespace {

void canonicalize(Matrix& vectors) {
  for (Eigen::Index k = 0; k < vectors.cols(); ++k) {
    auto v = vectors.col(k);
    const double sum = v.sum();
    double sign = 1.0;
    if (std::abs(sum) > 1e-8 * v.cwiseAbs().sum()) {
      sign = sum < 0.0 ? -1.0 : 1.0;
    } else {
      Eigen::Index at = 0;
      v.cwiseAbs().maxCoeff(&at);
      sign = v(at) < 0.0 ? -1.0 : 1.0;
    }
    if (sign < 0.0) v = -v;
  }
}

void require_level(const Eigensystem& eig, std::size_t k) {
  if (k >= eig.size()) throw Error(ErrorCode::invalid_argument, "level index out of range");
}

void require_isolated(const Eigensystem& eig, std::size_t k) {
  require_level(eig, k);
  const double scale = eig.scale();
  if (k > 0 && degenerate(eig.value(k - 1), eig.value(k), scale))
    throw Error(ErrorCode::degenerate, "level " + std::to_string(k) + " is degenerate with level " + std::to_string(k - 1));
  if (k + 1 < eig.size() && degenerate(eig.value(k), eig.value(k + 1), scale))
    throw Error(ErrorCode::degenerate, "level " + std::to_string(k) + " is degenerate with level " + std::to_string(k + 1));
}

void require_s(double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw Error(ErrorCode::invalid_argument, "interpolation parameter must lie in [0, 1]");
}

double neighbor_overlap(const HamiltonianPair& pair, std::size_t i, const Eigen::Ref<const Vector>& v) {
  return -pair.mixer.row(static_cast<Eigen::Index>(i)).dot(v);
}

}  // namespace

Eigensystem eigendecompose(const Matrix& h) {
  if (h.rows() != h.cols() || h.rows() == 0) throw Error(ErrorCode::invalid_argument, "matrix must be square and nonempty");
  const double magnitude = std::max(1.0, h.cwiseAbs().maxCoeff());
  const double asymmetry = (h - h.transpose()).cwiseAbs().maxCoeff();
  if (!(asymmetry <= 1e-12 * magnitude))
    throw Error(ErrorCode::invalid_argument, "matrix is not symmetric (max |A - A^T| = " + std::to_string(asymmetry) + ")");

  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success)
    throw Error(ErrorCode::numerical,
                "symmetric eigensolver did not converge (dimension " + std::to_string(h.rows()) + ", iteration cap " +
                    std::to_string(Eigen::SelfAdjointEigenSolver<Matrix>::m_maxIterations) + " per eigenvalue)");
  Eigensystem eig{solver.eigenvalues(), solver.eigenvectors()};
  canonicalize(eig.vectors);
  return eig;
}

void align_signs(const Matrix& reference, Eigensystem& current) {
  for (Eigen::Index k = 0; k < current.vectors.cols(); ++k)
    if (reference.col(k).dot(current.vectors.col(k)) < 0.0) current.vectors.col(k) *= -1.0;
}

SpectralSweep::SpectralSweep(std::shared_ptr<const HamiltonianPair> pair, std::vector<double> grid,
                             std::vector<Eigensystem> points, std::vector<std::vector<std::size_t>> matching)
    : pair_(std::move(pair)), grid_(std::move(grid)), points_(std::move(points)), matching_(std::move(matching)) {}

std::vector<double> uniform_grid(double lo, double hi, std::size_t n) {
  if (n < 2) throw Error(ErrorCode::invalid_argument, "a grid needs at least two points");
  std::vector<double> grid(n);
  for (std::size_t i = 0; i < n; ++i)
    grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  grid.back() = hi;
  return grid;
}

SpectralSweep sweep(std::shared_ptr<const HamiltonianPair> pair, std::vector<double> grid) {
  if (!pair) throw Error(ErrorCode::invalid_argument, "sweep needs a Hamiltonian pair");
  if (grid.size() < 2) throw Error(ErrorCode::invalid_argument, "sweep grid needs at least two points");
  for (std::size_t t = 0; t < grid.size(); ++t) {
    require_s(grid[t]);
    if (t > 0 && !(grid[t] > grid[t - 1])) throw Error(ErrorCode::invalid_argument, "sweep grid must be strictly increasing");
  }

  // Decompositions are independent; the gauge pass below is a sequential fold.
  std::vector<Eigensystem> points;
  points.reserve(grid.size());
  for (double s : grid) {
    try {
      points.push_back(eigendecompose(interpolate(*pair, s)));
    } catch (const Error& e) {
      throw Error(e.code(), std::string(e.what()) + " at s = " + std::to_string(s));
    }
  }

  const std::size_t dim = pair->basis.size();
  std::vector<std::vector<std::size_t>> matching(grid.size(), std::vector<std::size_t>(dim));
  std::iota(matching[0].begin(), matching[0].end(), std::size_t{0});

  for (std::size_t t = 1; t < grid.size(); ++t) {
    const Matrix overlap = points[t - 1].vectors.transpose() * points[t].vectors;  // (prev, current)
    auto& match = matching[t];
    std::vector<bool> prev_used(dim, false);
    std::vector<bool> curr_done(dim, false);
    // A squared overlap above 1/2 identifies the partner uniquely.
    for (std::size_t k = 0; k < dim; ++k) {
      const double o = overlap(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
      if (o * o > 0.5) {
        match[k] = k;
        prev_used[k] = true;
        curr_done[k] = true;
      }
    }
    std::vector<std::size_t> open_prev;
    std::vector<std::size_t> open_curr;
    for (std::size_t k = 0; k < dim; ++k) {
      if (!prev_used[k]) open_prev.push_back(k);
      if (!curr_done[k]) open_curr.push_back(k);
    }
    if (!open_curr.empty()) {
      struct Candidate {
        double weight;
        std::size_t prev;
        std::size_t curr;
      };
      std::vector<Candidate> candidates;
      candidates.reserve(open_prev.size() * open_curr.size());
      for (std::size_t p : open_prev)
        for (std::size_t c : open_curr)
          candidates.push_back({std::abs(overlap(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(c))), p, c});
      std::stable_sort(candidates.begin(), candidates.end(),
                       [](const Candidate& a, const Candidate& b) { return a.weight > b.weight; });
      for (const Candidate& cand : candidates) {
        if (prev_used[cand.prev] || curr_done[cand.curr]) continue;
        match[cand.curr] = cand.prev;
        prev_used[cand.prev] = true;
        curr_done[cand.curr] = true;
      }
    }
    for (std::size_t k = 0; k < dim; ++k)
      if (overlap(static_cast<Eigen::Index>(match[k]), static_cast<Eigen::Index>(k)) < 0.0)
        points[t].vectors.col(static_cast<Eigen::Index>(k)) *= -1.0;
  }

  return SpectralSweep(std::move(pair), std::move(grid), std::move(points), std::move(matching));
}

double gap_at(const HamiltonianPair& pair, double s) {
  const Eigensystem eig = eigendecompose(interpolate(pair, s));
  if (eig.size() < 2) throw Error(ErrorCode::invalid_argument, "gap needs at least two levels");
  return eig.value(1) - eig.value(0);
}

Vector apply_derivative(const HamiltonianPair& pair, const Eigen::Ref<const Vector>& v) {
  return pair.target.cwiseProduct(v) - pair.mixer * v;
}

double eigenvalue_derivative(const HamiltonianPair& pair, const Eigensystem& eig, std::size_t k) {
  require_isolated(eig, k);
  const Vector v = eig.vector(k);
  return v.dot(apply_derivative(pair, v));
}

double eigenvalue_derivative(const HamiltonianPair& pair, double s, std::size_t k) {
  return eigenvalue_derivative(pair, eigendecompose(interpolate(pair, s)), k);
}

Vector eigenvector_derivative(const HamiltonianPair& pair, const Eigensystem& eig, std::size_t k) {
  require_isolated(eig, k);
  const Vector coupling = eig.vectors.transpose() * apply_derivative(pair, eig.vector(k));
  Vector coefficients = Vector::Zero(coupling.size());
  for (Eigen::Index j = 0; j < coupling.size(); ++j) {
    if (static_cast<std::size_t>(j) == k) continue;
    coefficients(j) = coupling(j) / (eig.value(k) - eig.values(j));
  }
  return eig.vectors * coefficients;
}

Vector eigenvector_derivative(const HamiltonianPair& pair, double s, std::size_t k) {
  return eigenvector_derivative(pair, eigendecompose(interpolate(pair, s)), k);
}

double eigenvalue_second_derivative(const HamiltonianPair& pair, const Eigensystem& eig, std::size_t k) {
  require_isolated(eig, k);
  const Vector coupling = eig.vectors.transpose() * apply_derivative(pair, eig.vector(k));
  double sum = 0.0;
  for (Eigen::Index j = 0; j < coupling.size(); ++j) {
    if (static_cast<std::size_t>(j) == k) continue;
    sum += coupling(j) * coupling(j) / (eig.value(k) - eig.values(j));
  }
  return 2.0 * sum;
}

double eigenvalue_second_derivative(const HamiltonianPair& pair, double s, std::size_t k) {
  return eigenvalue_second_derivative(pair, eigendecompose(interpolate(pair, s)), k);
}

double gap_derivative(const HamiltonianPair& pair, double s) {
  const Eigensystem eig = eigendecompose(interpolate(pair, s));
  return eigenvalue_derivative(pair, eig, 1) - eigenvalue_derivative(pair, eig, 0);
}

MinGap min_gap(const HamiltonianPair& pair, int coarse_points, double tol) {
  if (coarse_points < 50) throw Error(ErrorCode::invalid_argument, "min_gap needs at least 50 coarse points");
  if (!(tol > 0.0)) throw Error(ErrorCode::invalid_argument, "min_gap tolerance must be positive");
  if (pair.basis.size() < 2) throw Error(ErrorCode::invalid_argument, "min_gap needs at least two levels");

  const auto grid = uniform_grid(0.0, 1.0, static_cast<std::size_t>(coarse_points));
  std::vector<double> gaps(grid.size());
  bool all_degenerate = true;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const Eigensystem eig = eigendecompose(interpolate(pair, grid[j]));
    gaps[j] = eig.value(1) - eig.value(0);
    if (!degenerate(eig.value(0), eig.value(1), eig.scale())) all_degenerate = false;
  }
  if (all_degenerate) throw Error(ErrorCode::degenerate, "the gap vanishes at every coarse sample");

  MinGap result;
  {
    const Eigensystem final_eig = eigendecompose(interpolate(pair, 1.0));
    result.degenerate_final_ground = degenerate(final_eig.value(0), final_eig.value(1), final_eig.scale());
  }

  const auto best = static_cast<std::size_t>(std::min_element(gaps.begin(), gaps.end()) - gaps.begin());
  if (best == grid.size() - 1 || best == 0) {
    result.location = best == 0 ? GapLocation::start : GapLocation::end;
    result.s_star = grid[best];
    result.delta_min = gaps[best];
    return result;
  }

  // Golden-section search inside the coarse cell pair around the best sample.
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = grid[best - 1];
  double b = grid[best + 1];
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = gap_at(pair, c);
  double fd = gap_at(pair, d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = gap_at(pair, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = gap_at(pair, d);
    }
  }
  double s_best = fc < fd ? c : d;
  double f_best = std::min(fc, fd);
  result.s_uncertainty = b - a;
  result.location = GapLocation::interior;

  // Polish on the sign change of dDelta/ds. The bracket widens until the
  // derivative changes sign or it reaches the coarse cells.
  try {
    double lo = a;
    double hi = b;
    double width = std::max(b - a, tol);
    while (!(gap_derivative(pair, lo) < 0.0 && gap_derivative(pair, hi) > 0.0)) {
      width *= 4.0;
      lo = std::max(grid[best - 1], s_best - width);
      hi = std::min(grid[best + 1], s_best + width);
      if (lo == grid[best - 1] && hi == grid[best + 1]) {
        if (!(gap_derivative(pair, lo) < 0.0 && gap_derivative(pair, hi) > 0.0)) throw Error(ErrorCode::numerical, "no sign change");
        break;
      }
    }
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (gap_derivative(pair, mid) < 0.0)
        lo = mid;
      else
        hi = mid;
    }
    const double s_polished = 0.5 * (lo + hi);
    const double f_polished = gap_at(pair, s_polished);
    if (f_polished <= f_best * (1.0 + 1e-8) + 1e-14) {
      s_best = s_polished;
      f_best = f_polished;
    }
  } catch (const Error&) {
    // Degenerate neighbours or no derivative sign change: keep the golden-section point.
  }

  result.s_star = s_best;
  result.delta_min = f_best;
  try {
    result.stationarity = std::abs(gap_derivative(pair, s_best));
  } catch (const Error&) {
    result.stationarity = std::numeric_limits<double>::quiet_NaN();
  }
  return result;
}

std::size_t ground_state_index(const HamiltonianPair& pair) {
  const Vector& t = pair.target;
  Eigen::Index best = 0;
  t.minCoeff(&best);
  const double scale = t.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < t.size(); ++i)
    if (i != best && degenerate(t(i), t(best), scale))
      throw Error(ErrorCode::degenerate, "the target's ground state is degenerate");
  return static_cast<std::size_t>(best);
}

std::optional<double> energy_identity_residual(const HamiltonianPair& pair, const Eigensystem& eig, double s,
                                               std::size_t i, std::size_t k) {
  require_s(s);
  require_level(eig, k);
  if (i >= pair.basis.size()) throw Error(ErrorCode::invalid_argument, "basis index out of range");
  const auto v = eig.vector(k);
  const double component = v(static_cast<Eigen::Index>(i));
  if (std::abs(component) <= kComponentGuard) return std::nullopt;
  const double energy_i = pair.target(static_cast<Eigen::Index>(i));
  return eig.value(k) - (s * energy_i - (1.0 - s) * neighbor_overlap(pair, i, v) / component);
}

std::optional<double> energy_identity_residual(const HamiltonianPair& pair, double s, std::size_t i,
                                               std::size_t k) {
  return energy_identity_residual(pair, eigendecompose(interpolate(pair, s)), s, i, k);
}

namespace {

struct NeighborRatios {
  double r0;
  double r1;
};

std::optional<NeighborRatios> neighbor_ratios(const HamiltonianPair& pair, const Eigensystem& eig, std::size_t i) {
  if (eig.size() < 2) throw Error(ErrorCode::invalid_argument, "need at least two levels");
  if (i >= pair.basis.size()) throw Error(ErrorCode::invalid_argument, "basis index out of range");
  const auto ii = static_cast<Eigen::Index>(i);
  const double c0 = eig.vectors(ii, 0);
  const double c1 = eig.vectors(ii, 1);
  if (std::abs(c0) <= kComponentGuard || std::abs(c1) <= kComponentGuard) return std::nullopt;
  return NeighborRatios{neighbor_overlap(pair, i, eig.vector(0)) / c0, neighbor_overlap(pair, i, eig.vector(1)) / c1};
}

}  // namespace

std::optional<double> gap_identity_residual(const HamiltonianPair& pair, const Eigensystem& eig, double s,
                                            std::size_t i) {
  require_s(s);
  const auto ratios = neighbor_ratios(pair, eig, i);
  if (!ratios) return std::nullopt;
  const double gap = eig.value(1) - eig.value(0);
  return gap - (1.0 - s) * (ratios->r0 - ratios->r1);
}

std::optional<double> gap_identity_residual(const HamiltonianPair& pair, double s, std::size_t i) {
  return gap_identity_residual(pair, eigendecompose(interpolate(pair, s)), s, i);
}

std::optional<FailureCondition> failure_condition(const HamiltonianPair& pair, double s) {
  require_s(s);
  if (s == 1.0) return std::nullopt;
  const std::size_t gs = ground_state_index(pair);
  const Eigensystem eig = eigendecompose(interpolate(pair, s));
  const auto ratios = neighbor_ratios(pair, eig, gs);
  if (!ratios) return std::nullopt;
  const double gap = eig.value(1) - eig.value(0);
  FailureCondition out{ratios->r0 - ratios->r1, gap / (1.0 - s)};
  // Dividing by a small component amplifies eigenvector rounding by 1/|c|.
  const auto g = static_cast<Eigen::Index>(gs);
  const double conditioning = 1.0 / std::abs(eig.vectors(g, 0)) + 1.0 / std::abs(eig.vectors(g, 1));
  const double rounding = 100.0 * std::numeric_limits<double>::epsilon() * (1.0 - s) *
                          (1.0 + pair.mixer.cwiseAbs().rowwise().sum().maxCoeff()) * conditioning;
  if (std::abs((1.0 - s) * out.ratio_difference - gap) > 1e-8 * (1.0 + gap) + rounding)
    throw Error(ErrorCode::numerical, "neighbour-ratio difference disagrees with the gap at s = " + std::to_string(s));
  return out;
}

std::optional<GapBounds> min_gap_bounds(const HamiltonianPair& pair, double s_star, std::size_t i) {
  require_s(s_star);
  const Eigensystem eig = eigendecompose(interpolate(pair, s_star));
  const auto ratios = neighbor_ratios(pair, eig, i);
  if (!ratios) return std::nullopt;
  const double f = 1.0 - s_star;
  const double gap = eig.value(1) - eig.value(0);
  GapBounds b;
  b.delta_squared = gap * gap;
  b.upper = f * f * (ratios->r0 * ratios->r0 + ratios->r1 * ratios->r1);
  b.lower = f * f * (ratios->r0 * ratios->r0 - ratios->r1 * ratios->r1);
  b.lower_holds = b.lower <= b.delta_squared;
  b.upper_holds = b.delta_squared <= b.upper;
  return b;
}

}  // namespace adiabat
