// Copyright (C) 2026 The adiabat authors
// SPDX-License-Identifier: Apache-2.0

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace oracle {

Vector jacobi_eigenvalues(Matrix a, bool reverse_sweep) {
  const Eigen::Index n = a.rows();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        if (i != j) off += a(i, j) * a(i, j);
    if (std::sqrt(off) <= 1e-15 * std::max(1.0, a.norm())) break;
    for (Eigen::Index pi = 0; pi < n; ++pi) {
      for (Eigen::Index qi = pi + 1; qi < n; ++qi) {
        const Eigen::Index p = reverse_sweep ? n - 1 - qi : pi;
        const Eigen::Index q = reverse_sweep ? n - 1 - pi : qi;
        if (a(p, q) == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  Vector d = a.diagonal();
  std::sort(d.data(), d.data() + d.size());
  return d;
}

namespace {

using CMatrix = Eigen::MatrixXcd;

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Operator acting with `first` on qubit i and `second` on qubit j.
CMatrix two_site(int n, int i, int j, const CMatrix& first, const CMatrix& second) {
  CMatrix out = CMatrix::Identity(1, 1);
  for (int q = 1; q <= n; ++q) {
    const CMatrix& f = q == i ? first : (q == j ? second : CMatrix(CMatrix::Identity(2, 2)));
    out = kron(out, f);
  }
  return out;
}

}  // namespace

Matrix pauli_swap_mixer(int n, const std::vector<unsigned>& states, bool wrap) {
  using C = std::complex<double>;
  CMatrix x(2, 2);
  x << 0, 1, 1, 0;
  CMatrix y(2, 2);
  y << 0, C(0, -1), C(0, 1), 0;
  const auto dim = static_cast<Eigen::Index>(1) << n;
  CMatrix h = CMatrix::Zero(dim, dim);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i < n; ++i) pairs.emplace_back(i, i + 1);
  if (wrap && n > 2) pairs.emplace_back(n, 1);
  for (auto [i, j] : pairs) h -= 0.5 * (two_site(n, i, j, x, x) + two_site(n, i, j, y, y));
  Matrix out(static_cast<Eigen::Index>(states.size()), static_cast<Eigen::Index>(states.size()));
  for (std::size_t a = 0; a < states.size(); ++a)
    for (std::size_t b = 0; b < states.size(); ++b)
      out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = h(states[a], states[b]).real();
  return out;
}

Matrix TwoLevel::mixer() const {
  Matrix m(2, 2);
  m << 0, -1, -1, 0;
  return m;
}

Vector TwoLevel::target() const {
  Vector t(2);
  t << 0, eps;
  return t;
}

double TwoLevel::lower(double s) const {
  const double c = s * eps / 2.0;
  return c - std::sqrt(c * c + (1 - s) * (1 - s));
}

double TwoLevel::upper(double s) const {
  const double c = s * eps / 2.0;
  return c + std::sqrt(c * c + (1 - s) * (1 - s));
}

Vector TwoLevel::vector(double s, int k) const {
  // (H - lambda) v = 0 with H = [[0, -(1-s)], [-(1-s), s eps]]: v = (1 - s, -lambda).
  const double lambda = k == 0 ? lower(s) : upper(s);
  Vector v(2);
  v << (1 - s), -lambda;
  v.normalize();
  if (v(0) < 0) v = -v;
  return v;
}

}  // namespace oracle
