// Copyright (C) 2026 The adiabat authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "adiabat/basis.hpp"
#include "adiabat/clique.hpp"
#include "adiabat/error.hpp"
#include "adiabat/hamiltonian.hpp"
#include "adiabat/spectral.hpp"
#include "oracles.hpp"

using namespace adiabat;

namespace {

std::vector<unsigned> states_of(const BasisSet& b) {
  std::vector<unsigned> out;
  for (std::size_t i = 0; i < b.size(); ++i) out.push_back(static_cast<unsigned>(b.state(i)));
  return out;
}

}  // namespace

TEST_CASE("transverse field examples") {
  const Matrix h1 = build_transverse_field(1);
  CHECK(h1(0, 0) == 0.0);
  CHECK(h1(0, 1) == -1.0);
  CHECK(h1(1, 0) == -1.0);
  const Eigensystem e1 = eigendecompose(h1);
  CHECK(e1.value(0) == doctest::Approx(-1.0));
  CHECK(e1.value(1) == doctest::Approx(1.0));

  const Matrix h2 = build_transverse_field(2);
  for (Eigen::Index r = 0; r < 4; ++r) CHECK((h2.row(r).array() == -1.0).count() == 2);

  const Eigensystem e3 = eigendecompose(build_transverse_field(3));
  CHECK(e3.value(0) == doctest::Approx(-3.0).epsilon(1e-12));
  for (Eigen::Index i = 0; i < 8; ++i) CHECK(std::abs(e3.vectors(i, 0)) == doctest::Approx(1.0 / std::sqrt(8.0)));
}

TEST_CASE("swap mixer examples") {
  const BasisSet b = BasisSet::weight(3, 1);
  const Matrix h = build_swap_mixer(3, 1, false);
  const auto i100 = *b.find(bitstring_from_string("100"));
  const auto i010 = *b.find(bitstring_from_string("010"));
  const auto i001 = *b.find(bitstring_from_string("001"));
  CHECK(h(static_cast<Eigen::Index>(i100), static_cast<Eigen::Index>(i010)) == -1.0);
  CHECK(h(static_cast<Eigen::Index>(i100), static_cast<Eigen::Index>(i001)) == 0.0);

  const Matrix h2 = build_swap_mixer(2, 1, false);
  CHECK(h2(0, 1) == -1.0);
  const Eigensystem e2 = eigendecompose(h2);
  CHECK(e2.value(0) == doctest::Approx(-1.0));
  CHECK(e2.value(1) == doctest::Approx(1.0));
  // The cycle on two nodes has no extra pair.
  CHECK(build_swap_mixer(2, 1, true) == h2);

  // Equal adjacent bits are annihilated by S, so the diagonal is zero.
  const BasisSet b6 = BasisSet::weight(6, 3);
  const Matrix h6 = build_swap_mixer(6, 3, false);
  const auto i = static_cast<Eigen::Index>(*b6.find(bitstring_from_string("111000")));
  CHECK(h6(i, i) == 0.0);
  CHECK(h6.diagonal().cwiseAbs().maxCoeff() == 0.0);

  CHECK_THROWS_AS(build_swap_mixer(3, 0, false), Error);
  CHECK_THROWS_AS(build_swap_mixer(3, 3, false), Error);
}

TEST_CASE("swap mixer equals the Pauli construction entrywise") {
  for (int n = 2; n <= 7; ++n) {
    for (int k = 1; k < n; ++k) {
      const BasisSet b = BasisSet::weight(n, k);
      for (bool wrap : {false, true}) {
        const Matrix ours = build_swap_mixer(n, k, wrap);
        const Matrix pauli = oracle::pauli_swap_mixer(n, states_of(b), wrap);
        CHECK((ours - pauli).cwiseAbs().maxCoeff() == 0.0);
      }
    }
  }
}

TEST_CASE("toy example 1 target energies") {
  const BasisSet b = BasisSet::weight(6, 3);
  const auto top = *b.find(bitstring_from_string("111000"));
  const auto bottom = *b.find(bitstring_from_string("000111"));
  for (const Rational alpha : {Rational(0), Rational(1, 2), Rational(2, 3)}) {
    const ProblemGraph g = toy_example_1(alpha).graph;
    const Vector t = build_clique_target(g, b);
    const double a = alpha.to_double();
    CHECK(t(static_cast<Eigen::Index>(top)) == -3.0 * a);
    CHECK(t(static_cast<Eigen::Index>(bottom)) == 1.0 - 4.5 * a);
  }
}

TEST_CASE("clique energy counts missing pairs") {
  ProblemGraph g;
  g.n = 4;
  g.k = 2;
  g.edges = {{1, 2}};
  g.weights = {1.0, 2.0, 3.0, 4.0};
  g.set_alpha(0.25);
  CHECK(clique_energy(g, bitstring_from_string("1100")) == -0.75);
  CHECK(clique_energy(g, bitstring_from_string("0011")) == 1.0 - 1.75);
  CHECK(clique_energy(g, bitstring_from_string("1111")) == 5.0 - 2.5);
}

TEST_CASE("problem graph validation") {
  ProblemGraph g = toy_example_1(0.5).graph;
  g.edges.push_back({2, 2});
  CHECK_THROWS_AS(g.validate(), Error);
  g = toy_example_1(0.5).graph;
  g.edges.push_back({1, 2});
  CHECK_THROWS_AS(g.validate(), Error);
  g = toy_example_1(0.5).graph;
  g.weights.pop_back();
  CHECK_THROWS_AS(g.validate(), Error);
  g = toy_example_1(0.5).graph;
  g.weights[0] = -1.0;
  CHECK_THROWS_AS(g.validate(), Error);
  g = toy_example_1(0.5).graph;
  g.edges.push_back({1, 7});
  CHECK_THROWS_AS(g.validate(), Error);
}

TEST_CASE("interpolation is affine") {
  const HamiltonianPair p = make_clique_pair(toy_example_1(0.5).graph, MixerKind::swap_chain);
  CHECK(p.basis.size() == 20);
  CHECK(p.at(0.0) == p.mixer);
  CHECK(p.at(1.0) == Matrix(p.target.asDiagonal()));
  for (double s : {0.1, 0.37, 0.8}) {
    const Matrix expected = (1.0 - s) * p.mixer + s * Matrix(p.target.asDiagonal());
    CHECK((p.at(s) - expected).cwiseAbs().maxCoeff() <= 1e-15);
    CHECK((interpolate(p, s) - p.at(s)).cwiseAbs().maxCoeff() == 0.0);
  }
  CHECK((p.derivative() - (Matrix(p.target.asDiagonal()) - p.mixer)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("mixer kinds and dimensions") {
  const ProblemGraph g = toy_example_1(0.5).graph;
  const HamiltonianPair tf = make_clique_pair(g, MixerKind::transverse_field);
  CHECK(tf.basis.size() == 64);
  for (std::size_t i = 0; i < tf.basis.size(); ++i)
    CHECK(tf.target(static_cast<Eigen::Index>(i)) == clique_energy(g, tf.basis.state(i)));
  const HamiltonianPair cyc = make_clique_pair(g, MixerKind::swap_cycle);
  CHECK(cyc.basis.size() == 20);
  CHECK((cyc.mixer - build_swap_mixer(6, 3, true)).cwiseAbs().maxCoeff() == 0.0);
  CHECK(parse_mixer("swap_chain") == MixerKind::swap_chain);
  CHECK(parse_mixer(to_string(MixerKind::transverse_field)) == MixerKind::transverse_field);
  CHECK_FALSE(parse_mixer("bogus").has_value());
}

TEST_CASE("transverse field with a zero target has ground energy -n") {
  for (int n = 1; n <= 5; ++n) {
    const BasisSet b = BasisSet::full(n);
    const std::vector<double> zeros(b.size(), 0.0);
    const HamiltonianPair p = make_pair(b, build_transverse_field(n), build_diagonal_target(zeros, b));
    CHECK(eigendecompose(p.at(0.0)).value(0) == doctest::Approx(-n).epsilon(1e-12));
  }
}

TEST_CASE("make_pair rejects malformed inputs") {
  const BasisSet b = BasisSet::weight(3, 1);
  Matrix h = build_swap_mixer(3, 1, false);
  CHECK_THROWS_AS(make_pair(b, h, Vector::Zero(2)), Error);
  Matrix bad = h;
  bad(0, 1) = 0.5;
  CHECK_THROWS_AS(make_pair(b, bad, Vector::Zero(3)), Error);
  Matrix asym = h;
  asym(0, 2) = -1.0;
  CHECK_THROWS_AS(make_pair(b, asym, Vector::Zero(3)), Error);
  const std::vector<double> short_list = {1.0, 2.0};
  CHECK_THROWS_AS(build_diagonal_target(short_list, b), Error);
}
