// Copyright (C) 2026 The adiabat authors
// SPDX-License-Identifier: Apache-2.0

#include "adiabat/clique.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "adiabat/basis.hpp"
#include "adiabat/error.hpp"

namespace adiabat {

namespace {

// Read off the drawing of the first toy graph.
const std::vector<Edge> kToy1Edges = {{1, 2}, {1, 3}, {2, 3}, {1, 6}, {2, 5}, {5, 6}, {4, 6}};
const std::vector<double> kToyWeights = {1.0, 1.0, 1.0, 1.5, 1.5, 1.5};

ProblemGraph toy_graph(std::vector<Edge> edges) {
  ProblemGraph g;
  g.n = 6;
  g.k = 3;
  g.edges = std::move(edges);
  g.weights = kToyWeights;
  return g;
}

CliqueInstance with_expectation(ProblemGraph graph, std::string description) {
  graph.validate();
  CliqueInstance inst{std::move(graph), std::move(description), std::nullopt};
  const OracleResult oracle = brute_force(inst.graph);
  inst.expected = CliqueSolution{oracle.best_subsets, oracle.best_energy};
  return inst;
}

std::vector<Edge> toy2_edges() {
  auto relabel = [](int v) {
    switch (v) {
      case 1:
        return 3;
      case 3:
        return 1;
      case 5:
        return 6;
      case 6:
        return 5;
      default:
        return v;
    }
  };
  std::vector<Edge> edges;
  for (const Edge& e : kToy1Edges) {
    const int u = relabel(e.u);
    const int v = relabel(e.v);
    edges.push_back({std::min(u, v), std::max(u, v)});
  }
  return edges;
}

}  // namespace

CliqueInstance toy_example_1(const Rational& alpha) {
  ProblemGraph g = toy_graph(kToy1Edges);
  g.set_alpha(alpha);
  return with_expectation(std::move(g), "toy example 1");
}

CliqueInstance toy_example_1(double alpha) {
  ProblemGraph g = toy_graph(kToy1Edges);
  g.set_alpha(alpha);
  return with_expectation(std::move(g), "toy example 1");
}

CliqueInstance toy_example_2(const Rational& alpha) {
  ProblemGraph g = toy_graph(toy2_edges());
  g.set_alpha(alpha);
  return with_expectation(std::move(g), "toy example 2");
}

CliqueInstance toy_example_2(double alpha) {
  ProblemGraph g = toy_graph(toy2_edges());
  g.set_alpha(alpha);
  return with_expectation(std::move(g), "toy example 2");
}

CliqueInstance random_instance(const RandomInstanceParams& p) {
  if (!(p.edge_probability >= 0.0 && p.edge_probability <= 1.0))
    throw Error(ErrorCode::invalid_argument, "edge probability must lie in [0, 1]");
  if (!std::isfinite(p.weight_low) || !std::isfinite(p.weight_high) || p.weight_low > p.weight_high || p.weight_low < 0.0)
    throw Error(ErrorCode::invalid_argument, "weights need 0 <= low <= high");
  if (p.n < 2 || p.n > kMaxQubits) throw Error(ErrorCode::invalid_argument, "node count must be in [2, 20]");

  std::mt19937_64 rng(p.seed);
  auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

  ProblemGraph g;
  g.n = p.n;
  g.k = p.k;
  for (int i = 1; i <= p.n; ++i)
    for (int j = i + 1; j <= p.n; ++j)
      if (uniform() < p.edge_probability) g.edges.push_back({i, j});
  for (int i = 0; i < p.n; ++i) g.weights.push_back(p.weight_low + (p.weight_high - p.weight_low) * uniform());
  g.set_alpha(p.alpha);
  g.validate();
  return CliqueInstance{std::move(g),
                        "random G(" + std::to_string(p.n) + ", " + std::to_string(p.edge_probability) + "), seed " +
                            std::to_string(p.seed),
                        std::nullopt};
}

OracleResult brute_force(const ProblemGraph& graph) {
  graph.validate();
  if (binomial(graph.n, graph.k) > kMaxOracleSubsets)
    throw Error(ErrorCode::capacity, "more than 1e6 subsets; the exhaustive oracle refuses");

  std::optional<Rational> alpha = graph.alpha_exact;
  if (!alpha) alpha = Rational::from_double(graph.alpha);
  std::vector<Rational> weights;
  bool exact = alpha.has_value();
  for (double w : graph.weights) {
    if (!exact) break;
    const auto r = Rational::from_double(w);
    if (!r) {
      exact = false;
      break;
    }
    weights.push_back(*r);
  }

  OracleResult result;
  const auto n = static_cast<std::size_t>(graph.n);
  std::vector<bool> chosen(n, false);
  std::fill(chosen.begin(), chosen.begin() + graph.k, true);
  do {
    OracleEntry entry;
    for (std::size_t i = 0; i < n; ++i)
      if (chosen[i]) entry.nodes.push_back(static_cast<int>(i) + 1);
    double weight = 0.0;
    for (int v : entry.nodes) weight += graph.weights[static_cast<std::size_t>(v - 1)];
    for (std::size_t x = 0; x < entry.nodes.size(); ++x)
      for (std::size_t y = x + 1; y < entry.nodes.size(); ++y)
        if (!graph.has_edge(entry.nodes[x], entry.nodes[y])) ++entry.missing_edges;
    entry.energy = static_cast<double>(entry.missing_edges) - graph.alpha * weight;
    if (exact) {
      try {
        Rational w_sum;
        for (int v : entry.nodes) w_sum += weights[static_cast<std::size_t>(v - 1)];
        entry.exact = Rational(entry.missing_edges) - *alpha * w_sum;
      } catch (const Error&) {
        exact = false;
      }
    }
    result.table.push_back(std::move(entry));
  } while (std::prev_permutation(chosen.begin(), chosen.end()));

  if (!exact)
    for (auto& e : result.table) e.exact.reset();
  result.exact = exact;

  // The enumeration above is already in lexicographic node order, so a
  // stable sort keeps that order among ties.
  std::stable_sort(result.table.begin(), result.table.end(), [exact](const OracleEntry& a, const OracleEntry& b) {
    return exact ? *a.exact < *b.exact : a.energy < b.energy;
  });
  const OracleEntry& head = result.table.front();
  result.best_energy = head.energy;
  result.best_exact = head.exact;
  for (const auto& e : result.table) {
    const bool tie = exact ? *e.exact == *head.exact : e.energy == head.energy;
    if (!tie) break;
    result.best_subsets.push_back(e.nodes);
  }
  return result;
}

}  // namespace adiabat
