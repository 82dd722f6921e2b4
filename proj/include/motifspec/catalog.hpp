#pragma once

// Worked examples as replayable fixtures: a construction recipe plus the
// eigenvalues and eigenfunctions the example states for the result.
//
// Examples that label vertices from 1 are translated to 0-based indices:
// vertex k becomes k - 1 (the vertex-doubling figure's vertex 5 is index 4,
// the doubled edge (2, 3) of the triangle is {1, 2}).

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "motifspec/evolution.hpp"
#include "motifspec/graph.hpp"
#include "motifspec/rational.hpp"

namespace motifspec {

struct SpectrumFragment {
  double value = 0.0;
  std::optional<Rational> exact;
  std::size_t multiplicity = 0;
  bool at_least = false;  // multiplicity is a lower bound rather than exact
};

struct ExpectedVector {
  double lambda = 0.0;
  std::vector<double> f;
  // Must also lie in the span of the result's claim eigenfunctions for lambda.
  bool in_claim_span = false;
};

struct Fixture {
  std::string name;
  std::string example;  // which worked example this reproduces
  std::string recipe;   // construction, in words
  std::function<OperationResult()> build;
  std::optional<Graph> expected_graph;  // exact labelled graph, when stated
  std::vector<SpectrumFragment> spectrum;
  bool spectrum_full = false;  // fragments list every eigenvalue
  std::vector<ExpectedVector> vectors;
  std::optional<std::pair<std::size_t, std::size_t>> kite;  // check the tail-pair sum
};

std::vector<Fixture> paper_example_catalog();

}  // namespace motifspec
