#pragma once

#include <vector>

#include "multiform/embedding.hpp"
#include "multiform/types.hpp"

namespace multiform {

struct Individual {
  Vector genome;
  double fitness = 0.0;
  int formulation_id = 0;
};

struct SubPopulation {
  int formulation_id = 0;
  std::vector<Individual> members;
  // Cursor for cyclic target selection; persists across generations so a
  // fractional offspring budget still touches every member over time.
  std::size_t next_target = 0;

  const Individual& best() const;
  const Individual& worst() const;
  std::size_t best_index() const;
  std::size_t worst_index() const;
};

// Uniform genomes in [-1,1]^d, each evaluated once (size FEs).
// Draw order: per individual, d uniforms then one evaluation.
SubPopulation init_subpopulation(const Formulation& f, std::size_t size,
                                 EmbeddedObjective& obj, Rng& rng);

// DE/rand/1/bin trial vector against members[target_index], clipped to the box.
// Draw order: r1, r2, r3 by rejection (uniform ints on [0,n-1]), j_rand
// (uniform int on [0,d-1]), then one uniform real per coordinate.
Vector de_trial(const SubPopulation& subpop, std::size_t target_index, double cr,
                double weight, Rng& rng);

// Runs offspring_budget trial/evaluate/select steps with cyclic targets and
// greedy selection (trial replaces target iff trial fitness <= target fitness).
// Returns the number of FEs consumed (== offspring_budget).
std::size_t de_generation(SubPopulation& subpop, std::size_t offspring_budget,
                          double cr, double weight, EmbeddedObjective& obj,
                          const Formulation& f, Rng& rng);

}  // namespace multiform
