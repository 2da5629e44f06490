#include "multiform/de.hpp"

#include <algorithm>
#include <stdexcept>

namespace multiform {

namespace {

constexpr std::size_t kMinSubPopSize = 5;

std::size_t best_idx(const std::vector<Individual>& members) {
  std::size_t idx = 0;
  for (std::size_t i = 1; i < members.size(); ++i) {
    if (members[i].fitness < members[idx].fitness) idx = i;
  }
  return idx;
}

std::size_t worst_idx(const std::vector<Individual>& members) {
  std::size_t idx = 0;
  for (std::size_t i = 1; i < members.size(); ++i) {
    if (members[i].fitness > members[idx].fitness) idx = i;
  }
  return idx;
}

}  // namespace

const Individual& SubPopulation::best() const { return members[best_index()]; }
const Individual& SubPopulation::worst() const { return members[worst_index()]; }
std::size_t SubPopulation::best_index() const { return best_idx(members); }
std::size_t SubPopulation::worst_index() const { return worst_idx(members); }

SubPopulation init_subpopulation(const Formulation& f, std::size_t size,
                                 EmbeddedObjective& obj, Rng& rng) {
  if (size < kMinSubPopSize) {
    throw std::invalid_argument("init_subpopulation: size must be >= 5");
  }
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  SubPopulation subpop;
  subpop.formulation_id = f.id;
  subpop.members.reserve(size);
  for (std::size_t i = 0; i < size; ++i) {
    Individual ind;
    ind.formulation_id = f.id;
    ind.genome.resize(f.dim);
    for (Index k = 0; k < f.dim; ++k) ind.genome[k] = unit(rng);
    ind.fitness = evaluate_low_dim(f, obj, ind.genome);
    subpop.members.push_back(std::move(ind));
  }
  return subpop;
}

Vector de_trial(const SubPopulation& subpop, std::size_t target_index, double cr,
                double weight, Rng& rng) {
  const std::size_t n = subpop.members.size();
  if (n < kMinSubPopSize) throw std::invalid_argument("de_trial: population too small");
  if (target_index >= n) throw std::invalid_argument("de_trial: bad target index");

  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::size_t r1 = pick(rng);
  while (r1 == target_index) r1 = pick(rng);
  std::size_t r2 = pick(rng);
  while (r2 == target_index || r2 == r1) r2 = pick(rng);
  std::size_t r3 = pick(rng);
  while (r3 == target_index || r3 == r1 || r3 == r2) r3 = pick(rng);

  const Vector& target = subpop.members[target_index].genome;
  const Index d = target.size();
  const Vector mutant = subpop.members[r1].genome +
                        weight * (subpop.members[r2].genome - subpop.members[r3].genome);

  std::uniform_int_distribution<Index> coord(0, d - 1);
  const Index j_rand = coord(rng);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Vector trial(d);
  for (Index k = 0; k < d; ++k) {
    const bool take_mutant = unit(rng) < cr || k == j_rand;
    trial[k] = take_mutant ? mutant[k] : target[k];
  }
  return trial.cwiseMax(-1.0).cwiseMin(1.0);
}

std::size_t de_generation(SubPopulation& subpop, std::size_t offspring_budget,
                          double cr, double weight, EmbeddedObjective& obj,
                          const Formulation& f, Rng& rng) {
  const std::size_t n = subpop.members.size();
  for (std::size_t i = 0; i < offspring_budget; ++i) {
    const std::size_t target = subpop.next_target;
    subpop.next_target = (subpop.next_target + 1) % n;
    Vector trial = de_trial(subpop, target, cr, weight, rng);
    const double fitness = evaluate_low_dim(f, obj, trial);
    if (fitness <= subpop.members[target].fitness) {
      subpop.members[target].genome = std::move(trial);
      subpop.members[target].fitness = fitness;
    }
  }
  return offspring_budget;
}

}  // namespace multiform
