#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "multiform/allocation.hpp"
#include "multiform/de.hpp"
#include "multiform/embedding.hpp"
#include "multiform/objectives.hpp"
#include "multiform/transfer.hpp"
#include "multiform/types.hpp"

namespace multiform {

// The four study variants: plain DE, DE over random embeddings only,
// multiform with cross-form transfer, and multiform with transfer plus
// dynamic resource allocation.
enum class Variant { De, DeM, DeMT, DeMF };

Variant variant_from_name(const std::string& name);
std::string variant_name(Variant v);

struct RunConfig {
  BaseFunction function = BaseFunction::Ackley;
  Index ambient_dim = 200;     // D
  Index effective_dim = 10;    // d_e
  std::vector<Index> dims;     // embedding dimensions (ignored for De)
  Variant variant = Variant::DeMF;
  std::size_t population = 100;  // K, also the per-generation offspring budget
  std::size_t max_fes = 50000;
  std::uint64_t seed = 0;
  double cr = 0.9;
  double de_weight = 0.35;
  double alpha = 2.0;
  double epsilon = 1e-12;
  double trend_clamp = 10.0;
  double ridge = 1e-6;
  // Minimum offspring per formulation per generation. A formulation starved
  // below this stalls and only feeds stale genomes to the transfer step, so
  // the floor is a tenth of the default population rather than the bare
  // DE feasibility minimum.
  std::size_t offspring_floor = 10;
  bool random_attribution = false;  // even split by default
  bool disable_transfer = false;    // study override for DeMT/DeMF

  // Number of formulations the variant actually runs.
  std::size_t n_formulations() const;
  bool transfer_enabled() const;
  bool dynamic_allocation() const;
};

struct GenerationRecord {
  std::size_t generation = 0;
  std::uint64_t fes = 0;
  Vector formulation_best;
  double global_best = 0.0;
  Vector allocation;
};

struct RunLog {
  RunConfig config;
  std::vector<GenerationRecord> records;
  std::vector<Vector> final_best_genomes;  // per formulation
  Vector final_best_fitness;               // per formulation
  Vector best_genome;
  int best_formulation = 0;
  Vector recovered;  // high-dimensional incumbent
  double final_fitness = 0.0;
  std::uint64_t total_fes = 0;
};

// Stream discipline: the objective (rotation + shift) is drawn from a stream
// seeded with the run seed alone, so all variants at one seed share the
// objective instance. The search stream covers embeddings, initialization,
// and variation.
Rng objective_stream(std::uint64_t seed);
Rng search_stream(std::uint64_t seed);

RunLog run(const RunConfig& config);

// Lifts each formulation's final best genome, projects it to the box, and
// returns the minimum-fitness incumbent. No FE is spent; fitness values are
// reused from the log.
std::pair<Vector, double> recover_high_dim_best(const RunLog& log,
                                                const FormulationSet& formulations);

// One run per (variant, seed); the objective instance depends on the seed only.
std::vector<RunLog> run_variant_suite(const RunConfig& base_config,
                                      const std::vector<Variant>& variants,
                                      const std::vector<std::uint64_t>& seeds);

}  // namespace multiform
