#include "multiform/orchestrator.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace multiform {

namespace {

constexpr std::uint64_t kSearchStreamSalt = 0x9e3779b97f4a7c15ull;

std::vector<Index> variant_dims(const RunConfig& c) {
  return c.variant == Variant::De ? std::vector<Index>{} : c.dims;
}

bool variant_includes_original(Variant v) { return v != Variant::DeM; }

Vector formulation_bests(const std::vector<SubPopulation>& subpops) {
  Vector bests(static_cast<Index>(subpops.size()));
  for (std::size_t i = 0; i < subpops.size(); ++i) {
    bests[static_cast<Index>(i)] = subpops[i].best().fitness;
  }
  return bests;
}

std::vector<std::size_t> attribute_individuals(const RunConfig& c, std::size_t n,
                                               Rng& rng) {
  std::vector<std::size_t> sizes(n, 0);
  if (!c.random_attribution) {
    const std::size_t base = c.population / n;
    const std::size_t rem = c.population % n;
    for (std::size_t i = 0; i < n; ++i) sizes[i] = base + (i < rem ? 1 : 0);
    return sizes;
  }
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  while (true) {
    std::fill(sizes.begin(), sizes.end(), std::size_t{0});
    for (std::size_t i = 0; i < c.population; ++i) ++sizes[pick(rng)];
    if (std::all_of(sizes.begin(), sizes.end(),
                    [](std::size_t s) { return s >= 5; })) {
      return sizes;
    }
  }
}

}  // namespace

Variant variant_from_name(const std::string& name) {
  if (name == "de") return Variant::De;
  if (name == "de+m") return Variant::DeM;
  if (name == "de+mt") return Variant::DeMT;
  if (name == "de+mf") return Variant::DeMF;
  throw std::invalid_argument("unknown variant: " + name);
}

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::De: return "de";
    case Variant::DeM: return "de+m";
    case Variant::DeMT: return "de+mt";
    case Variant::DeMF: return "de+mf";
  }
  throw std::invalid_argument("unknown variant");
}

std::size_t RunConfig::n_formulations() const {
  std::size_t n = variant == Variant::De ? 0 : dims.size();
  if (variant_includes_original(variant)) ++n;
  return n;
}

bool RunConfig::transfer_enabled() const {
  return (variant == Variant::DeMT || variant == Variant::DeMF) && !disable_transfer;
}

bool RunConfig::dynamic_allocation() const { return variant == Variant::DeMF; }

Rng objective_stream(std::uint64_t seed) { return Rng(seed); }
Rng search_stream(std::uint64_t seed) { return Rng(seed ^ kSearchStreamSalt); }

RunLog run(const RunConfig& config) {
  const std::size_t n = config.n_formulations();
  if (n == 0) throw std::invalid_argument("run: variant requires embedding dims");
  if (config.population < 5 * n) {
    throw std::invalid_argument("run: population must be >= 5 per formulation");
  }
  if (config.max_fes <= config.population) {
    throw std::invalid_argument("run: max_fes must exceed the population size");
  }
  for (Index d : config.dims) {
    if (d < 1 || d >= config.ambient_dim) {
      throw std::invalid_argument("run: embedding dims must satisfy 1 <= d < D");
    }
  }

  Rng obj_rng = objective_stream(config.seed);
  EmbeddedObjective obj = make_embedded(config.function, config.ambient_dim,
                                        config.effective_dim, obj_rng);

  Rng rng = search_stream(config.seed);
  FormulationSet set = make_formulation_set(
      config.ambient_dim, variant_dims(config),
      variant_includes_original(config.variant), rng);

  const std::vector<std::size_t> sizes = attribute_individuals(config, n, rng);
  std::vector<SubPopulation> subpops;
  subpops.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    subpops.push_back(init_subpopulation(set.formulations[i], sizes[i], obj, rng));
  }

  AllocationState alloc(static_cast<Index>(n), config.alpha, config.epsilon,
                        config.trend_clamp);
  alloc.prev_best = formulation_bests(subpops);

  const Vector uniform = Vector::Constant(static_cast<Index>(n), 1.0 / static_cast<double>(n));
  // A floor above the uniform share would be infeasible; cap it so small
  // populations remain valid under the default floor.
  const std::size_t offspring_floor =
      std::min(config.offspring_floor, config.population / n);

  RunLog log;
  log.config = config;
  const auto snapshot = [&](std::size_t generation, const Vector& shares) {
    GenerationRecord rec;
    rec.generation = generation;
    rec.fes = obj.eval_count();
    rec.formulation_best = formulation_bests(subpops);
    rec.global_best = rec.formulation_best.minCoeff();
    rec.allocation = shares;
    log.records.push_back(std::move(rec));
  };
  snapshot(0, uniform);

  const std::size_t n_pairs = n * (n - 1) / 2;
  std::size_t generation = 0;
  while (true) {
    if (obj.eval_count() + config.population > config.max_fes) break;
    ++generation;

    const Vector shares = config.dynamic_allocation() ? alloc.probabilities : uniform;
    const std::vector<std::size_t> counts =
        allocate_offspring(shares, config.population, offspring_floor);
    for (std::size_t i = 0; i < n; ++i) {
      de_generation(subpops[i], counts[i], config.cr, config.de_weight, obj,
                    set.formulations[i], rng);
    }

    if (config.transfer_enabled() && n_pairs > 0 &&
        obj.eval_count() + 2 * n_pairs <= config.max_fes) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          cross_form_transfer(subpops[i], subpops[j], set.formulations[i],
                              set.formulations[j], obj, config.ridge);
        }
      }
    }

    alloc.update(formulation_bests(subpops));
    snapshot(generation, shares);
  }

  log.final_best_fitness = formulation_bests(subpops);
  log.final_best_genomes.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    log.final_best_genomes.push_back(subpops[i].best().genome);
  }
  auto [recovered, fitness] = recover_high_dim_best(log, set);
  Index best_id = 0;
  log.final_best_fitness.minCoeff(&best_id);
  log.best_formulation = static_cast<int>(best_id);
  log.best_genome = log.final_best_genomes[static_cast<std::size_t>(best_id)];
  log.recovered = std::move(recovered);
  log.final_fitness = fitness;
  log.total_fes = obj.eval_count();
  return log;
}

std::pair<Vector, double> recover_high_dim_best(const RunLog& log,
                                                const FormulationSet& formulations) {
  if (log.final_best_genomes.empty()) {
    throw std::invalid_argument("recover_high_dim_best: empty log");
  }
  Index best_id = 0;
  const double fitness = log.final_best_fitness.minCoeff(&best_id);
  const Formulation& f = formulations.formulations[static_cast<std::size_t>(best_id)];
  Vector x = project_to_box(lift(f, log.final_best_genomes[static_cast<std::size_t>(best_id)]));
  return {std::move(x), fitness};
}

std::vector<RunLog> run_variant_suite(const RunConfig& base_config,
                                      const std::vector<Variant>& variants,
                                      const std::vector<std::uint64_t>& seeds) {
  if (variants.empty() || seeds.empty()) {
    throw std::invalid_argument("run_variant_suite: empty variants or seeds");
  }
  std::vector<RunLog> logs;
  logs.reserve(variants.size() * seeds.size());
  for (Variant v : variants) {
    for (std::uint64_t seed : seeds) {
      RunConfig c = base_config;
      c.variant = v;
      c.seed = seed;
      logs.push_back(run(c));
    }
  }
  return logs;
}

}  // namespace multiform
