#include <doctest.h>

#include <stdexcept>

#include "multiform/orchestrator.hpp"

using namespace multiform;

namespace {

RunConfig small_config() {
  RunConfig c;
  c.function = BaseFunction::Rastrigin;
  c.ambient_dim = 30;
  c.effective_dim = 4;
  c.dims = {4, 4, 4, 4};
  c.variant = Variant::DeMF;
  c.population = 50;
  c.max_fes = 3000;
  c.seed = 7;
  return c;
}

}  // namespace

TEST_CASE("variant names round-trip") {
  for (Variant v : {Variant::De, Variant::DeM, Variant::DeMT, Variant::DeMF}) {
    CHECK(variant_from_name(variant_name(v)) == v);
  }
  CHECK_THROWS_AS(variant_from_name("cmaes"), std::invalid_argument);
}

TEST_CASE("variant formulation counts") {
  RunConfig c = small_config();
  c.variant = Variant::De;
  CHECK(c.n_formulations() == 1);
  c.variant = Variant::DeM;
  CHECK(c.n_formulations() == 4);
  c.variant = Variant::DeMT;
  CHECK(c.n_formulations() == 5);
  CHECK(c.transfer_enabled());
  CHECK_FALSE(c.dynamic_allocation());
  c.variant = Variant::DeMF;
  CHECK(c.dynamic_allocation());
  c.disable_transfer = true;
  CHECK_FALSE(c.transfer_enabled());
}

TEST_CASE("infeasible configs are rejected before any FE") {
  RunConfig c = small_config();
  c.population = 10;  // < 5 per formulation
  CHECK_THROWS_AS(run(c), std::invalid_argument);

  c = small_config();
  c.max_fes = c.population;
  CHECK_THROWS_AS(run(c), std::invalid_argument);

  c = small_config();
  c.dims = {30};
  CHECK_THROWS_AS(run(c), std::invalid_argument);

  c = small_config();
  c.variant = Variant::DeM;
  c.dims.clear();
  CHECK_THROWS_AS(run(c), std::invalid_argument);
}

TEST_CASE("plain DE variant has one formulation") {
  RunConfig c = small_config();
  c.variant = Variant::De;
  c.dims.clear();
  RunLog log = run(c);
  CHECK(log.final_best_fitness.size() == 1);
  CHECK(log.best_formulation == 0);
  CHECK(log.recovered.size() == 30);
}

TEST_CASE("global best is monotone and the budget is respected") {
  for (Variant v : {Variant::De, Variant::DeM, Variant::DeMT, Variant::DeMF}) {
    RunConfig c = small_config();
    c.variant = v;
    RunLog log = run(c);
    CHECK(log.total_fes <= c.max_fes);
    double best = log.records.front().global_best;
    std::uint64_t fes = 0;
    for (const auto& rec : log.records) {
      CHECK(rec.global_best <= best);
      CHECK(rec.fes >= fes);
      best = rec.global_best;
      fes = rec.fes;
    }
    CHECK(log.final_fitness == best);
  }
}

TEST_CASE("allocation vectors in the log sum to one and respect the floor") {
  RunConfig c = small_config();
  RunLog log = run(c);
  for (const auto& rec : log.records) {
    CHECK(std::abs(rec.allocation.sum() - 1.0) <= 1e-12);
    const auto counts = allocate_offspring(rec.allocation, c.population, c.offspring_floor);
    for (std::size_t count : counts) CHECK(count >= c.offspring_floor);
  }
}

TEST_CASE("fixed seed reproduces the log bit-for-bit") {
  RunConfig c = small_config();
  RunLog a = run(c);
  RunLog b = run(c);
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].fes == b.records[i].fes);
    CHECK(a.records[i].global_best == b.records[i].global_best);
    CHECK(a.records[i].formulation_best == b.records[i].formulation_best);
    CHECK(a.records[i].allocation == b.records[i].allocation);
  }
  CHECK(a.best_genome == b.best_genome);
  CHECK(a.recovered == b.recovered);
}

TEST_CASE("recovered incumbent reproduces the logged fitness") {
  RunConfig c = small_config();
  RunLog log = run(c);
  Rng obj_rng = objective_stream(c.seed);
  EmbeddedObjective obj = make_embedded(c.function, c.ambient_dim, c.effective_dim,
                                        obj_rng);
  CHECK(obj.evaluate(log.recovered) == doctest::Approx(log.final_fitness).epsilon(1e-12));
  CHECK(log.final_fitness == log.final_best_fitness.minCoeff());
}

TEST_CASE("recover_high_dim_best rejects an empty log") {
  RunLog empty;
  FormulationSet set;
  CHECK_THROWS_AS(recover_high_dim_best(empty, set), std::invalid_argument);
}

TEST_CASE("suite runs share the objective across variants at a fixed seed") {
  RunConfig base = small_config();
  base.max_fes = 500;
  const std::vector<Variant> variants{Variant::De, Variant::DeM, Variant::DeMT,
                                      Variant::DeMF};
  const std::vector<std::uint64_t> seeds{0, 1, 2};
  const auto logs = run_variant_suite(base, variants, seeds);
  CHECK(logs.size() == 12);
  for (const RunLog& log : logs) CHECK(log.total_fes <= base.max_fes);

  // Same seed means identical rotation and shift regardless of variant.
  Rng s0 = objective_stream(0);
  Rng s0_again = objective_stream(0);
  EmbeddedObjective o1 = make_embedded(base.function, base.ambient_dim,
                                       base.effective_dim, s0);
  EmbeddedObjective o2 = make_embedded(base.function, base.ambient_dim,
                                       base.effective_dim, s0_again);
  CHECK(o1.rotation() == o2.rotation());
  CHECK(o1.shift() == o2.shift());

  CHECK_THROWS_AS(run_variant_suite(base, {}, seeds), std::invalid_argument);
}

TEST_CASE("random attribution keeps every subpopulation feasible") {
  RunConfig c = small_config();
  c.random_attribution = true;
  c.max_fes = 600;
  RunLog log = run(c);
  CHECK(log.final_best_fitness.size() == 5);
  CHECK(log.total_fes <= c.max_fes);
}
