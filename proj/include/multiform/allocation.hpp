#pragma once

#include <vector>

#include "multiform/types.hpp"

namespace multiform {

// Preference-driven resource split across formulations.
struct AllocationState {
  Vector preferences;     // H, starts at zero
  Vector probabilities;   // P = softmax(H)
  Vector prev_best;       // best fitness per formulation at the last update
  double alpha = 2.0;
  double epsilon = 1e-12;
  double trend_clamp = 10.0;

  explicit AllocationState(Index n_formulations, double alpha = 2.0,
                           double epsilon = 1e-12, double trend_clamp = 10.0);

  // One allocation step: trends from best-fitness deltas, preference update,
  // fresh probabilities. Records curr_best as the next prev_best.
  void update(const Vector& curr_best);
};

// P_k = exp(H_k) / sum exp(H_n), max-subtracted.
Vector softmax_allocation(const Vector& preferences);

// C_k = |prev - curr| / (|curr| + epsilon), clamped to [0, trend_clamp].
Vector convergence_trend(const Vector& prev_best, const Vector& curr_best,
                         double epsilon, double trend_clamp);

// H'_k = H_k + alpha * (C_k - P_k * sum(C)); preserves sum(H).
Vector update_preferences(const Vector& preferences, const Vector& trends,
                          const Vector& probabilities, double alpha);

// Largest-remainder rounding of P * budget with a per-formulation floor;
// the excess needed to satisfy the floor is deducted from the largest shares.
std::vector<std::size_t> allocate_offspring(const Vector& probabilities,
                                            std::size_t generation_budget,
                                            std::size_t floor);

}  // namespace multiform
