#include "multiform/allocation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace multiform {

AllocationState::AllocationState(Index n_formulations, double alpha, double epsilon,
                                 double trend_clamp)
    : preferences(Vector::Zero(n_formulations)),
      probabilities(Vector::Constant(n_formulations, 1.0 / static_cast<double>(n_formulations))),
      prev_best(Vector::Zero(n_formulations)),
      alpha(alpha),
      epsilon(epsilon),
      trend_clamp(trend_clamp) {
  if (n_formulations < 1) throw std::invalid_argument("AllocationState: empty");
}

void AllocationState::update(const Vector& curr_best) {
  const Vector trends = convergence_trend(prev_best, curr_best, epsilon, trend_clamp);
  preferences = update_preferences(preferences, trends, probabilities, alpha);
  probabilities = softmax_allocation(preferences);
  prev_best = curr_best;
}

Vector softmax_allocation(const Vector& preferences) {
  if (preferences.size() == 0) throw std::invalid_argument("softmax_allocation: empty");
  if (!preferences.allFinite()) {
    throw std::invalid_argument("softmax_allocation: non-finite preference");
  }
  const Vector shifted = preferences.array() - preferences.maxCoeff();
  const Vector expd = shifted.array().exp();
  return expd / expd.sum();
}

Vector convergence_trend(const Vector& prev_best, const Vector& curr_best,
                         double epsilon, double trend_clamp) {
  if (epsilon <= 0.0) throw std::invalid_argument("convergence_trend: epsilon <= 0");
  if (prev_best.size() != curr_best.size()) {
    throw std::invalid_argument("convergence_trend: length mismatch");
  }
  if (!prev_best.allFinite() || !curr_best.allFinite()) {
    throw std::invalid_argument("convergence_trend: non-finite fitness");
  }
  Vector trends(curr_best.size());
  for (Index k = 0; k < curr_best.size(); ++k) {
    const double raw =
        std::abs(prev_best[k] - curr_best[k]) / (std::abs(curr_best[k]) + epsilon);
    trends[k] = std::clamp(raw, 0.0, trend_clamp);
  }
  return trends;
}

Vector update_preferences(const Vector& preferences, const Vector& trends,
                          const Vector& probabilities, double alpha) {
  if (preferences.size() != trends.size() || trends.size() != probabilities.size()) {
    throw std::invalid_argument("update_preferences: length mismatch");
  }
  const double trend_sum = trends.sum();
  return preferences + alpha * (trends - probabilities * trend_sum);
}

std::vector<std::size_t> allocate_offspring(const Vector& probabilities,
                                            std::size_t generation_budget,
                                            std::size_t floor) {
  const std::size_t n = static_cast<std::size_t>(probabilities.size());
  if (n == 0) throw std::invalid_argument("allocate_offspring: empty probabilities");
  if (floor < 1 || generation_budget < n * floor) {
    throw std::invalid_argument("allocate_offspring: infeasible floor");
  }

  std::vector<std::size_t> counts(n);
  std::vector<double> remainders(n);
  std::size_t assigned = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const double share = probabilities[static_cast<Index>(k)] *
                         static_cast<double>(generation_budget);
    counts[k] = static_cast<std::size_t>(std::floor(share));
    remainders[k] = share - std::floor(share);
    assigned += counts[k];
  }
  // Largest remainder gets the leftover units, ties to the lower index.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return remainders[a] > remainders[b];
  });
  for (std::size_t i = 0; assigned < generation_budget; ++i) {
    ++counts[order[i % n]];
    ++assigned;
  }

  std::size_t deficit = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (counts[k] < floor) {
      deficit += floor - counts[k];
      counts[k] = floor;
    }
  }
  while (deficit > 0) {
    const auto richest = std::max_element(counts.begin(), counts.end());
    if (*richest <= floor) throw std::invalid_argument("allocate_offspring: infeasible floor");
    --(*richest);
    --deficit;
  }
  return counts;
}

}  // namespace multiform
