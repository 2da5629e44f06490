#pragma once

#include <vector>

#include "multiform/types.hpp"

namespace multiform {

// Two-sided paired Wilcoxon signed-rank test at the 5% level.
struct WilcoxonResult {
  double statistic = 0.0;  // W = min(W+, W-)
  bool significant = false;
  // For minimization: ALower means the first sample tends to be smaller.
  enum class Direction { ALower, BLower, Similar } direction = Direction::Similar;
  std::size_t n_nonzero = 0;
};

// Average ranks for ties; exact null distribution (subset-sum enumeration)
// for n <= 25, normal approximation with continuity correction above.
// Fewer than 6 nonzero differences yields an insufficient-data "Similar".
WilcoxonResult wilcoxon_signed_rank(const std::vector<double>& a,
                                    const std::vector<double>& b);

}  // namespace multiform
