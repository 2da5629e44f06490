#include "multiform/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace multiform {

namespace {

// Exact two-sided p-value by counting subsets of the (doubled, hence integer)
// ranks whose sum is <= 2 * w_min. The null assigns each rank to W+ with
// probability 1/2 independently.
double exact_two_sided_p(const std::vector<double>& ranks, double w_min) {
  long long total = 0;
  for (double r : ranks) total += static_cast<long long>(std::llround(2.0 * r));
  const long long bound = static_cast<long long>(std::floor(2.0 * w_min + 0.5));
  std::vector<double> count(static_cast<std::size_t>(total) + 1, 0.0);
  count[0] = 1.0;
  long long reached = 0;
  for (double r : ranks) {
    const long long rr = static_cast<long long>(std::llround(2.0 * r));
    reached = std::min(reached + rr, total);
    for (long long s = reached; s >= rr; --s) {
      count[static_cast<std::size_t>(s)] += count[static_cast<std::size_t>(s - rr)];
    }
  }
  double below = 0.0;
  for (long long s = 0; s <= std::min(bound, total); ++s) {
    below += count[static_cast<std::size_t>(s)];
  }
  const double p = 2.0 * below / std::pow(2.0, static_cast<double>(ranks.size()));
  return std::min(1.0, p);
}

}  // namespace

WilcoxonResult wilcoxon_signed_rank(const std::vector<double>& a,
                                    const std::vector<double>& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("wilcoxon_signed_rank: length mismatch");
  }
  std::vector<double> diffs;
  diffs.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    if (!std::isfinite(d)) {
      throw std::invalid_argument("wilcoxon_signed_rank: non-finite input");
    }
    if (d != 0.0) diffs.push_back(d);
  }
  WilcoxonResult result;
  result.n_nonzero = diffs.size();
  if (diffs.size() < 6) return result;  // insufficient data -> Similar

  const std::size_t n = diffs.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return std::abs(diffs[x]) < std::abs(diffs[y]);
  });
  std::vector<double> ranks(n);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j + 1 < n &&
           std::abs(diffs[order[j + 1]]) == std::abs(diffs[order[i]])) {
      ++j;
    }
    const double avg = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
    i = j + 1;
  }

  double w_plus = 0.0;
  double w_minus = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    (diffs[i] > 0.0 ? w_plus : w_minus) += ranks[i];
  }
  const double w = std::min(w_plus, w_minus);
  result.statistic = w;

  if (n <= 25) {
    result.significant = exact_two_sided_p(ranks, w) <= 0.05;
  } else {
    const double nn = static_cast<double>(n);
    const double mean = nn * (nn + 1.0) / 4.0;
    const double sd = std::sqrt(nn * (nn + 1.0) * (2.0 * nn + 1.0) / 24.0);
    const double z = (w - mean + 0.5) / sd;
    result.significant = z < -1.959963984540054;
  }
  if (result.significant) {
    result.direction = w_plus < w_minus ? WilcoxonResult::Direction::ALower
                                        : WilcoxonResult::Direction::BLower;
  }
  return result;
}

}  // namespace multiform
