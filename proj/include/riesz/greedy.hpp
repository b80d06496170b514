/**
 * @file greedy.hpp
 * @brief Forward-insertion greedy baseline.
 *
 * Seeds with the farthest pair, then repeatedly inserts the point with the
 * smallest marginal energy against the points chosen so far. Solutions are
 * nested across k by construction.
 */

#ifndef RIESZ_GREEDY_HPP
#define RIESZ_GREEDY_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "riesz/core.hpp"
#include "riesz/dp.hpp"
#include "riesz/interactions.hpp"

namespace riesz {

/// Indices in the order the greedy picks them (first two: the seed pair).
template <OrderedPointSet Points>
std::vector<std::size_t> greedy_insertion_order(const Points& pts, std::size_t k,
                                                const EnergyParams& params) {
  const std::size_t n = pts.size();
  if (k < 2 || k > n) {
    throw InvalidArgument("greedy subset size k=" + std::to_string(k) + " outside [2, " +
                          std::to_string(n) + "]");
  }
  const detail::Interactions<Points> term(pts, params, false);

  // On a validated ordered set this is (0, n-1); searched anyway so any metric works.
  std::size_t seed_a = 0;
  std::size_t seed_b = 1;
  double widest = pts.distance(0, 1);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const double d = pts.distance(a, b);
      if (d > widest) {
        widest = d;
        seed_a = a;
        seed_b = b;
      }
    }
  }

  std::vector<std::size_t> order{seed_a, seed_b};
  std::vector<char> chosen(n, 0);
  chosen[seed_a] = chosen[seed_b] = 1;
  // marginal[c] = sum of interactions between c and the chosen points
  std::vector<double> marginal(n, 0.0);
  for (std::size_t c = 0; c < n; ++c) {
    if (chosen[c]) continue;
    marginal[c] = term(seed_a, c);
    marginal[c] += term(seed_b, c);
  }

  while (order.size() < k) {
    std::optional<std::size_t> pick;
    for (std::size_t c = 0; c < n; ++c) {
      if (chosen[c]) continue;
      if (!pick || marginal[c] < marginal[*pick]) pick = c;
    }
    chosen[*pick] = 1;
    order.push_back(*pick);
    for (std::size_t c = 0; c < n; ++c) {
      if (!chosen[c]) marginal[c] += term(*pick, c);
    }
  }
  return order;
}

/// Requires 2 <= k <= n.
template <OrderedPointSet Points>
SelectionResult greedy_select(const Points& pts, std::size_t k, const EnergyParams& params) {
  SelectionResult result;
  result.indices = greedy_insertion_order(pts, k, params);
  std::sort(result.indices.begin(), result.indices.end());
  result.energy = subset_energy(pts, result.indices, params);
  result.method = Method::kGreedy;
  return result;
}

}  // namespace riesz

#endif  // RIESZ_GREEDY_HPP
