/**
 * @file oracle.hpp
 * @brief Exhaustive minimization over all C(n, k) subsets.
 *
 * Ground truth for tests and small instances. Combinations are visited in
 * lexicographic order and energies are extended incrementally along the
 * prefix, in the same summation order as subset_energy().
 */

#ifndef RIESZ_ORACLE_HPP
#define RIESZ_ORACLE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "riesz/core.hpp"
#include "riesz/dp.hpp"
#include "riesz/interactions.hpp"

namespace riesz {

inline constexpr std::uint64_t kDefaultBruteForceBudget = 5'000'000;

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t combinations, std::uint64_t budget)
      : Error("C(n,k) = " + std::to_string(combinations) + " exceeds brute-force budget " +
              std::to_string(budget)),
        combinations_(combinations),
        budget_(budget) {}

  /// Saturates at UINT64_MAX.
  std::uint64_t combinations() const noexcept { return combinations_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t combinations_;
  std::uint64_t budget_;
};

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept;

struct RankedSubset {
  std::vector<std::size_t> indices;
  double energy = 0.0;
};

namespace detail {

/// Calls visit(indices, energy) for every k-combination in lexicographic order.
template <OrderedPointSet Points, typename Visit>
void for_each_combination(const Points& pts, std::size_t k, const EnergyParams& params,
                          std::uint64_t budget, Visit visit) {
  const std::size_t n = pts.size();
  check_subset_size(n, k);
  const std::uint64_t count = binomial(n, k);
  if (count > budget) throw BudgetExceeded(count, budget);

  const Interactions<Points> term(pts, params, true);
  std::vector<std::size_t> combo(k);
  // partial[d] = energy of combo[0..d)
  std::vector<double> partial(k + 1, 0.0);

  auto extend = [&](auto&& self, std::size_t depth, std::size_t start) -> void {
    for (std::size_t idx = start; idx + (k - depth) <= n; ++idx) {
      combo[depth] = idx;
      double e = partial[depth];
      for (std::size_t j = 0; j < depth; ++j) e += term(combo[j], idx);
      partial[depth + 1] = e;
      if (depth + 1 == k) {
        visit(combo, e);
      } else {
        self(self, depth + 1, idx + 1);
      }
    }
  };
  extend(extend, 0, 0);
}

}  // namespace detail

/// Globally minimal k-subset; ties go to the lexicographically smallest index list.
/// Throws BudgetExceeded when C(n, k) > budget.
template <OrderedPointSet Points>
SelectionResult brute_force_select(const Points& pts, std::size_t k, const EnergyParams& params,
                                   std::uint64_t budget = kDefaultBruteForceBudget) {
  SelectionResult best;
  best.method = Method::kBrute;
  bool found = false;
  detail::for_each_combination(pts, k, params, budget,
                               [&](const std::vector<std::size_t>& combo, double e) {
                                 if (!found || e < best.energy) {
                                   found = true;
                                   best.energy = e;
                                   best.indices = combo;
                                 }
                               });
  best.energy = subset_energy(pts, best.indices, params);
  return best;
}

/// Every k-subset with its energy, ascending by energy, ties in lexicographic order.
template <OrderedPointSet Points>
std::vector<RankedSubset> enumerate_energies(const Points& pts, std::size_t k,
                                             const EnergyParams& params,
                                             std::uint64_t budget = kDefaultBruteForceBudget) {
  std::vector<RankedSubset> rows;
  detail::for_each_combination(
      pts, k, params, budget, [&](const std::vector<std::size_t>& combo, double e) {
        rows.push_back({combo, e});
      });
  std::stable_sort(rows.begin(), rows.end(),
                   [](const RankedSubset& a, const RankedSubset& b) { return a.energy < b.energy; });
  return rows;
}

}  // namespace riesz

#endif  // RIESZ_ORACLE_HPP
