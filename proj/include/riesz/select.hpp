#ifndef RIESZ_SELECT_HPP
#define RIESZ_SELECT_HPP

#include <cstddef>
#include <cstdint>
#include <variant>

#include "riesz/core.hpp"
#include "riesz/dp.hpp"
#include "riesz/fronts.hpp"
#include "riesz/greedy.hpp"
#include "riesz/oracle.hpp"

namespace riesz {

struct SelectOptions {
  DpOptions dp;
  std::uint64_t brute_force_budget = kDefaultBruteForceBudget;
};

/// Runs one selection method on either kind of point set.
template <OrderedPointSet Points>
SelectionResult run_method(Method method, const Points& pts, std::size_t k,
                           const EnergyParams& params, const SelectOptions& options = {}) {
  switch (method) {
    case Method::kDp:
      return dp_select(pts, k, params, options.dp);
    case Method::kBrute:
      return brute_force_select(pts, k, params, options.brute_force_budget);
    case Method::kGreedy:
      return greedy_select(pts, k, params);
  }
  throw InvalidArgument("unknown method");
}

inline SelectionResult run_method(Method method, const PointData& data, std::size_t k,
                                  const EnergyParams& params, const SelectOptions& options = {}) {
  return std::visit([&](const auto& pts) { return run_method(method, pts, k, params, options); },
                    data);
}

inline std::size_t point_count(const PointData& data) {
  return std::visit([](const auto& pts) { return pts.size(); }, data);
}

}  // namespace riesz

#endif  // RIESZ_SELECT_HPP
