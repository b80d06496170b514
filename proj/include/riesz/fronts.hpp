/**
 * @file fronts.hpp
 * @brief Benchmark front generators and the small literal instances.
 */

#ifndef RIESZ_FRONTS_HPP
#define RIESZ_FRONTS_HPP

#include <array>
#include <cstddef>
#include <string_view>
#include <variant>
#include <vector>

#include "riesz/core.hpp"

namespace riesz {

using PointData = std::variant<PointSet1D, ParetoFront2D>;

/// n points with f1 evenly spaced on [0, 1] (both ends included) and
/// f2 = 1 - f1^alpha. Requires n >= 2 and alpha > 0.
ParetoFront2D gen_power_front(std::size_t n, double alpha);

struct Interval {
  double lo;
  double hi;
  double length() const noexcept { return hi - lo; }
};

/// The five x1 ranges that make up the Pareto-optimal part of ZDT3.
struct Zdt3Spec {
  static constexpr std::array<Interval, 5> kIntervals{{
      {0.0, 0.0830015349},
      {0.1822287280, 0.2577623634},
      {0.4093136748, 0.4538821041},
      {0.6183967944, 0.6525117038},
      {0.8233317983, 0.8518328654},
  }};

  std::size_t n = 1000;

  /// Samples per interval: proportional to length (largest remainder), at
  /// least one each, summing to n. Requires n >= 5.
  std::array<std::size_t, 5> allocation() const;
};

/// f2 = 1 - sqrt(x1) - x1 sin(10 pi x1)
double zdt3_f2(double x1) noexcept;

struct Zdt3Front {
  ParetoFront2D front;
  std::vector<int> segments;  ///< 1..5, parallel to front
};

/// Samples the five intervals, evenly spaced within each one (endpoints
/// included), and drops any point dominated by another. Dropped points are
/// replaced by resampling with a larger budget, so normally exactly n points
/// are returned. Requires n >= 5.
Zdt3Front gen_zdt3(std::size_t n);

/// One of "ex1_1d", "ex2_1d", "front6", "front7". Throws InvalidArgument otherwise.
PointData fixture(std::string_view name);

std::vector<std::string_view> fixture_names();

}  // namespace riesz

#endif  // RIESZ_FRONTS_HPP
