#ifndef RIESZ_BENCH_HPP
#define RIESZ_BENCH_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace riesz {

struct BenchConfig {
  std::size_t min_n = 100;
  std::size_t max_n = 800;  ///< sizes double from min_n while <= max_n
  std::size_t k = 10;
  double s = 1.0;
  unsigned repeats = 3;
  double alpha = 0.3;  ///< power-front exponent of the benchmark instances
};

struct BenchSample {
  std::size_t n = 0;
  double runtime_ms = 0.0;  ///< median wall time of dp_select over the repeats
};

/// Times dp_select on power fronts of growing size.
std::vector<BenchSample> run_scaling_bench(const BenchConfig& config);

/// Least-squares slope of log(runtime) against log(n). Needs two or more samples.
double loglog_slope(std::span<const BenchSample> samples);

}  // namespace riesz

#endif  // RIESZ_BENCH_HPP
