#include "riesz/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "riesz/dp.hpp"
#include "riesz/fronts.hpp"

namespace riesz {

std::vector<BenchSample> run_scaling_bench(const BenchConfig& config) {
  if (config.min_n < 2 || config.max_n < config.min_n) {
    throw InvalidArgument("bench needs 2 <= min_n <= max_n");
  }
  if (config.k < 1 || config.k > config.min_n) throw InvalidArgument("bench k must be in [1, min_n]");
  if (config.repeats < 1) throw InvalidArgument("bench needs at least one repeat");
  const EnergyParams params(config.s);

  std::vector<BenchSample> samples;
  for (std::size_t n = config.min_n; n <= config.max_n; n *= 2) {
    const ParetoFront2D front = gen_power_front(n, config.alpha);
    std::vector<double> times;
    for (unsigned rep = 0; rep < config.repeats; ++rep) {
      const auto start = std::chrono::steady_clock::now();
      const auto result = dp_select(front, config.k, params);
      const auto stop = std::chrono::steady_clock::now();
      if (result.indices.size() != config.k) throw Error("bench: unexpected subset size");
      times.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
    }
    std::nth_element(times.begin(), times.begin() + times.size() / 2, times.end());
    samples.push_back({n, times[times.size() / 2]});
  }
  return samples;
}

double loglog_slope(std::span<const BenchSample> samples) {
  if (samples.size() < 2) throw InvalidArgument("slope needs at least two samples");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(samples.size());
  for (const auto& s : samples) {
    const double x = std::log(static_cast<double>(s.n));
    const double y = std::log(std::max(s.runtime_ms, 1e-9));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace riesz
