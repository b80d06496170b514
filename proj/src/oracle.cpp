#include "riesz/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace riesz {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
  if (k > n) return 0;
  k = std::min(k, n - k);
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i is exact at every step; split to delay overflow.
    const std::uint64_t num = n - k + i;
    const std::uint64_t g = std::gcd(result, i);
    const std::uint64_t r = result / g;
    const std::uint64_t num_div = num / (i / g);
    if (r > kMax / num_div) return kMax;
    result = r * num_div;
  }
  return result;
}

}  // namespace riesz
