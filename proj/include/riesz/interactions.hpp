#ifndef RIESZ_INTERACTIONS_HPP
#define RIESZ_INTERACTIONS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "riesz/core.hpp"

namespace riesz::detail {

/// Pairwise interaction 1/d(a,b)^s, either computed on demand or read from a
/// precomputed symmetric n x n table. Both paths evaluate the same expression,
/// so results do not depend on which one is active.
template <OrderedPointSet Points>
class Interactions {
 public:
  Interactions(const Points& pts, const EnergyParams& params, bool precompute)
      : pts_(pts), params_(params) {
    if (!precompute) return;
    const std::size_t n = pts.size();
    table_.resize(n * n, 0.0);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        const double t = compute(a, b);
        table_[a * n + b] = t;
        table_[b * n + a] = t;
      }
    }
  }

  double operator()(std::size_t a, std::size_t b) const {
    if (!table_.empty()) return table_[a * pts_.size() + b];
    return compute(a, b);
  }

 private:
  double compute(std::size_t a, std::size_t b) const {
    const double d = pts_.distance(a, b);
    if (!(d > 0.0)) {
      throw DegenerateInputError("zero distance between points " + std::to_string(a) + " and " +
                                 std::to_string(b));
    }
    return params_.term(d);
  }

  const Points& pts_;
  const EnergyParams& params_;
  std::vector<double> table_;
};

}  // namespace riesz::detail

#endif  // RIESZ_INTERACTIONS_HPP
