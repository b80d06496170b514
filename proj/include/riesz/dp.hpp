/**
 * @file dp.hpp
 * @brief Dynamic-programming subset selection for Riesz s-energy.
 *
 * State (i, r): the best r-subset found that ends at point i. A state is
 * extended by appending a later point i' to the stored subset of (p, r-1); the
 * increment is the sum of interactions between i' and every member of that
 * subset. Subsets are stored as predecessor links, so the member list of a
 * state is recovered by walking back r-1 links.
 *
 * The recurrence is a heuristic: the stored (r-1)-subset ending at p is the
 * best one for its own state, not necessarily the best one to extend. The
 * result is therefore an upper bound on the true minimum energy.
 *
 * One engine serves 1D sets and 2D fronts: it only consumes `size()` and
 * `distance(i, j)` of an ordered point set.
 */

#ifndef RIESZ_DP_HPP
#define RIESZ_DP_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "riesz/core.hpp"
#include "riesz/interactions.hpp"

namespace riesz {

/// Per-(i, r) best energy plus predecessor link. r runs over 1..k.
class DPTable {
 public:
  DPTable(std::size_t n, std::size_t k)
      : n_(n), k_(k), energy_(n * k, 0.0), reachable_(n * k, 0), pred_(n * k, kNone) {}

  std::size_t size() const noexcept { return n_; }
  std::size_t max_subset_size() const noexcept { return k_; }

  bool reachable(std::size_t i, std::size_t r) const { return reachable_[at(i, r)] != 0; }

  /// Empty when fewer than r points precede or equal i.
  std::optional<double> energy(std::size_t i, std::size_t r) const {
    const std::size_t c = at(i, r);
    if (!reachable_[c]) return std::nullopt;
    return energy_[c];
  }

  /// Empty for r == 1 and for unreachable cells.
  std::optional<std::size_t> predecessor(std::size_t i, std::size_t r) const {
    const std::size_t c = at(i, r);
    if (pred_[c] == kNone) return std::nullopt;
    return pred_[c];
  }

  /// Ascending member indices of the subset stored at (i, r).
  std::vector<std::size_t> subset(std::size_t i, std::size_t r) const {
    if (!reachable(i, r)) {
      throw std::out_of_range("DP cell (" + std::to_string(i) + ", " + std::to_string(r) +
                              ") is unreachable");
    }
    std::vector<std::size_t> out(r);
    for (std::size_t level = r; level >= 1; --level) {
      out[level - 1] = i;
      if (level > 1) i = pred_[at(i, level)];
    }
    return out;
  }

  void set(std::size_t i, std::size_t r, double energy, std::optional<std::size_t> pred) {
    const std::size_t c = at(i, r);
    energy_[c] = energy;
    reachable_[c] = 1;
    pred_[c] = pred.value_or(kNone);
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::size_t at(std::size_t i, std::size_t r) const {
    if (i >= n_ || r < 1 || r > k_) {
      throw std::out_of_range("DP cell (" + std::to_string(i) + ", " + std::to_string(r) +
                              ") outside table of " + std::to_string(n_) + " x " +
                              std::to_string(k_));
    }
    return (r - 1) * n_ + i;
  }

  std::size_t n_;
  std::size_t k_;
  std::vector<double> energy_;
  std::vector<unsigned char> reachable_;
  std::vector<std::size_t> pred_;
};

struct DpOptions {
  /// Tabulate all pairwise interactions up front (8 n^2 bytes). Skipped above
  /// `max_precompute_points`.
  bool precompute_interactions = true;
  std::size_t max_precompute_points = 8192;
  /// Workers per layer. Cells of one layer are independent, and the result is
  /// bit-identical for every thread count.
  unsigned threads = 1;
};

namespace detail {

inline void check_subset_size(std::size_t n, std::size_t k) {
  if (k < 1 || k > n) {
    throw InvalidArgument("subset size k=" + std::to_string(k) + " outside [1, " +
                          std::to_string(n) + "]");
  }
}

template <typename Body>
void parallel_range(std::size_t begin, std::size_t end, unsigned threads, Body body) {
  const std::size_t count = end > begin ? end - begin : 0;
  const std::size_t workers = std::min<std::size_t>(std::max(1u, threads), count);
  if (workers <= 1) {
    body(begin, end);
    return;
  }
  // Later cells scan more predecessors; interleaved blocks keep workers even.
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  std::vector<std::exception_ptr> errors(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        constexpr std::size_t kBlock = 16;
        for (std::size_t lo = begin + w * kBlock; lo < end; lo += workers * kBlock) {
          body(lo, std::min(end, lo + kBlock));
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  pool.clear();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace detail

/// Fills the full DP table for subset sizes 1..k.
template <OrderedPointSet Points>
DPTable dp_trace(const Points& pts, std::size_t k, const EnergyParams& params,
                 const DpOptions& options = {}) {
  const std::size_t n = pts.size();
  detail::check_subset_size(n, k);
  const detail::Interactions<Points> term(
      pts, params, options.precompute_interactions && n <= options.max_precompute_points);

  DPTable table(n, k);
  for (std::size_t i = 0; i < n; ++i) table.set(i, 1, 0.0, std::nullopt);

  std::vector<std::size_t> chains;
  for (std::size_t r = 2; r <= k; ++r) {
    // Member lists of every (p, r-1) state, laid out p-major.
    const std::size_t len = r - 1;
    chains.assign(n * len, 0);
    for (std::size_t p = r - 2; p < n; ++p) {
      const auto members = table.subset(p, len);
      std::copy(members.begin(), members.end(), chains.begin() + p * len);
    }

    detail::parallel_range(r - 1, n, options.threads, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) {
        std::optional<double> best;
        std::size_t best_p = 0;
        for (std::size_t p = r - 2; p < i; ++p) {
          // Accumulating onto the stored energy term by term reproduces
          // subset_energy's summation order exactly.
          double cost = *table.energy(p, len);
          const std::size_t* member = chains.data() + p * len;
          for (std::size_t m = 0; m < len; ++m) cost += term(member[m], i);
          if (!best || cost < *best) {
            best = cost;
            best_p = p;
          }
        }
        table.set(i, r, *best, best_p);
      }
    });
  }
  return table;
}

/// Reads the answer for subset size `k` off a filled table: the smallest final
/// energy over end points i in [k-1, n-1], ties to the smallest i.
template <OrderedPointSet Points>
SelectionResult dp_result_from_table(const DPTable& table, const Points& pts, std::size_t k,
                                     const EnergyParams& params) {
  detail::check_subset_size(table.size(), k);
  if (k > table.max_subset_size()) {
    throw InvalidArgument("table only holds subset sizes up to " +
                          std::to_string(table.max_subset_size()));
  }
  std::optional<double> best;
  std::size_t best_i = 0;
  for (std::size_t i = k - 1; i < table.size(); ++i) {
    const double e = *table.energy(i, k);
    if (!best || e < *best) {
      best = e;
      best_i = i;
    }
  }
  SelectionResult result;
  result.indices = table.subset(best_i, k);
  result.energy = subset_energy(pts, result.indices, params);
  result.method = Method::kDp;
  return result;
}

template <OrderedPointSet Points>
SelectionResult dp_select(const Points& pts, std::size_t k, const EnergyParams& params,
                          const DpOptions& options = {}) {
  const DPTable table = dp_trace(pts, k, params, options);
  return dp_result_from_table(table, pts, k, params);
}

}  // namespace riesz

#endif  // RIESZ_DP_HPP
