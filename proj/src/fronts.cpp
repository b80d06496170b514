#include "riesz/fronts.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace riesz {

ParetoFront2D gen_power_front(std::size_t n, double alpha) {
  if (n < 2) throw InvalidArgument("power front needs n >= 2");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw InvalidArgument("power front exponent alpha must be positive");
  }
  std::vector<Point2> pts(n);
  const double last = static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const double f1 = static_cast<double>(i) / last;
    pts[i] = {f1, 1.0 - std::pow(f1, alpha)};
  }
  // Extreme alpha can collapse neighbouring f2 values; validation reports that.
  return ParetoFront2D(std::move(pts));
}

std::array<std::size_t, 5> Zdt3Spec::allocation() const {
  constexpr std::size_t m = kIntervals.size();
  if (n < m) throw InvalidArgument("ZDT3 front needs n >= 5");

  double total = 0.0;
  for (const auto& iv : kIntervals) total += iv.length();

  // One guaranteed point per interval, the rest by largest remainder.
  const std::size_t spare = n - m;
  std::array<std::size_t, m> counts{};
  std::array<double, m> remainder{};
  std::size_t assigned = 0;
  for (std::size_t j = 0; j < m; ++j) {
    const double share = static_cast<double>(spare) * kIntervals[j].length() / total;
    counts[j] = 1 + static_cast<std::size_t>(std::floor(share));
    remainder[j] = share - std::floor(share);
    assigned += counts[j];
  }
  std::array<std::size_t, m> order{};
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b]; });
  for (std::size_t t = 0; assigned < n; ++t, ++assigned) ++counts[order[t % m]];
  return counts;
}

double zdt3_f2(double x1) noexcept {
  return 1.0 - std::sqrt(x1) - x1 * std::sin(10.0 * std::numbers::pi * x1);
}

namespace {

struct Zdt3Sample {
  Point2 p;
  int segment;
};

std::vector<Zdt3Sample> sample_zdt3(std::size_t m) {
  const auto counts = Zdt3Spec{m}.allocation();
  std::vector<Zdt3Sample> samples;
  samples.reserve(m);
  for (std::size_t j = 0; j < counts.size(); ++j) {
    const Interval iv = Zdt3Spec::kIntervals[j];
    const std::size_t c = counts[j];
    for (std::size_t t = 0; t < c; ++t) {
      const double x1 =
          c == 1 ? iv.lo : iv.lo + iv.length() * static_cast<double>(t) / static_cast<double>(c - 1);
      samples.push_back({{x1, zdt3_f2(x1)}, static_cast<int>(j + 1)});
    }
  }
  std::stable_sort(samples.begin(), samples.end(),
                   [](const Zdt3Sample& a, const Zdt3Sample& b) { return a.p.f1 < b.p.f1; });
  return samples;
}

// Sorted by f1, a point survives iff its f2 is strictly below every earlier f2.
std::vector<Zdt3Sample> non_dominated(const std::vector<Zdt3Sample>& samples) {
  std::vector<Zdt3Sample> kept;
  kept.reserve(samples.size());
  for (const Zdt3Sample& s : samples) {
    if (!kept.empty() && (s.p.f1 == kept.back().p.f1 || !(s.p.f2 < kept.back().p.f2))) continue;
    kept.push_back(s);
  }
  return kept;
}

}  // namespace

Zdt3Front gen_zdt3(std::size_t n) {
  if (n < Zdt3Spec::kIntervals.size()) throw InvalidArgument("ZDT3 front needs n >= 5");
  // The interval bounds are rounded, so the left end of intervals 2..5 sits a
  // hair above the previous interval's last f2 and gets filtered. Sample a few
  // extra points so that n survive.
  std::vector<Zdt3Sample> kept = non_dominated(sample_zdt3(n));
  for (std::size_t m = n, round = 0; kept.size() < n && round < 4; ++round) {
    m += n - kept.size();
    kept = non_dominated(sample_zdt3(m));
  }

  std::vector<Point2> pts;
  std::vector<int> segments;
  pts.reserve(kept.size());
  segments.reserve(kept.size());
  for (const auto& s : kept) {
    pts.push_back(s.p);
    segments.push_back(s.segment);
  }
  return {ParetoFront2D(std::move(pts)), std::move(segments)};
}

PointData fixture(std::string_view name) {
  if (name == "ex1_1d") return PointSet1D({0.0, 1.0, 3.0, 6.0});
  if (name == "ex2_1d") return PointSet1D({0.0, 2.0, 4.0, 7.0});
  if (name == "front6") {
    return ParetoFront2D({{1, 15}, {5, 10}, {8, 4}, {13, 3}, {15, 2}, {17, 1}});
  }
  if (name == "front7") {
    return ParetoFront2D({{2, 20}, {4, 18}, {6, 16}, {9, 12}, {11, 8}, {14, 5}, {17, 3}});
  }
  throw InvalidArgument("unknown fixture '" + std::string(name) + "'");
}

std::vector<std::string_view> fixture_names() { return {"ex1_1d", "ex2_1d", "front6", "front7"}; }

}  // namespace riesz
