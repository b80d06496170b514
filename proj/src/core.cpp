#include "riesz/core.hpp"

#include <algorithm>
#include <sstream>

namespace riesz {

namespace {

std::string describe(const Point2& p) {
  std::ostringstream os;
  os.precision(17);
  os << '(' << p.f1 << ", " << p.f2 << ')';
  return os.str();
}

void check_1d(std::span<const double> coords) {
  if (coords.empty()) {
    throw ValidationError(ValidationError::Kind::kEmpty, std::nullopt, "empty point set");
  }
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!std::isfinite(coords[i])) {
      throw ValidationError(ValidationError::Kind::kNonFinite, i,
                            "point " + std::to_string(i) + " is not finite");
    }
    if (i == 0) continue;
    if (coords[i - 1] == coords[i]) {
      throw ValidationError(ValidationError::Kind::kDuplicate, i,
                            "duplicate coordinate at points " + std::to_string(i - 1) + " and " +
                                std::to_string(i));
    }
    if (coords[i - 1] > coords[i]) {
      throw ValidationError(ValidationError::Kind::kDomination, i,
                            "coordinates not increasing at points " + std::to_string(i - 1) +
                                " and " + std::to_string(i));
    }
  }
}

void check_2d(std::span<const Point2> points) {
  if (points.empty()) {
    throw ValidationError(ValidationError::Kind::kEmpty, std::nullopt, "empty point set");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!std::isfinite(points[i].f1) || !std::isfinite(points[i].f2)) {
      throw ValidationError(ValidationError::Kind::kNonFinite, i,
                            "point " + std::to_string(i) + " is not finite");
    }
    if (i == 0) continue;
    const Point2& a = points[i - 1];
    const Point2& b = points[i];
    const std::string pair = "points " + std::to_string(i - 1) + " " + describe(a) + " and " +
                             std::to_string(i) + " " + describe(b);
    if (a == b) {
      throw ValidationError(ValidationError::Kind::kDuplicate, i, "duplicate " + pair);
    }
    // Equal f1 with distinct f2 is weak domination and rejected as well.
    if (!(a.f1 < b.f1) || !(a.f2 > b.f2)) {
      throw ValidationError(ValidationError::Kind::kDomination, i,
                            "non-domination order violated by " + pair +
                                " (need f1 increasing and f2 decreasing)");
    }
  }
}

}  // namespace

EnergyParams::EnergyParams(double s) : s_(s) {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw InvalidArgument("energy exponent s must be positive and finite");
  }
}

double euclidean_distance(const Point2& p, const Point2& q) noexcept {
  return std::hypot(p.f1 - q.f1, p.f2 - q.f2);
}

PointSet1D::PointSet1D(std::vector<double> coords) : coords_(std::move(coords)) {
  check_1d(coords_);
}

ParetoFront2D::ParetoFront2D(std::vector<Point2> points) : points_(std::move(points)) {
  check_2d(points_);
}

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::kDp:
      return "dp";
    case Method::kBrute:
      return "brute";
    case Method::kGreedy:
      return "greedy";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  if (name == "dp") return Method::kDp;
  if (name == "brute") return Method::kBrute;
  if (name == "greedy") return Method::kGreedy;
  throw InvalidArgument("unknown method '" + std::string(name) + "'");
}

namespace {

template <typename P, typename Dist>
double pairwise_energy(std::span<const P> points, const EnergyParams& params, Dist dist) {
  double total = 0.0;
  for (std::size_t q = 1; q < points.size(); ++q) {
    for (std::size_t p = 0; p < q; ++p) {
      const double d = dist(points[p], points[q]);
      if (!(d > 0.0)) {
        throw DegenerateInputError("zero distance between points " + std::to_string(p) + " and " +
                                   std::to_string(q));
      }
      total += params.term(d);
    }
  }
  return total;
}

}  // namespace

double riesz_energy(std::span<const double> points, const EnergyParams& params) {
  return pairwise_energy(points, params, [](double a, double b) { return std::abs(a - b); });
}

double riesz_energy(std::span<const Point2> points, const EnergyParams& params) {
  return pairwise_energy(points, params, euclidean_distance);
}

PointSet1D validate_1d(std::vector<double> raw, bool sort) {
  if (sort) {
    // NaN would break the sort's ordering; report it at its original position.
    const auto bad = std::find_if(raw.begin(), raw.end(), [](double x) { return !std::isfinite(x); });
    if (bad != raw.end()) {
      const auto pos = static_cast<std::size_t>(bad - raw.begin());
      throw ValidationError(ValidationError::Kind::kNonFinite, pos,
                            "point " + std::to_string(pos) + " is not finite");
    }
    std::sort(raw.begin(), raw.end());
  }
  return PointSet1D(std::move(raw));
}

ParetoFront2D validate_2d(std::vector<Point2> raw, bool sort) {
  if (sort) {
    const auto bad = std::find_if(raw.begin(), raw.end(), [](const Point2& p) {
      return !std::isfinite(p.f1) || !std::isfinite(p.f2);
    });
    if (bad != raw.end()) {
      const auto pos = static_cast<std::size_t>(bad - raw.begin());
      throw ValidationError(ValidationError::Kind::kNonFinite, pos,
                            "point " + std::to_string(pos) + " is not finite");
    }
    std::stable_sort(raw.begin(), raw.end(),
                     [](const Point2& a, const Point2& b) { return a.f1 < b.f1; });
  }
  return ParetoFront2D(std::move(raw));
}

}  // namespace riesz
