/**
 * @file core.hpp
 * @brief Domain types, input validation and Riesz s-energy evaluation.
 *
 * Point sets come in two flavours: strictly increasing reals on a line
 * (PointSet1D) and mutually non-dominated biobjective points sorted by the
 * first objective (ParetoFront2D). Both expose the same minimal interface,
 * `size()` and `distance(i, j)`, which is all the selection algorithms use.
 */

#ifndef RIESZ_CORE_HPP
#define RIESZ_CORE_HPP

#include <cmath>
#include <concepts>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace riesz {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on a scalar argument (k, s, n, alpha, ...) does not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Raw input data cannot form a valid point set.
class ValidationError : public Error {
 public:
  enum class Kind { kEmpty, kDuplicate, kDomination, kNonFinite };

  ValidationError(Kind kind, std::optional<std::size_t> index, const std::string& what)
      : Error(what), kind_(kind), index_(index) {}

  Kind kind() const noexcept { return kind_; }
  /// 0-based position of the first offending element, if any.
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  Kind kind_;
  std::optional<std::size_t> index_;
};

/// Two points of an energy evaluation coincide.
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Domain types
// ---------------------------------------------------------------------------

class EnergyParams {
 public:
  /// Throws InvalidArgument unless s is finite and strictly positive.
  explicit EnergyParams(double s = 1.0);

  double s() const noexcept { return s_; }

  /// Interaction of two points at distance d: 1 / d^s.
  double term(double d) const { return 1.0 / std::pow(d, s_); }

 private:
  double s_;
};

struct Point2 {
  double f1 = 0.0;
  double f2 = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

double euclidean_distance(const Point2& p, const Point2& q) noexcept;

/// Strictly increasing real coordinates, n >= 1.
class PointSet1D {
 public:
  /// Throws ValidationError if coords is empty, non-finite or not strictly increasing.
  explicit PointSet1D(std::vector<double> coords);

  std::size_t size() const noexcept { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  std::span<const double> coords() const noexcept { return coords_; }
  double distance(std::size_t i, std::size_t j) const { return std::abs(coords_[i] - coords_[j]); }

 private:
  std::vector<double> coords_;
};

/// Biobjective points with f1 strictly increasing and f2 strictly decreasing.
class ParetoFront2D {
 public:
  /// Throws ValidationError if points is empty, non-finite or not a strictly sorted front.
  explicit ParetoFront2D(std::vector<Point2> points);

  std::size_t size() const noexcept { return points_.size(); }
  const Point2& operator[](std::size_t i) const { return points_[i]; }
  std::span<const Point2> points() const noexcept { return points_; }
  double distance(std::size_t i, std::size_t j) const {
    return euclidean_distance(points_[i], points_[j]);
  }

 private:
  std::vector<Point2> points_;
};

/// Anything the selection algorithms can run on: an indexed sequence with a metric.
template <typename T>
concept OrderedPointSet = requires(const T& pts, std::size_t i) {
  { pts.size() } -> std::convertible_to<std::size_t>;
  { pts.distance(i, i) } -> std::convertible_to<double>;
};

enum class Method { kDp, kBrute, kGreedy };

std::string_view to_string(Method m) noexcept;
/// Parses "dp", "brute" or "greedy"; throws InvalidArgument otherwise.
Method parse_method(std::string_view name);

struct SelectionResult {
  std::vector<std::size_t> indices;  ///< ascending, 0-based
  double energy = 0.0;
  Method method = Method::kDp;
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// Sum over unordered pairs of 1/d^s. Zero for fewer than two points.
/// Throws DegenerateInputError when two points coincide.
double riesz_energy(std::span<const double> points, const EnergyParams& params);
double riesz_energy(std::span<const Point2> points, const EnergyParams& params);

/// Energy of the subset `indices` of `pts`.
///
/// Terms are accumulated in a fixed order (for each position q, pairs (p, q)
/// with p < q in ascending p) into one running sum. The DP engine and the
/// brute-force oracle accumulate in the same order, so equal index lists give
/// bit-identical energies across methods.
template <OrderedPointSet Points>
double subset_energy(const Points& pts, std::span<const std::size_t> indices,
                     const EnergyParams& params) {
  double total = 0.0;
  for (std::size_t q = 1; q < indices.size(); ++q) {
    for (std::size_t p = 0; p < q; ++p) {
      const double d = pts.distance(indices[p], indices[q]);
      if (!(d > 0.0)) {
        throw DegenerateInputError("zero distance between points " + std::to_string(indices[p]) +
                                   " and " + std::to_string(indices[q]));
      }
      total += params.term(d);
    }
  }
  return total;
}

/// Checks (and with `sort` first sorts) raw coordinates into a PointSet1D.
PointSet1D validate_1d(std::vector<double> raw, bool sort = false);

/// Checks (and with `sort` first sorts by f1) raw points into a ParetoFront2D.
ParetoFront2D validate_2d(std::vector<Point2> raw, bool sort = false);

}  // namespace riesz

#endif  // RIESZ_CORE_HPP
