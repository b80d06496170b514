#include "svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <variant>

namespace riesz::cli {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kMargin = 50.0;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

struct Axis {
  double lo;
  double hi;

  static Axis of(const std::vector<double>& values) {
    const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
    double lo = *mn;
    double hi = *mx;
    if (hi - lo <= 0.0) {
      lo -= 0.5;
      hi += 0.5;
    }
    const double pad = 0.05 * (hi - lo);
    return {lo - pad, hi + pad};
  }

  double map(double v, double from, double to) const { return from + (v - lo) / (hi - lo) * (to - from); }
};

}  // namespace

std::string render_selection_svg(const PointData& points, const std::vector<std::size_t>& selected) {
  std::vector<double> xs;
  std::vector<double> ys;
  const bool one_d = std::holds_alternative<PointSet1D>(points);
  if (one_d) {
    const auto& set = std::get<PointSet1D>(points);
    xs.assign(set.coords().begin(), set.coords().end());
  } else {
    for (const Point2& p : std::get<ParetoFront2D>(points).points()) {
      xs.push_back(p.f1);
      ys.push_back(p.f2);
    }
  }

  const double left = kMargin;
  const double right = kWidth - kMargin;
  const double top = kMargin;
  const double bottom = kHeight - kMargin;
  const Axis ax = Axis::of(xs);
  const Axis ay = one_d ? Axis{0.0, 1.0} : Axis::of(ys);

  auto px = [&](std::size_t i) { return fmt(ax.map(xs[i], left, right)); };
  auto py = [&](std::size_t i) {
    return one_d ? fmt((top + bottom) / 2.0) : fmt(ay.map(ys[i], bottom, top));
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  svg << "  <g id=\"axes\" stroke=\"black\" stroke-width=\"1\">\n";
  if (one_d) {
    const std::string mid = fmt((top + bottom) / 2.0);
    svg << "    <line x1=\"" << fmt(left) << "\" y1=\"" << mid << "\" x2=\"" << fmt(right)
        << "\" y2=\"" << mid << "\"/>\n";
  } else {
    svg << "    <line x1=\"" << fmt(left) << "\" y1=\"" << fmt(bottom) << "\" x2=\"" << fmt(right)
        << "\" y2=\"" << fmt(bottom) << "\"/>\n";
    svg << "    <line x1=\"" << fmt(left) << "\" y1=\"" << fmt(bottom) << "\" x2=\"" << fmt(left)
        << "\" y2=\"" << fmt(top) << "\"/>\n";
  }
  svg << "  </g>\n";

  svg << "  <g id=\"labels\" font-family=\"sans-serif\" font-size=\"14\">\n";
  if (one_d) {
    svg << "    <text x=\"" << fmt(right + 10) << "\" y=\"" << fmt((top + bottom) / 2.0 + 5)
        << "\">x</text>\n";
  } else {
    svg << "    <text x=\"" << fmt((left + right) / 2.0) << "\" y=\"" << fmt(kHeight - 15)
        << "\" text-anchor=\"middle\">f1</text>\n";
    svg << "    <text x=\"15\" y=\"" << fmt((top + bottom) / 2.0)
        << "\" text-anchor=\"middle\" transform=\"rotate(-90 15 " << fmt((top + bottom) / 2.0)
        << ")\">f2</text>\n";
  }
  svg << "  </g>\n";

  svg << "  <g id=\"points\" fill=\"blue\">\n";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    svg << "    <circle cx=\"" << px(i) << "\" cy=\"" << py(i) << "\" r=\"2\"/>\n";
  }
  svg << "  </g>\n";

  std::vector<std::size_t> path = selected;
  std::sort(path.begin(), path.end());
  if (path.size() >= 2) {
    svg << "  <polyline id=\"path\" fill=\"none\" stroke=\"red\" stroke-width=\"1.5\" "
           "stroke-dasharray=\"6,4\" points=\"";
    for (std::size_t t = 0; t < path.size(); ++t) {
      svg << (t ? " " : "") << px(path[t]) << ',' << py(path[t]);
    }
    svg << "\"/>\n";
  }

  svg << "  <g id=\"selected\" fill=\"none\" stroke=\"red\" stroke-width=\"2\">\n";
  for (const std::size_t i : path) {
    svg << "    <circle cx=\"" << px(i) << "\" cy=\"" << py(i) << "\" r=\"6\"/>\n";
  }
  svg << "  </g>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace riesz::cli
