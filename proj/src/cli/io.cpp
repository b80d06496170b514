#include "io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

namespace riesz::cli {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream is(line);
  while (std::getline(is, cell, ',')) cells.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

double parse_number(const std::string& cell, std::size_t row) {
  std::string_view text = cell;
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw CsvError(row, "cannot parse '" + cell + "' as a number");
  }
  return value;
}

}  // namespace

std::optional<std::size_t> CsvTable::column(const std::string& name) const {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) return std::nullopt;
  return static_cast<std::size_t>(it - header.begin());
}

CsvTable read_csv(std::istream& in, bool has_header) {
  CsvTable table;
  std::string line;
  bool header_pending = has_header;
  std::size_t width = 0;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    auto cells = split(line);
    if (header_pending) {
      table.header = std::move(cells);
      width = table.header.size();
      header_pending = false;
      continue;
    }
    const std::size_t row = table.rows.size() + 1;
    if (width == 0) width = cells.size();
    if (cells.size() != width) {
      throw CsvError(row, "expected " + std::to_string(width) + " columns, found " +
                              std::to_string(cells.size()));
    }
    std::vector<double> values;
    values.reserve(cells.size());
    for (const auto& c : cells) values.push_back(parse_number(c, row));
    table.rows.push_back(std::move(values));
  }
  if (in.bad()) throw IoError("read failure");
  return table;
}

CsvTable read_csv_file(const std::string& path, bool has_header) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return read_csv(in, has_header);
}

LoadedPoints points_from_table(const CsvTable& table, std::optional<int> dims, bool sort) {
  if (table.rows.empty()) {
    throw ValidationError(ValidationError::Kind::kEmpty, std::nullopt, "no data rows");
  }
  const std::size_t width = table.rows.front().size();
  const auto x_col = table.column("x");
  const auto f1_col = table.column("f1");
  const auto f2_col = table.column("f2");

  int d = 0;
  if (dims) {
    d = *dims;
  } else if (f1_col && f2_col) {
    d = 2;
  } else if (x_col) {
    d = 1;
  } else {
    d = width >= 2 ? 2 : 1;
  }
  if (d != 1 && d != 2) throw InvalidArgument("--dims must be 1 or 2");
  if (d == 2 && width < 2) throw InvalidArgument("2D input needs at least two columns");

  const std::size_t c0 = d == 1 ? x_col.value_or(0) : f1_col.value_or(0);
  const std::size_t c1 = f2_col.value_or(1);

  const std::size_t n = table.rows.size();
  for (std::size_t r = 0; r < n; ++r) {
    for (const std::size_t c : {c0, c1}) {
      if (c < width && !std::isfinite(table.rows[r][c])) {
        throw ValidationError(ValidationError::Kind::kNonFinite, r,
                              "row " + std::to_string(r + 1) + ": value is not finite");
      }
    }
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  if (sort) {
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return table.rows[a][c0] < table.rows[b][c0];
    });
  }

  auto rethrow_with_row = [&](const ValidationError& e) -> ValidationError {
    if (!e.index()) return e;
    const std::size_t row = order[*e.index()] + 1;
    std::string msg = "row " + std::to_string(row) + ": " + e.what();
    if (*e.index() > 0) {
      msg += " (previous row " + std::to_string(order[*e.index() - 1] + 1) + ")";
    }
    return ValidationError(e.kind(), e.index(), msg);
  };

  try {
    if (d == 1) {
      std::vector<double> coords(n);
      for (std::size_t i = 0; i < n; ++i) coords[i] = table.rows[order[i]][c0];
      return {PointSet1D(std::move(coords)), order};
    }
    std::vector<Point2> pts(n);
    for (std::size_t i = 0; i < n; ++i) pts[i] = {table.rows[order[i]][c0], table.rows[order[i]][c1]};
    return {ParetoFront2D(std::move(pts)), order};
  } catch (const ValidationError& e) {
    throw rethrow_with_row(e);
  }
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

void write_front_csv(std::ostream& out, const ParetoFront2D& front,
                     const std::vector<int>* segments) {
  out << (segments ? "f1,f2,segment\n" : "f1,f2\n");
  for (std::size_t i = 0; i < front.size(); ++i) {
    out << format_double(front[i].f1) << ',' << format_double(front[i].f2);
    if (segments) out << ',' << (*segments)[i];
    out << '\n';
  }
}

}  // namespace riesz::cli
