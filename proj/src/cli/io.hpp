// CSV ingestion and emission for the command-line tool.

#ifndef RIESZ_CLI_IO_HPP
#define RIESZ_CLI_IO_HPP

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "riesz/core.hpp"
#include "riesz/fronts.hpp"

namespace riesz::cli {

/// File could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Malformed CSV content; `row` is the 1-based data row (header excluded).
class CsvError : public Error {
 public:
  CsvError(std::size_t row, const std::string& what)
      : Error("row " + std::to_string(row) + ": " + what), row_(row) {}
  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

struct CsvTable {
  std::vector<std::string> header;  ///< empty when read without a header
  std::vector<std::vector<double>> rows;

  std::optional<std::size_t> column(const std::string& name) const;
};

CsvTable read_csv(std::istream& in, bool has_header);
CsvTable read_csv_file(const std::string& path, bool has_header);

struct LoadedPoints {
  PointData data;
  /// source_rows[i] = 0-based data row of point i (differs from i after sorting).
  std::vector<std::size_t> source_rows;
};

/// Picks dimensionality (explicit, else from header names, else from width),
/// optionally sorts, and validates. Validation errors name the CSV row.
LoadedPoints points_from_table(const CsvTable& table, std::optional<int> dims, bool sort);

/// Writes `f1,f2` (and `segment` when labels are given) with round-trip precision.
void write_front_csv(std::ostream& out, const ParetoFront2D& front,
                     const std::vector<int>* segments = nullptr);

/// Shortest text that reads back to the same double.
std::string format_double(double v);

}  // namespace riesz::cli

#endif  // RIESZ_CLI_IO_HPP
