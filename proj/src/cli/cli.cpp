#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "io.hpp"
#include "riesz/bench.hpp"
#include "riesz/select.hpp"
#include "svg.hpp"

namespace riesz::cli {

namespace {

using nlohmann::json;

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << text;
  if (!file) throw IoError("write to '" + path + "' failed");
}

struct SelectArgs {
  std::string input;
  std::string fixture_name;
  std::optional<int> dims;
  std::size_t k = 0;
  double s = 1.0;
  std::string method = "dp";
  bool sort = false;
  bool no_header = false;
  std::uint64_t budget = kDefaultBruteForceBudget;
  unsigned threads = 1;
  std::string output;
};

json point_json(const PointData& data, std::size_t i) {
  if (const auto* set = std::get_if<PointSet1D>(&data)) return (*set)[i];
  const Point2& p = std::get<ParetoFront2D>(data)[i];
  return json::array({p.f1, p.f2});
}

int cmd_select(const SelectArgs& a, std::ostream& out) {
  const Method method = parse_method(a.method);
  const EnergyParams params(a.s);

  LoadedPoints loaded{PointSet1D({0.0}), {}};
  if (!a.fixture_name.empty()) {
    loaded.data = fixture(a.fixture_name);
    loaded.source_rows.resize(point_count(loaded.data));
    for (std::size_t i = 0; i < loaded.source_rows.size(); ++i) loaded.source_rows[i] = i;
  } else {
    loaded = points_from_table(read_csv_file(a.input, !a.no_header), a.dims, a.sort);
  }
  const std::size_t dims = std::holds_alternative<PointSet1D>(loaded.data) ? 1 : 2;

  SelectOptions options;
  options.brute_force_budget = a.budget;
  options.dp.threads = a.threads;

  const auto start = std::chrono::steady_clock::now();
  const SelectionResult result = run_method(method, loaded.data, a.k, params, options);
  const auto stop = std::chrono::steady_clock::now();

  json doc;
  doc["method"] = std::string(to_string(result.method));
  doc["k"] = a.k;
  doc["s"] = a.s;
  doc["dims"] = dims;
  doc["n"] = point_count(loaded.data);
  doc["indices"] = result.indices;
  json pts = json::array();
  json rows = json::array();
  for (const std::size_t i : result.indices) {
    pts.push_back(point_json(loaded.data, i));
    rows.push_back(loaded.source_rows[i]);
  }
  doc["points"] = std::move(pts);
  doc["input_rows"] = std::move(rows);
  doc["energy"] = result.energy;
  doc["runtime_ms"] = std::chrono::duration<double, std::milli>(stop - start).count();

  emit(doc.dump(2) + "\n", a.output, out);
  return kOk;
}

struct GenArgs {
  std::size_t n = 0;
  double alpha = 0.3;
  std::string output;
};

int cmd_gen_power(const GenArgs& a, std::ostream& out) {
  std::ostringstream csv;
  write_front_csv(csv, gen_power_front(a.n, a.alpha));
  emit(csv.str(), a.output, out);
  return kOk;
}

int cmd_gen_zdt3(const GenArgs& a, std::ostream& out) {
  const Zdt3Front z = gen_zdt3(a.n);
  std::ostringstream csv;
  write_front_csv(csv, z.front, &z.segments);
  emit(csv.str(), a.output, out);
  return kOk;
}

struct PlotArgs {
  std::string points;
  std::string selection;
  std::string output;
  std::optional<int> dims;
  bool sort = false;
  bool no_header = false;
};

int cmd_plot(const PlotArgs& a, std::ostream& out) {
  const LoadedPoints loaded =
      points_from_table(read_csv_file(a.points, !a.no_header), a.dims, a.sort);
  const std::size_t n = point_count(loaded.data);

  std::ifstream sel_file(a.selection);
  if (!sel_file) throw IoError("cannot open '" + a.selection + "'");
  json sel;
  try {
    sel = json::parse(sel_file);
  } catch (const json::parse_error& e) {
    throw InvalidArgument("selection file is not valid JSON: " + std::string(e.what()));
  }
  if (!sel.contains("indices") || !sel["indices"].is_array()) {
    throw InvalidArgument("selection file has no 'indices' array");
  }
  std::vector<std::size_t> indices;
  for (const auto& v : sel["indices"]) {
    if (!v.is_number_unsigned()) throw InvalidArgument("selection indices must be non-negative integers");
    const auto i = v.get<std::size_t>();
    if (i >= n) {
      throw InvalidArgument("selection index " + std::to_string(i) + " references a row absent from " +
                            a.points + " (" + std::to_string(n) + " rows)");
    }
    indices.push_back(i);
  }
  if (sel.contains("points") && sel["points"].is_array() && sel["points"].size() == indices.size()) {
    for (std::size_t t = 0; t < indices.size(); ++t) {
      if (sel["points"][t] != point_json(loaded.data, indices[t])) {
        throw InvalidArgument("selection point " + std::to_string(t) + " does not match row " +
                              std::to_string(indices[t] + 1) + " of " + a.points);
      }
    }
  }

  emit(render_selection_svg(loaded.data, indices), a.output, out);
  return kOk;
}

struct BenchArgs {
  BenchConfig config;
  std::string output;
};

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  const auto samples = run_scaling_bench(a.config);
  std::ostringstream csv;
  csv << "n,runtime_ms\n";
  for (const auto& s : samples) csv << s.n << ',' << format_double(s.runtime_ms) << '\n';
  emit(csv.str(), a.output, out);
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Representative subset selection by Riesz s-energy minimization", "riesz-select"};
  app.require_subcommand(1);

  SelectArgs sa;
  auto* select = app.add_subcommand("select", "Select k representative points");
  auto* input_opt = select->add_option("--input", sa.input, "CSV file (header: x, or f1,f2)");
  auto* fixture_opt = select->add_option("--fixture", sa.fixture_name, "Built-in instance")
                          ->check(CLI::IsMember({"ex1_1d", "ex2_1d", "front6", "front7"}));
  input_opt->excludes(fixture_opt);
  select->add_option("--dims", sa.dims, "1 or 2 (inferred from the CSV when omitted)")
      ->check(CLI::IsMember({1, 2}));
  select->add_option("--k", sa.k, "Subset size")->required();
  select->add_option("--s", sa.s, "Riesz exponent s > 0");
  select->add_option("--method", sa.method, "dp, brute or greedy")
      ->check(CLI::IsMember({"dp", "brute", "greedy"}));
  select->add_flag("--sort", sa.sort, "Sort input before validating");
  select->add_flag("--no-header", sa.no_header, "CSV has no header row");
  select->add_option("--budget", sa.budget, "Largest C(n,k) the brute force may enumerate");
  select->add_option("--threads", sa.threads, "DP worker threads per layer");
  select->add_option("--output", sa.output, "Write JSON here instead of stdout");

  GenArgs ga;
  auto* gen = app.add_subcommand("gen", "Generate benchmark fronts as CSV");
  gen->require_subcommand(1);
  gen->add_option("--output", ga.output, "Write CSV here instead of stdout");
  auto* zdt3 = gen->add_subcommand("zdt3", "Discontinuous ZDT3 front")->fallthrough();
  zdt3->add_option("--n", ga.n, "Number of samples (>= 5)")->required();
  auto* power = gen->add_subcommand("powerfront", "f2 = 1 - f1^alpha on [0, 1]")->fallthrough();
  power->add_option("--n", ga.n, "Number of points (>= 2)")->required();
  power->add_option("--alpha", ga.alpha, "Exponent alpha > 0")->required();

  PlotArgs pa;
  auto* plot = app.add_subcommand("plot", "Render a selection as SVG");
  plot->add_option("--points", pa.points, "Points CSV")->required();
  plot->add_option("--selection", pa.selection, "Selection JSON from `select`")->required();
  plot->add_option("--output", pa.output, "SVG file (stdout when omitted)");
  plot->add_option("--dims", pa.dims, "1 or 2")->check(CLI::IsMember({1, 2}));
  plot->add_flag("--sort", pa.sort, "Sort points as `select --sort` did");
  plot->add_flag("--no-header", pa.no_header, "CSV has no header row");

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "Time DP selection on growing power fronts");
  bench->add_option("--min-n", ba.config.min_n, "Smallest n (sizes double up to --max-n)");
  bench->add_option("--max-n", ba.config.max_n, "Largest n");
  bench->add_option("--k", ba.config.k, "Subset size");
  bench->add_option("--s", ba.config.s, "Riesz exponent");
  bench->add_option("--repeats", ba.config.repeats, "Timed runs per size (median reported)");
  bench->add_option("--output", ba.output, "Write CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*select) {
      if (sa.input.empty() && sa.fixture_name.empty()) {
        throw InvalidArgument("one of --input or --fixture is required");
      }
      return cmd_select(sa, out);
    }
    if (*gen) return *zdt3 ? cmd_gen_zdt3(ga, out) : cmd_gen_power(ga, out);
    if (*plot) return cmd_plot(pa, out);
    if (*bench) return cmd_bench(ba, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoFailure;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace riesz::cli
