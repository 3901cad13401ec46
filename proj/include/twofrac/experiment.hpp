#pragma once

// Exact-vs-asymptotic experiment rows plus CSV/JSON serialization and
// gnuplot emission. Reals cross the I/O boundary as doubles rendered as
// shortest round-trip decimal strings.

#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "twofrac/arith.hpp"

namespace twofrac {

struct ExperimentRow {
  u64 n_max = 0;  // N
  u64 a = 0;
  u64 s_exact = 0;
  double main_term = 0;
  double delta_obs = 0;  // s_exact - main_term
  double envelope = 0;
  double ratio = 0;      // delta_obs / envelope
  double c1 = 0;
  double c0 = 0;
};

struct RunConfig {
  std::vector<u64> a_list;
  std::vector<u64> n_grid;    // ascending
  unsigned threads = 1;
  double precision_goal = 1e-10;
  std::string output_path;    // empty -> stdout
  enum class Format { csv, json } format = Format::csv;
  bool emit_plot = false;
  bool allow_small_a = false; // a in {1,2} oracle mode
};

// One row per (a, N) pair; rows are reported through on_row as soon as
// they are computed so partial results survive a late failure.
std::vector<ExperimentRow> run_experiment(
    const RunConfig& cfg,
    const std::function<void(const ExperimentRow&)>& on_row = {});

void write_rows_csv(std::ostream& os, std::span<const ExperimentRow> rows);
std::vector<ExperimentRow> read_rows_csv(std::istream& is);
void write_rows_json(std::ostream& os, std::span<const ExperimentRow> rows);

// Gnuplot script charting |delta_obs| and envelope vs N on log-log axes,
// one pair of series per a, reading from csv_path.
void emit_plot_script(std::span<const ExperimentRow> rows,
                      const std::string& csv_path, std::ostream& os);

// "1000,10000" or geometric "1000..1000000:x10".
std::vector<u64> parse_grid(const std::string& text);

std::string format_real(double v);       // shortest round-trip
std::string format_real15(long double v);  // 15 significant digits

}  // namespace twofrac
