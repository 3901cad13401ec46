#include "twofrac/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "twofrac/asymptotics.hpp"
#include "twofrac/count.hpp"

namespace twofrac {

std::string format_real(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

std::string format_real15(long double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15Lg", v);
  return buf;
}

std::vector<ExperimentRow> run_experiment(
    const RunConfig& cfg, const std::function<void(const ExperimentRow&)>& on_row) {
  if (cfg.a_list.empty()) throw std::invalid_argument("experiment: empty a list");
  if (cfg.n_grid.empty()) throw std::invalid_argument("experiment: empty N grid");
  for (std::size_t i = 1; i < cfg.n_grid.size(); ++i)
    if (cfg.n_grid[i] <= cfg.n_grid[i - 1])
      throw std::invalid_argument("experiment: N grid must be strictly increasing");
  if (cfg.n_grid.front() < 4)
    throw std::invalid_argument("experiment: N grid values must be >= 4");
  for (u64 a : cfg.a_list)
    if (a < 3 && !cfg.allow_small_a)
      throw std::invalid_argument("experiment: a < 3 needs --allow-small-a");

  const SpecialConstants consts = constants_bundle();
  const SieveTable sieve(std::max<u64>(cfg.n_grid.back(), 2));

  std::vector<ExperimentRow> rows;
  rows.reserve(cfg.a_list.size() * cfg.n_grid.size());
  for (u64 a : cfg.a_list) {
    const Modulus mod = Modulus::of(a);
    const real c1v = c1(mod, consts);
    const real c0v = c0_refined(mod, consts, cfg.allow_small_a);
    const auto sums = sum_grid(cfg.n_grid, a, cfg.threads, sieve);
    for (const auto& rec : sums) {
      const real main = main_term(rec.n_max, mod, consts, cfg.allow_small_a);
      const real env = delta_envelope(rec.n_max, mod).envelope;
      const real delta = static_cast<real>(rec.s) - main;
      ExperimentRow row{rec.n_max,
                        a,
                        rec.s,
                        static_cast<double>(main),
                        static_cast<double>(delta),
                        static_cast<double>(env),
                        static_cast<double>(delta / env),
                        static_cast<double>(c1v),
                        static_cast<double>(c0v)};
      rows.push_back(row);
      if (on_row) on_row(row);
    }
  }
  return rows;
}

void write_rows_csv(std::ostream& os, std::span<const ExperimentRow> rows) {
  os << "N,a,s_exact,main_term,delta_obs,envelope,ratio,c1,c0\n";
  for (const auto& r : rows) {
    os << r.n_max << ',' << r.a << ',' << r.s_exact << ','
       << format_real(r.main_term) << ',' << format_real(r.delta_obs) << ','
       << format_real(r.envelope) << ',' << format_real(r.ratio) << ','
       << format_real(r.c1) << ',' << format_real(r.c0) << '\n';
  }
}

namespace {

double parse_double(const std::string& s) {
  double v = 0;
  const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc{}) throw std::invalid_argument("bad real field: " + s);
  return v;
}

u64 parse_u64(const std::string& s) {
  u64 v = 0;
  const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc{}) throw std::invalid_argument("bad integer field: " + s);
  return v;
}

}  // namespace

std::vector<ExperimentRow> read_rows_csv(std::istream& is) {
  std::vector<ExperimentRow> rows;
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("empty CSV");
  if (line != "N,a,s_exact,main_term,delta_obs,envelope,ratio,c1,c0")
    throw std::invalid_argument("unexpected CSV header: " + line);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 9) throw std::invalid_argument("bad CSV row: " + line);
    ExperimentRow r;
    r.n_max = parse_u64(fields[0]);
    r.a = parse_u64(fields[1]);
    r.s_exact = parse_u64(fields[2]);
    r.main_term = parse_double(fields[3]);
    r.delta_obs = parse_double(fields[4]);
    r.envelope = parse_double(fields[5]);
    r.ratio = parse_double(fields[6]);
    r.c1 = parse_double(fields[7]);
    r.c0 = parse_double(fields[8]);
    rows.push_back(r);
  }
  return rows;
}

void write_rows_json(std::ostream& os, std::span<const ExperimentRow> rows) {
  os << "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    os << "  {\"N\": " << r.n_max << ", \"a\": " << r.a
       << ", \"s_exact\": " << r.s_exact
       << ", \"main_term\": " << format_real(r.main_term)
       << ", \"delta_obs\": " << format_real(r.delta_obs)
       << ", \"envelope\": " << format_real(r.envelope)
       << ", \"ratio\": " << format_real(r.ratio)
       << ", \"c1\": " << format_real(r.c1) << ", \"c0\": " << format_real(r.c0)
       << '}' << (i + 1 < rows.size() ? "," : "") << '\n';
  }
  os << "]\n";
}

void emit_plot_script(std::span<const ExperimentRow> rows,
                      const std::string& csv_path, std::ostream& os) {
  if (rows.empty()) throw std::invalid_argument("emit_plot_script: no rows");
  std::vector<u64> a_values;
  for (const auto& r : rows)
    if (std::find(a_values.begin(), a_values.end(), r.a) == a_values.end())
      a_values.push_back(r.a);

  os << "# observed |delta| against the error envelope, log-log\n";
  os << "set datafile separator ','\n";
  os << "set logscale xy\n";
  os << "set xlabel 'N'\n";
  os << "set ylabel '|S_exact - main term| and envelope'\n";
  os << "set key left top\n";
  os << "plot ";
  for (std::size_t i = 0; i < a_values.size(); ++i) {
    const u64 a = a_values[i];
    if (i) os << ", \\\n     ";
    os << '\'' << csv_path << "' using 1:($2==" << a
       << " ? abs($5) : 1/0) with linespoints title '|delta| a=" << a << '\'';
    os << ", \\\n     '" << csv_path << "' using 1:($2==" << a
       << " ? $6 : 1/0) with lines dashtype 2 title 'envelope a=" << a << '\'';
  }
  os << '\n';
}

std::vector<u64> parse_grid(const std::string& text) {
  const auto parse_value = [](const std::string& tok) -> u64 {
    u64 v = 0;
    auto r = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (r.ec == std::errc{} && r.ptr == tok.data() + tok.size()) return v;
    // allow 1e6-style spellings
    double d = 0;
    r = std::from_chars(tok.data(), tok.data() + tok.size(), d);
    if (r.ec != std::errc{} || r.ptr != tok.data() + tok.size() || d < 1 ||
        d != std::floor(d))
      throw std::invalid_argument("bad grid value: " + tok);
    return static_cast<u64>(d);
  };

  std::vector<u64> grid;
  const auto range_pos = text.find("..");
  if (range_pos != std::string::npos) {
    const auto factor_pos = text.find(":x", range_pos);
    if (factor_pos == std::string::npos)
      throw std::invalid_argument("grid range needs ':x<factor>': " + text);
    const u64 start = parse_value(text.substr(0, range_pos));
    const u64 stop = parse_value(text.substr(range_pos + 2, factor_pos - range_pos - 2));
    const u64 factor = parse_value(text.substr(factor_pos + 2));
    if (factor < 2) throw std::invalid_argument("grid factor must be >= 2");
    if (start < 1 || stop < start)
      throw std::invalid_argument("bad grid range: " + text);
    for (u64 v = start; v <= stop; v *= factor) {
      grid.push_back(v);
      if (v > stop / factor) break;  // overflow guard
    }
    return grid;
  }
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) grid.push_back(parse_value(tok));
  if (grid.empty()) throw std::invalid_argument("empty grid");
  return grid;
}

}  // namespace twofrac
