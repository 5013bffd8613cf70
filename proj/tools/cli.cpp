#include "cli.hpp"

#include "holedim/cantor.hpp"
#include "holedim/dimension.hpp"
#include "holedim/errors.hpp"
#include "holedim/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

namespace holedim::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr unsigned kDecimalPlaces = 20;

std::string format_significant(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

// Thrown by command bodies for bad input; reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct HoleArgs {
  unsigned k = 2;
  std::string a;
  std::string b;
};

Hole make_hole(const HoleArgs& h) { return Hole(parse_rational(h.a), parse_rational(h.b), h.k); }

EstimateMode parse_mode(const std::string& s) {
  if (s == "direct") return EstimateMode::Direct;
  if (s == "reduced") return EstimateMode::Reduced;
  if (s == "both") return EstimateMode::Both;
  throw UsageError("unknown mode '" + s + "' (expected direct, reduced or both)");
}

ordered_json estimate_to_json(const Hole& hole, const DimensionEstimate& e) {
  ordered_json j;
  j["k"] = hole.k();
  j["a"] = to_fraction_string(hole.a());
  j["b"] = to_fraction_string(hole.b());
  j["region"] = to_string(e.region.preferred());
  j["lower"] = round_significant(e.lower);
  j["upper"] = round_significant(e.upper);
  j["positivity"] = to_string(e.positivity.verdict);
  j["certificate"] = e.positivity.certificate ? ordered_json(to_string(e.positivity.certificate->kind)) : ordered_json();
  j["methods"] = e.methods;
  j["depth"] = e.depth;
  if (e.reduced_hole) {
    j["reduced_hole"] = {to_fraction_string(e.reduced_hole->first), to_fraction_string(e.reduced_hole->second)};
  }
  return j;
}

ordered_json rational_to_json(unsigned k, const std::string& input, const Rational& value) {
  ordered_json j;
  j["k"] = k;
  j["input"] = input;
  j["fraction"] = to_fraction_string(value);
  j["decimal"] = to_decimal_string(value, kDecimalPlaces);
  return j;
}

struct SweepArgs {
  unsigned k = 3;
  unsigned grid = 10;
  unsigned depth = 8;
  std::string fix_a;
  std::string fix_width;
  unsigned jobs = 0;
};

std::vector<std::pair<Rational, Rational>> sweep_holes(const SweepArgs& s) {
  if (s.grid < 1) throw UsageError("--grid must be at least 1");
  if (!s.fix_a.empty() && !s.fix_width.empty()) throw UsageError("--fix-a and --fix-width are exclusive");
  std::vector<Rational> points;
  for (unsigned i = 0; i < s.grid; ++i) points.emplace_back(i, s.grid);

  std::vector<std::pair<Rational, Rational>> holes;
  if (!s.fix_a.empty()) {
    const Rational a = parse_rational(s.fix_a);
    if (a < 0 || a >= 1) throw UsageError("--fix-a must lie in [0,1)");
    for (const auto& b : points) {
      if (b > a) holes.emplace_back(a, b);
    }
  } else if (!s.fix_width.empty()) {
    const Rational w = parse_rational(s.fix_width);
    if (w <= 0 || w > 1) throw UsageError("--fix-width must lie in (0,1]");
    for (const auto& a : points) {
      if (a + w <= 1) holes.emplace_back(a, a + w);
    }
  } else {
    for (std::size_t i = 0; i < points.size(); ++i) {
      for (std::size_t j = i + 1; j < points.size(); ++j) holes.emplace_back(points[i], points[j]);
    }
  }
  return holes;
}

std::string sweep_row(unsigned k, unsigned depth, const std::pair<Rational, Rational>& ab) {
  const Hole hole(ab.first, ab.second, k);
  const auto e = estimate_dimension(hole, depth, EstimateMode::Direct);
  std::ostringstream row;
  row << k << ',' << format_significant(to_double(hole.a())) << ',' << format_significant(to_double(hole.b())) << ','
      << to_string(e.region.preferred()) << ',' << format_significant(e.lower) << ','
      << format_significant(e.upper) << ',' << to_string(e.positivity.verdict) << ',' << depth;
  return row.str();
}

int cmd_sweep(const SweepArgs& s, std::ostream& out) {
  const auto holes = sweep_holes(s);
  std::vector<std::string> rows(holes.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&] {
    for (std::size_t i = next++; i < holes.size(); i = next++) {
      try {
        rows[i] = sweep_row(s.k, s.depth, holes[i]);
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned jobs = s.jobs != 0 ? s.jobs : std::max(1U, std::thread::hardware_concurrency());
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < std::min<std::size_t>(jobs, holes.size()); ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  if (failure) std::rethrow_exception(failure);

  out << "k,a,b,region,lower,upper,positivity,depth\n";
  for (const auto& r : rows) out << r << '\n';
  return kOk;
}

int cmd_check(const HoleArgs& h, unsigned depth, std::ostream& out) {
  if (depth < 1 || depth > 10) throw UsageError("check supports depths 1..10");
  const Hole hole = make_hole(h);
  bool all_match = true;
  for (const Mode mode : {Mode::Inner, Mode::Outer, Mode::Window}) {
    const auto fast = count_sequence(hole, mode, depth);
    const auto slow = oracle::brute_counts(hole, depth, mode);
    for (unsigned n = 1; n <= depth; ++n) {
      const bool same = fast.at(n) == slow.at(n);
      all_match = all_match && same;
      out << to_string(mode) << " depth " << n << ": sft " << fast.at(n) << ", oracle " << slow.at(n)
          << (same ? "" : "  MISMATCH") << '\n';
    }
  }
  out << (all_match ? "ok" : "mismatch") << '\n';
  return all_match ? kOk : kMismatch;
}

// CLI11 wants argv; keep the strings alive alongside the pointers.
struct Argv {
  explicit Argv(const std::vector<std::string>& args) : storage{"holedim"} {
    storage.insert(storage.end(), args.begin(), args.end());
    for (auto& s : storage) pointers.push_back(s.data());
  }
  int argc() const { return static_cast<int>(pointers.size()); }
  char** argv() { return pointers.data(); }

  std::vector<std::string> storage;
  std::vector<char*> pointers;
};

}  // namespace

double round_significant(double x) { return std::strtod(format_significant(x).c_str(), nullptr); }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hausdorff dimension bounds for survivor sets of x -> kx mod 1 with a hole"};
  app.require_subcommand(1);

  HoleArgs hole_args;
  unsigned depth = 12;
  std::string mode = "direct";
  std::uint64_t max_states = SftOptions{}.max_states;

  auto* dim = app.add_subcommand("dim", "Dimension bounds and positivity for one hole (JSON)");
  dim->add_option("--k", hole_args.k, "Base k >= 2")->required();
  dim->add_option("--a", hole_args.a, "Left end, p/q or decimal")->required();
  dim->add_option("--b", hole_args.b, "Right end, p/q or decimal")->required();
  dim->add_option("--depth", depth, "Word depth of the subshift approximations");
  dim->add_option("--mode", mode, "direct, reduced or both");
  dim->add_option("--max-states", max_states, "Largest k^depth to materialize");

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Dimension bounds over a grid of holes (CSV)");
  sweep->add_option("--k", sweep_args.k, "Base k >= 2")->required();
  sweep->add_option("--grid", sweep_args.grid, "Grid points i/m, i = 0..m-1")->required();
  sweep->add_option("--depth", sweep_args.depth, "Word depth");
  sweep->add_option("--fix-a", sweep_args.fix_a, "Keep a fixed, vary b");
  sweep->add_option("--fix-width", sweep_args.fix_width, "Keep b - a fixed, vary a");
  sweep->add_option("--jobs", sweep_args.jobs, "Worker threads (0: all cores)");

  unsigned cantor_k = 3;
  std::string cantor_x;
  std::string cantor_y;
  std::size_t precision = 64;
  auto* cantor = app.add_subcommand("cantor", "Cantor function utilities (JSON)");
  cantor->require_subcommand(1);
  auto* eval = cantor->add_subcommand("eval", "g_k(x)");
  eval->add_option("--k", cantor_k)->required();
  eval->add_option("--x", cantor_x)->required();
  auto* inv = cantor->add_subcommand("inv", "The point of C_k mapped to y");
  inv->add_option("--k", cantor_k)->required();
  inv->add_option("--y", cantor_y)->required();
  auto* tm_inv = cantor->add_subcommand("tm-inv", "Preimage of the Thue-Morse constant");
  tm_inv->add_option("--k", cantor_k)->required();
  tm_inv->add_option("--precision", precision, "Thue-Morse digits");

  auto* check = app.add_subcommand("check", "Compare subshift counts with brute force");
  check->add_option("--k", hole_args.k)->required();
  check->add_option("--a", hole_args.a)->required();
  check->add_option("--b", hole_args.b)->required();
  check->add_option("--depth", depth, "Depth 1..10");

  Argv argv(args);
  try {
    app.parse(argv.argc(), argv.argv());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*dim) {
      EstimatorOptions options;
      options.sft.max_states = max_states;
      const Hole hole = make_hole(hole_args);
      const auto e = estimate_dimension(hole, depth, parse_mode(mode), options);
      out << estimate_to_json(hole, e).dump() << '\n';
      return kOk;
    }
    if (*sweep) return cmd_sweep(sweep_args, out);
    if (*eval) {
      const Rational x = parse_rational(cantor_x);
      out << rational_to_json(cantor_k, cantor_x, cantor_function(x, cantor_k)).dump() << '\n';
      return kOk;
    }
    if (*inv) {
      const Rational y = parse_rational(cantor_y);
      out << rational_to_json(cantor_k, cantor_y, cantor_inverse(y, cantor_k)).dump() << '\n';
      return kOk;
    }
    if (*tm_inv) {
      if (precision < 1) throw UsageError("--precision must be at least 1");
      out << rational_to_json(cantor_k, std::to_string(precision), thue_morse_preimage(cantor_k, precision)).dump()
          << '\n';
      return kOk;
    }
    if (*check) return cmd_check(hole_args, depth, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace holedim::cli
