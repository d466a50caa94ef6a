// ngc: command-line front end for the ngclique library.
// Exit codes: 0 success, 1 property violation, 2 input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "ngclique/ngclique.hpp"
#include "ngclique/verify.hpp"

namespace {

using namespace ngc;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string graph6;
  std::string coloring_path;
  std::vector<int> ts;
  int t = 3;
  int n = 0;
  int r = 0;
  int n_max = 0;
  int trials = 0;
  std::uint64_t seed = 1;
  int shards = 1;
  int shard = -1;
  int workers = 1;
  double root_tol = kRootTolerance;
  double grid_step = kGridStep;
  std::string csv;
  std::string quantity = "pi";
  std::string direction = "max";
  std::string suite;
};

GraphFamily load_coloring(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open coloring file " + path);
  return parse_coloring(in);
}

// Writes to --csv when given, stdout otherwise.
template <typename Fn>
void with_csv_stream(const std::string& path, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  fn(out);
}

int print_report(const std::string& name, const Report& report) {
  for (const auto& line : report.notes()) std::cout << "  " << line << '\n';
  for (const auto& line : report.failures()) std::cout << "  violation: " << line << '\n';
  if (report.failure_count() > report.failures().size())
    std::cout << "  ... " << report.failure_count() - report.failures().size() << " more violations\n";
  std::cout << name << ": " << (report.ok() ? "pass" : "FAIL") << '\n';
  return report.ok() ? kOk : kViolation;
}

int cmd_count(const Options& o) {
  if (o.graph6.empty() == o.coloring_path.empty()) throw InputError("give exactly one of --graph6 or --coloring");
  if (!o.graph6.empty()) {
    const Graph g = parse_graph6(o.graph6);
    const auto p = ng_profile(g);
    std::cout << "n " << g.order() << "\nk " << p.cliques.total << "\ni " << p.independents.total << "\nsigma " << p.sigma()
              << "\npi " << p.pi() << '\n';
    for (int t : o.ts) {
      if (t < 0) throw InputError("--t must be non-negative");
      std::cout << "k_" << t << ' ' << p.cliques.at(t) << "\ni_" << t << ' ' << p.independents.at(t) << "\nsigma_" << t << ' '
                << p.sigma_t(t) << "\npi_" << t << ' ' << p.pi_t(t) << '\n';
    }
    return kOk;
  }
  const GraphFamily fam = load_coloring(o.coloring_path);
  std::cout << "n " << fam.order() << "\nr " << fam.colors() << '\n';
  const auto counts = member_clique_counts(fam);
  for (std::size_t i = 0; i < counts.size(); ++i) std::cout << "k(G_" << i + 1 << ") " << counts[i] << '\n';
  std::cout << "sum " << sum_clique_counts(fam) << "\nproduct " << product_clique_counts(fam) << "\ntotal "
            << (fam.covers_all_edges() ? "yes" : "no") << '\n';
  return kOk;
}

int cmd_compress(const Options& o) {
  if (o.graph6.empty()) throw InputError("--graph6 is required");
  const Graph g = parse_graph6(o.graph6);
  const auto trace = compress_to_threshold(g);
  std::cout << "pivots " << trace.pivots.size() << '\n';
  for (const auto& p : trace.pivots) std::cout << "  " << p.source << " -> " << p.target << '\n';
  std::cout << "result " << emit_graph6(trace.result) << "\ncode " << recognize(trace.result)->to_display() << '\n';
  const auto before = ng_profile(g), after = ng_profile(trace.result);
  std::cout << "pi " << before.pi() << " -> " << after.pi() << '\n';
  return kOk;
}

int cmd_verify(const Options& o) {
  Report report;
  const auto pick = [](int given, int fallback) { return given > 0 ? given : fallback; };
  if (o.suite == "compression") {
    const int n_max = pick(o.n_max, 12);
    if (n_max < 2 || n_max > 20) throw InputError("--n-max must lie in [2, 20] for compression");
    check_compression(report, pick(o.trials, 10000), n_max, o.seed);
  } else if (o.suite == "thresholds") {
    const int n_max = pick(o.n_max, 16);
    if (n_max > 24) throw InputError("--n-max must be at most 24 for thresholds");
    check_threshold_closed_forms(report, pick(o.trials, 1000), n_max, o.seed);
  } else if (o.suite == "borders") {
    const int n_max = pick(o.n_max, 20);
    if (n_max > 2 * kMaxBorderSide) throw InputError("--n-max too large for exhaustive borders");
    if (o.t < 1) throw InputError("--t must be positive");
    check_border_turns(report, o.t, n_max);
  } else if (o.suite == "continuous") {
    std::vector<int> ts = o.ts.empty() ? std::vector<int>{3, 4, 5} : o.ts;
    for (int t : ts)
      if (t < 3) throw InputError("--t must be at least 3 for the continuous layer");
    if (!(o.grid_step > 0 && o.grid_step < 0.5) || !(o.root_tol > 0)) throw InputError("bad tolerance");
    check_continuous(report, ts, o.root_tol, o.grid_step);
  } else if (o.suite == "multicolor") {
    check_sandwich(report, pick(o.trials, 100), 8, 3, o.seed);
    check_multicolor_sum_k4(report);
    check_covering_bounds(report, 5, 1000, 6, o.seed);
    check_tournaments(report);
  } else if (o.suite == "extremal") {
    const int n_max = pick(o.n_max, 6);
    if (n_max > kMaxExhaustiveOrderSmallT) throw InputError("--n-max must be at most 8 for extremal");
    const int whole = std::min(n_max, kMaxExhaustiveOrder);
    check_complete_empty_maximize(report, Quantity::pi, whole, o.shards, o.workers);
    check_complete_empty_maximize(report, Quantity::sigma, whole, o.shards, o.workers);
    check_pi_t_chain(report, 3, n_max, o.shards, o.workers);
  } else {
    throw InputError("unknown suite '" + o.suite + "'");
  }
  return print_report(o.suite, report);
}

int cmd_bounds(const Options& o) {
  if (o.n < 1) throw InputError("--n must be positive");
  std::cout.precision(12);
  const BigInt n = o.n;
  std::cout << "n " << o.n << "\npi_upper (n+1)2^n " << (n + 1) * (BigInt(1) << o.n) << "\nsigma_upper 2^n+n+1 "
            << (BigInt(1) << o.n) + n + 1 << '\n';
  if (o.t >= 3) {
    const auto lead = mu_t(o.t);
    const auto codes = extremal_codes(o.n, o.t);
    std::cout << "t " << o.t << "\nmu_t " << lead.mu << "\nf_t(mu_t) " << lead.value << "\nleading_term " << lead.bound(o.n)
              << "\ncode_disjoint " << codes.disjoint.to_display() << "\ncode_joined " << codes.joined.to_display() << '\n';
    if (o.n <= 62) std::cout << "pi_t(code) " << pi_t(build(codes.disjoint), o.t) << '\n';
  }
  if (o.r >= 2) {
    const int q = log_floor(o.n, o.r);
    const auto a = good_sequence_recursion(o.n, o.r, q);
    const Rational cert = Rational(good_sequence_lower_bound(o.n, o.r, q)) / Rational(factorial(q));
    const int blocks = o.r * (o.r - 1) / 2;
    const BigInt construction = big_pow(BigInt(o.n / blocks), blocks) << o.n;
    std::cout << "r " << o.r << "\nq " << q << "\na";
    for (int v : a) std::cout << ' ' << v;
    std::cout << "\ncertificate_bound " << cert << "\nconstruction_bound " << construction
              << "\ncovering_tuple_bound " << covering_tuple_bound(o.n, o.r) << "\nproduct_upper " << multicolor_upper_bound(o.n, o.r)
              << "\nsum_upper " << multicolor_sum_bound(o.n, o.r) << '\n';
  }
  if (!o.graph6.empty()) {
    const Graph g = parse_graph6(o.graph6);
    if (g.order() != o.n) throw InputError("--graph6 order differs from --n");
    const auto p = ng_profile(g);
    std::cout << "instance_sigma " << p.sigma() << "\ninstance_pi " << p.pi() << '\n';
    if (o.t >= 1) std::cout << "instance_pi_t " << p.pi_t(o.t) << '\n';
  }
  return kOk;
}

int cmd_extremal(const Options& o) {
  const Quantity q = parse_quantity(o.quantity);
  const Direction d = parse_direction(o.direction);
  ExtremalRecord rec;
  if (is_graph_quantity(q)) {
    if (o.r != 0) throw InputError("--r applies only to sum/product");
    if (o.shard >= 0)
      rec = exhaustive_extremal(o.n, q, d, o.t, ShardSpec{o.shards, o.shard});
    else
      rec = exhaustive_extremal_sharded(o.n, q, d, o.t, o.shards, o.workers);
  } else {
    if (o.r < 1) throw InputError("--r is required for sum/product");
    rec = exhaustive_coloring_extremal(o.n, o.r, q, d, ShardSpec{o.shard >= 0 ? o.shards : 1, std::max(o.shard, 0)});
  }
  if (!verify_record(rec)) {
    std::cerr << "witness re-evaluation failed\n";
    return kViolation;
  }
  with_csv_stream(o.csv, [&](std::ostream& out) {
    write_extremal_csv_header(out);
    write_extremal_csv_row(out, rec);
  });
  return kOk;
}

int cmd_random_exponent(const Options& o) {
  const auto study = random_pi_exponent(o.n, o.trials > 0 ? o.trials : 50, o.seed);
  with_csv_stream(o.csv, [&](std::ostream& out) { write_exponent_csv(out, study); });
  std::cerr.precision(6);
  std::cerr << "ratio min " << study.min << " median " << study.median << " max " << study.max << " (advisory)\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nordhaus-Gaddum clique counting and verification.\n"
               "CSV headers: extremal -> n,r,quantity,t,direction,value,witness_count,witnesses;\n"
               "random-exponent -> trial,n,seed,k,i,ratio"};
  app.require_subcommand(1);
  Options o;

  auto* count = app.add_subcommand("count", "clique counts of a graph6 graph or a coloring file");
  count->add_option("--graph6", o.graph6, "graph in graph6 format");
  count->add_option("--coloring", o.coloring_path, "coloring file: header 'n r', then lines 'u v c'");
  count->add_option("--t", o.ts, "sizes for k_t, i_t, sigma_t, pi_t");

  auto* compress_cmd = app.add_subcommand("compress", "compress to a threshold graph and print the pivot trace");
  compress_cmd->add_option("--graph6", o.graph6, "graph in graph6 format")->required();

  auto* verify = app.add_subcommand("verify", "run a property suite");
  verify->add_option("suite", o.suite, "compression, thresholds, borders, continuous, multicolor or extremal")->required();
  verify->add_option("--trials", o.trials, "random trials");
  verify->add_option("--n-max", o.n_max, "largest order");
  verify->add_option("--seed", o.seed, "RNG seed");
  verify->add_option("--t", o.ts, "clique size(s)");
  verify->add_option("--shards", o.shards, "shards for exhaustive scans")->check(CLI::PositiveNumber);
  verify->add_option("--workers", o.workers, "threads for sharded scans")->check(CLI::PositiveNumber);
  verify->add_option("--root-tol", o.root_tol, "root tolerance")->capture_default_str();
  verify->add_option("--grid-step", o.grid_step, "simplex grid step")->capture_default_str();

  auto* bounds_cmd = app.add_subcommand("bounds", "analytic bounds table");
  bounds_cmd->add_option("--n", o.n, "order")->required();
  bounds_cmd->add_option("--t", o.t, "clique size for the leading-term bound (>= 3)");
  bounds_cmd->add_option("--r", o.r, "colors for the multicolor bounds");
  bounds_cmd->add_option("--graph6", o.graph6, "instance to evaluate alongside");

  auto* extremal = app.add_subcommand("extremal", "exhaustive min/max scan");
  extremal->add_option("--n", o.n, "order")->required();
  extremal->add_option("--quantity", o.quantity, "sigma, pi, sigma_t, pi_t, sum or product")->capture_default_str();
  extremal->add_option("--direction", o.direction, "min or max")->capture_default_str();
  extremal->add_option("--t", o.t, "size for sigma_t / pi_t");
  extremal->add_option("--r", o.r, "colors for sum / product");
  extremal->add_option("--shards", o.shards, "shard count K")->check(CLI::PositiveNumber);
  extremal->add_option("--shard", o.shard, "run only shard k of K");
  extremal->add_option("--workers", o.workers, "threads when running all shards")->check(CLI::PositiveNumber);
  extremal->add_option("--csv", o.csv, "output path (default stdout)");

  auto* exponent = app.add_subcommand("random-exponent", "log pi / (log n log2 n) on random graphs (advisory)");
  exponent->add_option("--n", o.n, "order")->required();
  exponent->add_option("--trials", o.trials, "samples (default 50)");
  exponent->add_option("--seed", o.seed, "RNG seed");
  exponent->add_option("--csv", o.csv, "output path (default stdout)");

  // Commands that take --t as a single value.
  for (auto* cmd : {bounds_cmd, extremal})
    cmd->callback([&o] {
      if (o.t < 0) throw CLI::ValidationError("--t", "must be non-negative");
    });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*count) return cmd_count(o);
    if (*compress_cmd) return cmd_compress(o);
    if (*verify) {
      if (o.ts.size() == 1) o.t = o.ts.front();
      return cmd_verify(o);
    }
    if (*bounds_cmd) return cmd_bounds(o);
    if (*extremal) return cmd_extremal(o);
    if (*exponent) return cmd_random_exponent(o);
  } catch (const Graph6Error& e) {
    std::cerr << "graph6 error: " << e.what() << '\n';
  } catch (const ColoringParseError& e) {
    std::cerr << "coloring error: " << e.what() << '\n';
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kInputError;
}
