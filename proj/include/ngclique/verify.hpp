#pragma once

// Property suites shared by `ngc verify` and the acceptance runner. Each check
// appends to a Report; a check passes when it records no failure.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ngclique/bounds.hpp"
#include "ngclique/compression.hpp"
#include "ngclique/counting.hpp"
#include "ngclique/graph6.hpp"
#include "ngclique/multicolor.hpp"
#include "ngclique/packing.hpp"
#include "ngclique/random.hpp"
#include "ngclique/search.hpp"
#include "ngclique/threshold.hpp"

namespace ngc {

class Report {
public:
  static constexpr std::size_t kMaxListed = 20;

  void fail(std::string what) {
    ++failure_count_;
    if (failures_.size() < kMaxListed) failures_.push_back(std::move(what));
  }
  void note(std::string what) { notes_.push_back(std::move(what)); }

  bool ok() const { return failure_count_ == 0; }
  std::uint64_t failure_count() const { return failure_count_; }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

private:
  std::uint64_t failure_count_ = 0;
  std::vector<std::string> failures_;  // first kMaxListed only
  std::vector<std::string> notes_;
};

namespace detail {

template <typename... Args>
std::string cat(const Args&... args) {
  std::ostringstream out;
  (out << ... << args);
  return out.str();
}

inline std::string join(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
  return out + ")";
}

inline std::pair<Vertex, Vertex> random_pair(Rng& rng, int n) {
  const auto x = static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(n)));
  auto y = static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(n - 1)));
  if (y >= x) ++y;
  return {x, y};
}

inline ThresholdCode random_code(Rng& rng, int n) {
  std::vector<Sign> symbols;
  for (int k = 0; k + 1 < n; ++k) symbols.push_back((rng() & 1U) ? Sign::plus : Sign::minus);
  return ThresholdCode(std::move(symbols));
}

}  // namespace detail

/// Independent-set counts (every size) of G and its complement never drop
/// under one compression; compress_to_threshold ends in a threshold graph
/// within n^2 pivots and pi, pi_t never drop along its trace.
inline void check_compression(Report& report, int trials, int n_max, std::uint64_t seed) {
  std::size_t most_pivots = 0;
  for (int k = 0; k < trials; ++k) {
    Rng rng = trial_rng(seed, static_cast<std::uint64_t>(k));
    const int n = 2 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n_max - 1)));
    const Graph g = sample_random_graph(n, rng);
    const auto [x, y] = detail::random_pair(rng, n);
    const Graph out = compress(g, x, y);
    const auto before = ng_profile(g), after = ng_profile(out);
    for (int t = 0; t <= n; ++t) {
      // The complement's independent sets are the cliques of G.
      if (after.independents.at(t) < before.independents.at(t) || after.cliques.at(t) < before.cliques.at(t))
        report.fail(detail::cat("trial ", k, ": size-", t, " count drops compressing ", x, "->", y, " in ", emit_graph6(g)));
    }

    const auto trace = compress_to_threshold(g);
    most_pivots = std::max(most_pivots, trace.pivots.size());
    if (trace.pivots.size() > static_cast<std::size_t>(n * n))
      report.fail(detail::cat("trial ", k, ": ", trace.pivots.size(), " pivots for n = ", n, " on ", emit_graph6(g)));
    if (!is_threshold(trace.result)) report.fail(detail::cat("trial ", k, ": non-threshold result from ", emit_graph6(g)));
    Graph cur = g;
    auto prev = before;
    for (const auto& p : trace.pivots) {
      cur = compress(cur, p.source, p.target);
      const auto next = ng_profile(cur);
      bool dropped = next.pi() < prev.pi();
      for (int t = 0; t <= n; ++t) dropped = dropped || next.pi_t(t) < prev.pi_t(t);
      if (dropped) report.fail(detail::cat("trial ", k, ": pi drops at pivot ", p.source, "->", p.target, " from ", emit_graph6(g)));
      prev = next;
    }
    if (cur != trace.result) report.fail(detail::cat("trial ", k, ": replayed trace differs for ", emit_graph6(g)));
  }
  report.note(detail::cat(trials, " trials, n <= ", n_max, ", most pivots ", most_pivots));
}

/// Closed-form S_K / S_I against clique profiles, recognition round trip and
/// complement codes on random threshold codes.
inline void check_threshold_closed_forms(Report& report, int trials, int n_max, std::uint64_t seed) {
  for (int k = 0; k < trials; ++k) {
    Rng rng = trial_rng(seed, static_cast<std::uint64_t>(k));
    const int n = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n_max)));
    const ThresholdCode code = detail::random_code(rng, n);
    const Graph g = build(code);
    const auto sd = split_degrees(g);
    const auto ng = ng_profile(g);
    for (int t = 2; t <= 4; ++t) {
      const auto cf = closed_form_counts(sd, t);
      if (BigInt(cf.cliques) != ng.cliques.at(t) || BigInt(cf.independents) != ng.independents.at(t))
        report.fail(detail::cat("code ", code.to_display(), " t = ", t, ": closed form ", cf.cliques, "/", cf.independents,
                                " vs counted ", ng.cliques.at(t), "/", ng.independents.at(t)));
    }
    const auto d = decompose_threshold(g);
    if (!d || build(d->code).relabeled(d->insertion) != g) report.fail("recognition round trip fails for " + code.to_display());
    if (build(complement(code)) != complement(g)) report.fail("complement code mismatch for " + code.to_display());
  }
  report.note(detail::cat(trials, " codes, n <= ", n_max, ", t in {2,3,4}"));
}

/// Every exhaustive border maximum with r + s <= n_max has at most one turn.
inline void check_border_turns(Report& report, int t, int n_max) {
  std::uint64_t splits = 0;
  std::set<int> bad_orders;
  for (int n = 1; n <= n_max; ++n) {
    for (int r = 0; r <= n; ++r) {
      ++splits;
      const auto best = discrete_border_max(r, n - r, t);
      if (best.turns() > 1) {
        bad_orders.insert(n);
        report.fail(detail::cat("r = ", r, ", s = ", n - r, ": argmax b = ", detail::join(best.b), " has ", best.turns(),
                                " turns, product ", best.product));
      }
    }
    const auto overall = discrete_border_max_all_splits(n, t);
    if (overall.turns() > 1)
      report.note(detail::cat("n = ", n, ": best over all splits (r = ", overall.r, ", b = ", detail::join(overall.b), ") has ",
                              overall.turns(), " turns"));
  }
  report.note(detail::cat(splits, " rectangles scanned, ", report.failure_count(), " with a multi-turn argmax"));
}

/// Continuous layer: simplex maxima on the a = 0 or b = 0 faces, lambda*(3) = 2,
/// and mu_t against the numeric root of f_t'.
inline void check_continuous(Report& report, const std::vector<int>& ts, double root_tol, double grid_step) {
  for (int t : ts) {
    const auto m = simplex_grid_max(t, grid_step);
    if (!(m.a <= root_tol || m.b <= root_tol))
      report.fail(detail::cat("t = ", t, ": simplex max at interior point a = ", m.a, ", b = ", m.b));
    const double closed = mu_t_closed_form(t), numeric = mu_t_numeric(t);
    if (std::abs(closed - numeric) > root_tol)
      report.fail(detail::cat("t = ", t, ": mu closed form ", closed, " vs root ", numeric));
    const double l = lambda_star(t);
    if (std::abs(lambda_residual(t, l)) > root_tol * std::pow(1 + l, t - 1))
      report.fail(detail::cat("t = ", t, ": lambda* residual ", lambda_residual(t, l)));
    report.note(detail::cat("t = ", t, ": simplex max ", m.value, " at (", m.a, ", ", m.b, ", ", m.c, "), mu = ", closed,
                            ", lambda* = ", l));
  }
  if (lambda_star(3) != 2.0) report.fail(detail::cat("lambda*(3) = ", lambda_star(3), ", expected exactly 2"));
  if (std::abs(mu_t_closed_form(3) - (1 + std::sqrt(17.0)) / 8) > root_tol) report.fail("mu_3 differs from (1 + sqrt 17) / 8");
}

/// prod a_i <= |X(G,q)| <= q! prod k(G_i) on random total colorings.
inline void check_sandwich(Report& report, int trials, int n_max, int q_max, std::uint64_t seed) {
  for (int k = 0; k < trials; ++k) {
    Rng rng = trial_rng(seed, static_cast<std::uint64_t>(k));
    const int r = 2 + static_cast<int>(uniform_below(rng, 2));
    const int n = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n_max)));
    const auto fam = sample_random_coloring(n, r, rng);
    const BigInt product = product_clique_counts(fam);
    for (int q = 0; q <= q_max; ++q) {
      const BigInt x = count_good_sequences(fam, q);
      const BigInt lower = good_sequence_lower_bound(n, r, q);
      if (lower > x || x > factorial(q) * product)
        report.fail(detail::cat("n = ", n, ", r = ", r, ", q = ", q, ": ", lower, " <= ", x, " <= ", factorial(q) * product,
                                " fails for ", coloring_blob(fam)));
    }
    const auto cert = good_sequence_certificate(fam);
    if (!verify_certificate(fam, cert)) report.fail("invalid certificate for " + coloring_blob(fam));
  }
  report.note(detail::cat(trials, " colorings, n <= ", n_max, ", r in {2,3}, q <= ", q_max));
}

/// All 3^6 colorings of K_4: sum of k(G_i) <= 26 with equality exactly on the
/// monochromatic ones.
inline void check_multicolor_sum_k4(Report& report) {
  const int n = 4, r = 3;
  const BigInt bound = multicolor_sum_bound(n, r);
  std::uint64_t equal = 0, scanned = 0;
  std::vector<int> colors(static_cast<std::size_t>(pair_count(n)));
  for (std::uint64_t x = 0; x < 729; ++x) {
    std::uint64_t rest = x;
    for (auto& c : colors) {
      c = static_cast<int>(rest % 3) + 1;
      rest /= 3;
    }
    const auto fam = GraphFamily::from_slot_colors(n, r, colors);
    const BigInt s = sum_clique_counts(fam);
    const bool mono = std::all_of(colors.begin(), colors.end(), [&](int c) { return c == colors.front(); });
    ++scanned;
    if (s > bound) report.fail(detail::cat("sum ", s, " exceeds ", bound, " on ", coloring_blob(fam)));
    if ((s == bound) != mono) report.fail(detail::cat("equality mismatch on ", coloring_blob(fam), " (sum ", s, ")"));
    equal += s == bound;
  }
  if (bound != 26) report.fail(detail::cat("bound evaluates to ", bound));
  if (equal != 3) report.fail(detail::cat(equal, " colorings attain the bound"));
  report.note(detail::cat(scanned, " colorings, ", equal, " attain ", bound));
}

/// Covering tuples <= (4r-2)^{r(r-1)} n^{C(r,2)} and prod k(G_i) <= that times 2^n:
/// every two-color edge-disjoint family with n <= exhaustive_n, plus sampled
/// three-color families with n <= sample_n.
inline void check_covering_bounds(Report& report, int exhaustive_n, int samples, int sample_n, std::uint64_t seed) {
  std::uint64_t families = 0;
  auto check = [&](const GraphFamily& fam) {
    ++families;
    const BigInt tuples = count_covering_tuples(fam);
    if (tuples > covering_tuple_bound(fam.order(), fam.colors()))
      report.fail(detail::cat("covering tuples ", tuples, " exceed the bound on ", coloring_blob(fam)));
    if (product_clique_counts(fam) > multicolor_upper_bound(fam.order(), fam.colors()))
      report.fail(detail::cat("product ", product_clique_counts(fam), " exceeds the bound on ", coloring_blob(fam)));
  };
  for (int n = 1; n <= exhaustive_n; ++n) {
    const int slots = pair_count(n);
    std::uint64_t total = 1;
    for (int k = 0; k < slots; ++k) total *= 3;
    std::vector<int> colors(static_cast<std::size_t>(slots));
    for (std::uint64_t x = 0; x < total; ++x) {
      std::uint64_t rest = x;
      for (auto& c : colors) {
        c = static_cast<int>(rest % 3);
        rest /= 3;
      }
      check(GraphFamily::from_slot_colors(n, 2, colors));
    }
  }
  for (int k = 0; k < samples; ++k) {
    Rng rng = trial_rng(seed, static_cast<std::uint64_t>(k));
    const int n = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(sample_n)));
    check(sample_partial_coloring(n, 3, rng));
  }
  report.note(detail::cat(families, " families checked"));
}

/// Tournament construction for r = 3, n in {3, 6, 9}: edge-disjoint members and
/// prod k(G_i) >= 2^n (n/3)^3; the cyclic n = 3 instance gives exactly 125.
inline void check_tournaments(Report& report) {
  for (const auto& [name, t] : {std::pair{"transitive", Tournament(3)}, std::pair{"cyclic", Tournament::cyclic(3)}}) {
    for (int n : {3, 6, 9}) {
      const auto fam = tournament_construction(n, 3, t);
      // GraphFamily's constructor rejects shared edges; re-check pairwise anyway.
      for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
          for (Vertex v = 0; v < n; ++v)
            if (fam.member(a).row(v) & fam.member(b).row(v)) report.fail(detail::cat(name, " n = ", n, ": members share an edge"));
      const BigInt product = product_clique_counts(fam);
      const BigInt target = big_pow(BigInt(n / 3), 3) << n;
      if (product < target) report.fail(detail::cat(name, " n = ", n, ": product ", product, " < ", target));
      report.note(detail::cat(name, " n = ", n, ": product ", product, " >= ", target));
    }
  }
  const BigInt cyclic3 = product_clique_counts(tournament_construction(3, 3, Tournament::cyclic(3)));
  if (cyclic3 != 125) report.fail(detail::cat("cyclic n = 3 product ", cyclic3, ", expected 125"));
}

/// Exhaustive max of pi (or sigma) over labeled graphs equals the value of
/// K_n and E_n, and those are the only maximizers.
inline void check_complete_empty_maximize(Report& report, Quantity q, int n_max, int shards, int workers = 1) {
  for (int n = 1; n <= n_max; ++n) {
    const auto rec = exhaustive_extremal_sharded(n, q, Direction::max, 0, shards, workers);
    const BigInt expected = q == Quantity::pi ? (BigInt(n) + 1) << n : (BigInt(1) << n) + n + 1;
    const std::set<std::string> want{emit_graph6(Graph::complete(n)), emit_graph6(Graph(n))};
    const std::set<std::string> got(rec.witnesses.begin(), rec.witnesses.end());
    if (*rec.value != expected) report.fail(detail::cat("n = ", n, ": max ", to_string(q), " = ", *rec.value, ", expected ", expected));
    if (got != want || rec.witness_count != want.size())
      report.fail(detail::cat("n = ", n, ": ", rec.witness_count, " maximizers, not exactly {K_n, E_n}"));
    if (!verify_record(rec)) report.fail(detail::cat("n = ", n, ": witness re-evaluation failed"));
    report.note(detail::cat("n = ", n, ": max ", to_string(q), " = ", *rec.value, " (", rec.witness_count, " witnesses)"));
  }
}

/// Max pi_t over all graphs = max over threshold codes = max over one-turn codes.
inline void check_pi_t_chain(Report& report, int t, int n_max, int shards, int workers = 1) {
  for (int n = 1; n <= n_max; ++n) {
    const auto rec = exhaustive_extremal_sharded(n, Quantity::pi_t, Direction::max, t, shards, workers);
    BigInt threshold_best = -1, one_turn_best = -1;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n - 1)); ++bits) {
      std::vector<Sign> symbols;
      for (int k = 0; k + 1 < n; ++k) symbols.push_back((bits >> k) & 1U ? Sign::plus : Sign::minus);
      const ThresholdCode code(std::move(symbols));
      const BigInt v = pi_t(build(code), t);
      threshold_best = std::max(threshold_best, v);
      if (code.sign_changes() <= 1) one_turn_best = std::max(one_turn_best, v);
    }
    if (threshold_best != *rec.value || one_turn_best != *rec.value)
      report.fail(detail::cat("n = ", n, ": all graphs ", *rec.value, ", threshold ", threshold_best, ", one-turn ", one_turn_best));
    report.note(detail::cat("n = ", n, ": max pi_", t, " = ", *rec.value, " (", rec.witness_count, " labeled maximizers)"));
  }
}

/// The one-turn code at the rounded mu_t split reaches `fraction` of the leading term.
inline void check_leading_term(Report& report, int n, int t, double fraction) {
  const auto codes = extremal_codes(n, t);
  const BigInt value = pi_t(build(codes.disjoint), t);
  const double lead = mu_t(t).bound(n);
  const double ratio = value.convert_to<double>() / lead;
  if (pi_t(build(codes.joined), t) != value) report.fail("joined and disjoint extremal codes disagree");
  if (ratio < fraction)
    report.fail(detail::cat("n = ", n, ": pi_", t, " = ", value, " is ", ratio, " of the leading term ", lead, ", below ", fraction));
  report.note(detail::cat("n = ", n, ": code ", codes.disjoint.to_display(), " gives pi_", t, " = ", value, ", ratio ", ratio));
}

/// random_pi_exponent runs to completion and repeats exactly under a fixed seed.
inline void check_exponent_logging(Report& report, int n, int trials, std::uint64_t seed) {
  const auto a = random_pi_exponent(n, trials, seed);
  const auto b = random_pi_exponent(n, trials, seed);
  if (a.trials.size() != static_cast<std::size_t>(trials)) report.fail("missing trials");
  for (std::size_t k = 0; k < a.trials.size() && k < b.trials.size(); ++k) {
    if (!std::isfinite(a.trials[k].ratio)) report.fail(detail::cat("trial ", k, ": non-finite ratio"));
    if (a.trials[k].ratio != b.trials[k].ratio || a.trials[k].cliques != b.trials[k].cliques)
      report.fail(detail::cat("trial ", k, ": rerun differs"));
  }
  report.note(detail::cat("n = ", n, ", ", trials, " trials, seed ", seed, ": ratio min ", a.min, ", median ", a.median, ", max ", a.max));
}

}  // namespace ngc
