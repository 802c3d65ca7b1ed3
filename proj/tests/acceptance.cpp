// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "oracles.hpp"
#include "planarlab/blocks.hpp"
#include "planarlab/bounds.hpp"
#include "planarlab/montecarlo.hpp"
#include "planarlab/reduction.hpp"
#include "planarlab/solvers.hpp"

using namespace planarlab;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

unsigned workers() {
  if (const char* env = std::getenv("PLANARLAB_WORKERS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

std::uint32_t below(RngStream& rng, std::uint64_t bound) {
  return static_cast<std::uint32_t>(rng.next_below(bound));
}

Outcome oracle_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  std::size_t mismatches = 0;
  std::size_t brute_checked = 0;
  for (std::uint64_t t = 0; t < 500; ++t) {
    RngStream rng(1001, t);
    const auto g = oracle::random_graph(1 + below(rng, 6), 1 + below(rng, 6),
                                        0.1 + 0.6 * rng.next_unit(), rng);
    const std::size_t size = planar_matching_size(g);
    if (size != oracle::planar_table(g)) ++mismatches;
    if (g.edge_count() <= kBruteForceEdgeLimit) {
      ++brute_checked;
      if (size != brute_force_planar_size(g)) ++mismatches;
    }
  }
  for (std::uint64_t t = 0; t < 1000; ++t) {
    RngStream rng(1002, t);
    const WordPair w = sample_word_pair(1 + below(rng, 64), 1 + below(rng, 64), 1 + below(rng, 10), rng);
    const std::size_t dp = lcs_length_dp(w);
    if (dp != lcs_length_sparse(w) || dp != planar_matching_size(words_to_graph(w))) ++mismatches;
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {mismatches == 0 && secs < 10.0,
          fmt("mismatches=%zu brute_checked=%zu/500 time=%.2fs", mismatches, brute_checked, secs)};
}

Outcome sandwich() {
  const RegimeCheck regime = prop5_regime_check(5000, 5000, 1e6, 0.5, 25, Prop5Side::kUpper);
  ExperimentConfig cfg;
  cfg.model = Model::kWords;
  cfg.set_n(5000);
  cfg.k = 1'000'000;
  cfg.trials = 10'000;
  cfg.master_seed = 20261016;
  cfg.workers = workers();
  const EstimateSummary s = run_experiment(cfg);
  const double lo = m_lower(5000, 5000, 1e6, 0.5);
  const double hi = m_upper(5000, 5000, 1e6, 0.5);
  return {regime.holds && s.mean >= lo && s.mean <= hi,
          fmt("mean=%.4f se=%.4f interval=[%g, %g] regime=%s", s.mean, s.std_error, lo, hi,
              regime.holds ? "holds" : regime.failed.c_str())};
}

Outcome words_trend() {
  std::string detail;
  bool ok = true;
  double prev = 0;
  double prev_se = 0;
  double last = 0;
  for (const std::uint32_t k : {64U, 256U, 1024U, 4096U}) {
    ExperimentConfig cfg;
    cfg.model = Model::kWords;
    cfg.set_n(static_cast<std::uint32_t>(std::lround(512 * std::sqrt(static_cast<double>(k)))));
    cfg.k = k;
    cfg.trials = 100;
    cfg.master_seed = 3;
    cfg.workers = workers();
    const EstimateSummary s = run_experiment(cfg);
    const double se = s.std_error / s.centering;
    if (k != 64 && !nondecreasing_within_2se(prev, prev_se, s.normalized, se)) ok = false;
    detail += fmt("k=%u:%.4f(%.4f) ", k, s.normalized, se);
    prev = s.normalized;
    prev_se = se;
    last = s.normalized;
  }
  ok = ok && last >= 0.85 && last <= 1.02;
  return {ok, detail + "bracket=[0.85, 1.02]"};
}

Outcome binomial_limit() {
  ExperimentConfig cfg;
  cfg.model = Model::kBinomial;
  cfg.set_n(16384);
  cfg.p = 1.0 / 1024;
  cfg.trials = 100;
  cfg.master_seed = 9;
  cfg.workers = workers();
  const EstimateSummary s = run_experiment(cfg);
  return {s.normalized >= 0.85 && s.normalized <= 1.02,
          fmt("normalized=%.4f se=%.4f bracket=[0.85, 1.02]", s.normalized,
              s.std_error / s.centering)};
}

Outcome lis_centering() {
  ExperimentConfig cfg;
  cfg.model = Model::kPermutation;
  cfg.r = 40000;
  cfg.trials = 200;
  cfg.master_seed = 5;
  cfg.tail_thresholds = {0.1, 0.2};
  cfg.workers = workers();
  const EstimateSummary s = run_experiment(cfg);
  const bool tails_ok = s.tails.size() == 2 && s.tails[1].frequency <= s.tails[0].frequency;
  return {s.normalized >= 0.93 && s.normalized <= 1.0 && tails_ok,
          fmt("normalized=%.4f tail(0.1)=%.3f tail(0.2)=%.3f bracket=[0.93, 1.0]", s.normalized,
              s.tails.at(0).frequency, s.tails.at(1).frequency)};
}

Outcome odb_limit_check() {
  ExperimentConfig cfg;
  cfg.model = Model::kOdb;
  cfg.set_n(2000);
  cfg.p = 0.3;
  cfg.trials = 50;
  cfg.master_seed = 11;
  cfg.workers = workers();
  const auto start = std::chrono::steady_clock::now();
  const EstimateSummary s = run_experiment(cfg);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const double target = odb_limit(0.3).value;
  const double per_n = s.mean / 2000.0;
  return {std::abs(per_n - target) <= 0.03 && secs < 60.0,
          fmt("height/n=%.5f target=%.5f time=%.1fs", per_n, target, secs)};
}

Outcome dominances() {
  const OdbDominanceResult odb = odb_dominance_experiment(500, 0.3, 100, 21, workers());
  const CouplingResult coupling = coupling_experiment(300, 0.5, 50, 22, workers());
  const SplitInfo split = split_experiment(4096, 256, 8, 100, 23, workers());
  return {odb.violations == 0 && coupling.violations == 0 && split.violations == 0,
          fmt("odb=%llu/100 coupling=%llu/50 split=%llu/100 violations; weighted/n=%.3f "
              "(reference %.4f, reported only)",
              static_cast<unsigned long long>(odb.violations),
              static_cast<unsigned long long>(coupling.violations),
              static_cast<unsigned long long>(split.violations), coupling.mean_weight_over_n,
              coupling.johansson_limit)};
}

Outcome deterministic_suite() {
  std::size_t lipschitz = 0, monotone = 0, prune = 0, blocks = 0;
  for (std::uint64_t t = 0; t < 1000; ++t) {
    RngStream rng(2001, t);
    const std::uint32_t k = 2 + below(rng, 6);
    const WordPair w = sample_word_pair(20 + below(rng, 60), 20 + below(rng, 60), k, rng);
    std::vector<std::uint32_t> a(w.word_a().begin(), w.word_a().end());
    std::vector<std::uint32_t> b(w.word_b().begin(), w.word_b().end());
    if (rng.bernoulli(0.5)) {
      a[below(rng, a.size())] = 1 + below(rng, k);
    } else {
      b[below(rng, b.size())] = 1 + below(rng, k);
    }
    const long before = static_cast<long>(lcs_length_sparse(w));
    const long after = static_cast<long>(lcs_length_sparse(WordPair(k, std::move(a), std::move(b))));
    if (std::abs(before - after) > 1) ++lipschitz;
  }
  for (std::uint64_t t = 0; t < 1000; ++t) {
    RngStream rng(2002, t);
    const auto perm = sample_permutation(101, rng);
    if (std::max(lis_length(perm), lds_length(perm)) < 11) ++monotone;
  }
  for (std::uint64_t t = 0; t < 500; ++t) {
    RngStream rng(2003, t);
    const auto g = oracle::random_graph(5 + below(rng, 20), 5 + below(rng, 20),
                                        0.02 + 0.2 * rng.next_unit(), rng);
    const auto pruned = prune_degree_ge2(g);
    const std::size_t lg = planar_matching_size(g);
    const std::size_t lp = planar_matching_size(pruned);
    const std::size_t removed = g.edge_count() - pruned.edge_count();
    if (!(prune_degree_ge2(pruned) == pruned) || lp > lg || lg > lp + removed) ++prune;
  }
  const std::uint64_t ells[] = {1, 3, 8, 20};
  const std::uint64_t emaxes[] = {1, 2, 5, 12, 40};
  for (std::uint64_t t = 0; t < 200; ++t) {
    RngStream rng(2004, t);
    const auto g = oracle::random_graph(40 + below(rng, 80), 40 + below(rng, 80), 0.05, rng);
    const PlanarMatching m = planar_matching_recover(g);
    const double delta = 0.05 + 0.9 * rng.next_unit();
    for (const auto ell : ells) {
      for (const auto e_max : emaxes) {
        const BlockPartition p = classify_and_enlarge(build_block_partition(m, ell, e_max), delta);
        if (!check_block_invariants(p, m, delta).empty()) ++blocks;
      }
    }
  }
  return {lipschitz + monotone + prune + blocks == 0,
          fmt("failures: lipschitz=%zu/1000 monotone=%zu/1000 prune=%zu/500 blocks=%zu/4000",
              lipschitz, monotone, prune, blocks)};
}

Outcome exact_formulas() {
  constexpr int kTrials = 10000;
  double sum = 0;
  double sum2 = 0;
  for (int t = 0; t < kTrials; ++t) {
    RngStream rng(3001, static_cast<std::uint64_t>(t));
    const auto g = words_to_graph(sample_word_pair(1000, 1000, 100000, rng));
    const double y = static_cast<double>(edge_stats(prune_degree_ge2(g), g).y_total);
    sum += y;
    sum2 += y * y;
  }
  const double mean = sum / kTrials;
  const double se = std::sqrt((sum2 / kTrials - mean * mean) / (kTrials - 1));
  const ExpectedRemoved er = expected_removed_exact(1000, 1000, 100000);
  const bool y_ok = std::abs(mean - er.exact) <= 3 * se && er.exact <= er.crude_bound;

  std::size_t cheb_fail = 0;
  for (std::uint64_t f = 0; f < 200; ++f) {
    RngStream rng(3002, f);
    const unsigned n = 1 + below(rng, 12);
    const std::size_t outcomes = std::size_t{1} << n;
    std::vector<double> prob(outcomes);
    double total = 0;
    for (auto& w : prob) {
      w = rng.bernoulli(0.2) ? 10 * rng.next_unit() : 0.1 * rng.next_unit();
      total += w;
    }
    double ex = 0;
    double pair_sum = 0;
    for (std::size_t o = 0; o < outcomes; ++o) {
      prob[o] /= total;
      const double c = __builtin_popcountll(o);
      ex += prob[o] * c;
      pair_sum += prob[o] * c * (c - 1);
    }
    for (double t = 0.25; t <= n + 0.5; t += 0.25) {
      double tail = 0;
      for (std::size_t o = 0; o < outcomes; ++o) {
        if (std::abs(__builtin_popcountll(o) - ex) >= t) tail += prob[o];
      }
      if (tail > chebyshev_indicator_bound(ex, pair_sum, t) + 1e-12) ++cheb_fail;
    }
  }

  std::size_t sqrt_fail = 0;
  for (std::uint64_t t = 0; t < 100000; ++t) {
    RngStream rng(3003, t);
    auto draw = [&] { return rng.bernoulli(0.05) ? 0.0 : std::exp(30 * rng.next_unit() - 15); };
    const double x = draw(), xp = draw(), y = draw(), yp = draw();
    if (std::sqrt(x * y) + std::sqrt(xp * yp) > std::sqrt((x + xp) * (y + yp)) * (1 + 1e-12)) {
      ++sqrt_fail;
    }
  }
  return {y_ok && cheb_fail == 0 && sqrt_fail == 0,
          fmt("E[Y]: exact=%.5f mc=%.5f se=%.5f bound=%.3f; chebyshev failures=%zu; sqrt "
              "failures=%zu/100000",
              er.exact, mean, se, er.crude_bound, cheb_fail, sqrt_fail)};
}

Outcome reproducibility() {
  std::vector<ExperimentConfig> configs;
  ExperimentConfig words;
  words.model = Model::kWords;
  words.set_n(2000);
  words.k = 64;
  words.trials = 40;
  words.master_seed = 77;
  words.tail_thresholds = {0.05, 0.1};
  words.split_q = 4;
  configs.push_back(words);
  ExperimentConfig binomial;
  binomial.model = Model::kBinomial;
  binomial.set_n(3000);
  binomial.p = 0.002;
  binomial.trials = 40;
  binomial.master_seed = 78;
  binomial.retain_trials = true;
  configs.push_back(binomial);
  ExperimentConfig geometric;
  geometric.model = Model::kGeometric;
  geometric.set_n(120);
  geometric.p = 0.5;
  geometric.trials = 30;
  geometric.master_seed = 79;
  configs.push_back(geometric);
  ExperimentConfig odb;
  odb.model = Model::kOdb;
  odb.set_n(300);
  odb.p = 0.3;
  odb.trials = 30;
  odb.master_seed = 80;
  configs.push_back(odb);
  ExperimentConfig perm;
  perm.model = Model::kPermutation;
  perm.r = 5000;
  perm.trials = 50;
  perm.master_seed = 81;
  perm.tail_thresholds = {0.1};
  configs.push_back(perm);

  std::size_t differing = 0;
  for (ExperimentConfig cfg : configs) {
    cfg.workers = 1;
    const std::string one = summary_to_json(run_experiment(cfg)).dump(2);
    cfg.workers = 8;
    const std::string eight = summary_to_json(run_experiment(cfg)).dump(2);
    const std::string again = summary_to_json(run_experiment(cfg)).dump(2);
    if (one != eight || eight != again) ++differing;
  }
  return {differing == 0, fmt("configs=%zu differing=%zu", configs.size(), differing)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"oracle equivalence", oracle_equivalence},
      {"expectation sandwich at r=s=5000, k=1e6", sandwich},
      {"words normalized trend over k", words_trend},
      {"binomial normalized limit", binomial_limit},
      {"LIS centering and tails", lis_centering},
      {"ODB limit", odb_limit_check},
      {"pathwise dominances", dominances},
      {"deterministic property suite", deterministic_suite},
      {"exact formula cross-checks", exact_formulas},
      {"reproducibility across worker counts", reproducibility},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("AC%zu %s: %s [%s] (%.1fs)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first,
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
