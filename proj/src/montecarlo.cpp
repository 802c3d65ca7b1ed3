#include "planarlab/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>

#include "planarlab/bounds.hpp"
#include "planarlab/error.hpp"
#include "planarlab/models.hpp"
#include "planarlab/solvers.hpp"

namespace planarlab {

namespace {

__extension__ typedef __int128 Int128;

// Runs fn(t) for t in [0, trials) on `workers` threads; results land at
// index t, so the output does not depend on scheduling.
template <typename Result, typename Fn>
std::vector<Result> run_trials(std::uint64_t trials, unsigned workers, Fn fn) {
  std::vector<Result> out(trials);
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(
                                                         std::min<std::uint64_t>(trials, 1024))));
  if (workers == 1) {
    for (std::uint64_t t = 0; t < trials; ++t) out[t] = fn(t);
    return out;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::uint64_t t = next++; t < trials; t = next++) {
          try {
            out[t] = fn(t);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            next = trials;
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

double mean_of(std::uint64_t sum, std::uint64_t n) {
  return static_cast<double>(sum) / static_cast<double>(n);
}

// Unbiased variance from exact integer moments.
double unbiased_variance(std::span<const std::uint64_t> values) {
  const auto n = static_cast<Int128>(values.size());
  if (n < 2) return std::nan("");
  Int128 sum = 0;
  Int128 sum_sq = 0;
  for (const std::uint64_t v : values) {
    sum += v;
    sum_sq += static_cast<Int128>(v) * v;
  }
  const Int128 numerator = n * sum_sq - sum * sum;
  return static_cast<double>(numerator) / (static_cast<double>(n) * static_cast<double>(n - 1));
}

std::uint64_t lcs_of(const WordPair& w, WordSolver solver) {
  return solver == WordSolver::kDp ? lcs_length_dp(w) : lcs_length_sparse(w);
}

WordPair slice(const WordPair& w, std::uint32_t from, std::uint32_t len) {
  const auto a = w.word_a().subspan(from, len);
  const auto b = w.word_b().subspan(from, len);
  return WordPair(w.k(), {a.begin(), a.end()}, {b.begin(), b.end()});
}

std::uint64_t block_sum(const WordPair& w, std::uint32_t q, WordSolver solver) {
  const std::uint32_t side = w.r() / q;
  std::uint64_t total = 0;
  for (std::uint32_t i = 0; i < q; ++i) total += lcs_of(slice(w, i * side, side), solver);
  return total;
}

void guard(bool ok, const std::string& what) {
  if (!ok) throw ResourceGuardError(what);
}

nlohmann::json num(double v) {
  if (!std::isfinite(v)) return nullptr;
  return round12(v);
}

}  // namespace

Statistic ExperimentConfig::effective_statistic() const {
  if (statistic) return *statistic;
  switch (model) {
    case Model::kGeometric:
      return Statistic::kWeightedL;
    case Model::kOdb:
      return Statistic::kHeight;
    case Model::kPermutation:
      return Statistic::kLIS;
    case Model::kWords:
    case Model::kBinomial:
      break;
  }
  return Statistic::kL;
}

void ExperimentConfig::validate() const {
  require(trials >= 1, "trials", "must be at least 1");
  require(workers >= 1, "workers", "must be at least 1");
  require(r >= 1, model == Model::kPermutation ? "N" : "r", "must be at least 1");
  const Statistic stat = effective_statistic();
  switch (model) {
    case Model::kWords:
      require(s >= 1, "s", "must be at least 1");
      require(k >= 1, "k", "must be at least 1");
      require(stat == Statistic::kL, "statistic", "words model supports L");
      break;
    case Model::kBinomial:
      require(s >= 1, "s", "must be at least 1");
      require(p >= 0 && p <= 1, "p", "must lie in [0, 1]");
      require(stat == Statistic::kL, "statistic", "binomial model supports L");
      break;
    case Model::kGeometric:
      require(r == s, "s", "geometric grid must be square");
      require(p > 0 && p < 1, "p", "must lie in (0, 1)");
      require(stat == Statistic::kWeightedL || stat == Statistic::kL, "statistic",
              "geometric model supports weightedL or L");
      break;
    case Model::kOdb:
      require(r == s, "s", "ODB matrix must be square");
      require(p >= 0 && p <= 1, "p", "must lie in [0, 1]");
      require(stat == Statistic::kHeight || stat == Statistic::kL, "statistic",
              "odb model supports height or L");
      break;
    case Model::kPermutation:
      require(stat == Statistic::kLIS, "statistic", "permutation model supports LIS");
      break;
  }
  if (split_q) {
    require(model == Model::kWords, "split_q", "only defined for the words model");
    require(r == s, "split_q", "needs a square words instance");
    require(*split_q >= 1 && *split_q <= r, "split_q", "must lie in [1, n]");
  }
  for (const double eps : tail_thresholds) {
    require(std::isfinite(eps) && eps >= 0, "tail_thresholds", "must be nonnegative");
  }
}

double centering_value(const ExperimentConfig& cfg) {
  const double r = cfg.r;
  const double s = cfg.s;
  switch (cfg.model) {
    case Model::kWords:
      return 2.0 * std::sqrt(r * s / cfg.k);
    case Model::kBinomial:
      return 2.0 * std::sqrt(r * s * cfg.p);
    case Model::kGeometric:
      // The nonzero-weight graph has edge probability 1 - p.
      return cfg.effective_statistic() == Statistic::kWeightedL
                 ? r * johansson_limit(cfg.p)
                 : 2.0 * std::sqrt(r * s * (1.0 - cfg.p));
    case Model::kOdb:
      return cfg.effective_statistic() == Statistic::kHeight
                 ? r * 2.0 * std::sqrt(cfg.p * (1.0 - cfg.p))
                 : 2.0 * r * std::sqrt(cfg.p);
    case Model::kPermutation:
      return 2.0 * std::sqrt(r);
  }
  return 0.0;
}

std::vector<TailEntry> empirical_tail(std::span<const std::uint64_t> values, double center,
                                      std::span<const double> thresholds) {
  require(!values.empty(), "values", "must be nonempty");
  std::vector<TailEntry> table;
  table.reserve(thresholds.size());
  for (const double theta : thresholds) {
    TailEntry e;
    e.threshold = theta;
    e.total = values.size();
    for (const std::uint64_t v : values) {
      if (std::abs(static_cast<double>(v) - center) >= theta) ++e.count;
    }
    e.frequency = mean_of(e.count, e.total);
    table.push_back(e);
  }
  return table;
}

EstimateSummary run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const Statistic stat = cfg.effective_statistic();
  const auto cells = static_cast<double>(cfg.r) * cfg.s;
  const auto limit = static_cast<double>(cfg.cell_limit);
  switch (cfg.model) {
    case Model::kWords:
      if (cfg.word_solver == WordSolver::kDp) {
        guard(cells <= limit, "r*s dynamic-programming table exceeds the cell limit");
      } else {
        guard(cells / cfg.k <= limit, "expected match count exceeds the cell limit");
      }
      break;
    case Model::kBinomial:
      guard(cells * cfg.p <= limit, "expected edge count exceeds the cell limit");
      break;
    case Model::kGeometric:
    case Model::kOdb:
      guard(cells <= limit, "dense grid exceeds the cell limit");
      break;
    case Model::kPermutation:
      guard(cfg.r <= limit, "permutation length exceeds the cell limit");
      break;
  }

  struct TrialOut {
    std::uint64_t value = 0;
    std::uint64_t blocks = 0;
  };
  auto trial = [&](std::uint64_t t) -> TrialOut {
    RngStream stream(cfg.master_seed, t);
    switch (cfg.model) {
      case Model::kWords: {
        const WordPair w = sample_word_pair(cfg.r, cfg.s, cfg.k, stream);
        TrialOut out{lcs_of(w, cfg.word_solver)};
        if (cfg.split_q) out.blocks = block_sum(w, *cfg.split_q, cfg.word_solver);
        return out;
      }
      case Model::kBinomial:
        return {planar_matching_size(sample_binomial_graph(cfg.r, cfg.s, cfg.p, stream))};
      case Model::kGeometric: {
        const WeightedGrid g = sample_geometric_grid(cfg.r, cfg.p, stream);
        return {stat == Statistic::kWeightedL ? max_weight_planar(g)
                                              : planar_matching_size(weights_to_graph(g))};
      }
      case Model::kOdb: {
        const BernoulliMatrix m = sample_bernoulli_matrix(cfg.r, cfg.p, stream);
        return {stat == Statistic::kHeight ? odb_height(m)
                                           : planar_matching_size(matrix_to_graph(m))};
      }
      case Model::kPermutation:
        return {lis_length(sample_permutation(cfg.r, stream))};
    }
    return {};
  };
  const std::vector<TrialOut> outs = run_trials<TrialOut>(cfg.trials, cfg.workers, trial);

  EstimateSummary s;
  s.config = cfg;
  s.trials = cfg.trials;
  std::vector<std::uint64_t> values;
  values.reserve(outs.size());
  for (const TrialOut& o : outs) values.push_back(o.value);
  for (const std::uint64_t v : values) s.sum += v;
  s.mean = mean_of(s.sum, s.trials);
  s.variance = unbiased_variance(values);
  s.std_error = s.trials < 2 ? std::nan("") : std::sqrt(s.variance / static_cast<double>(s.trials));
  auto [lo, hi] = std::ranges::minmax(values);
  s.min = lo;
  s.max = hi;
  {
    std::vector<std::uint64_t> sorted = values;
    std::ranges::sort(sorted);
    const std::size_t mid = sorted.size() / 2;
    s.median = sorted.size() % 2 == 1
                   ? static_cast<double>(sorted[mid])
                   : 0.5 * (static_cast<double>(sorted[mid - 1]) + static_cast<double>(sorted[mid]));
  }
  s.centering = centering_value(cfg);
  s.normalized = s.centering > 0 ? s.mean / s.centering : std::nan("");
  std::vector<double> absolute;
  for (const double eps : cfg.tail_thresholds) absolute.push_back(eps * s.centering);
  s.tails = empirical_tail(values, s.centering, absolute);
  for (std::size_t i = 0; i < s.tails.size(); ++i) s.tails[i].relative = cfg.tail_thresholds[i];
  if (cfg.split_q) {
    SplitInfo info;
    info.q = *cfg.split_q;
    info.block_size = cfg.r / info.q;
    for (const TrialOut& o : outs) {
      info.whole_sum += o.value;
      info.block_sum += o.blocks;
      if (o.value < o.blocks) ++info.violations;
    }
    info.whole_mean = mean_of(info.whole_sum, s.trials);
    info.block_mean = mean_of(info.block_sum, s.trials);
    s.split = info;
  }
  if (cfg.retain_trials) s.per_trial = std::move(values);
  return s;
}

SplitInfo split_experiment(std::uint32_t n, std::uint32_t k, std::uint32_t q,
                           std::uint64_t trials, std::uint64_t seed, unsigned workers) {
  require(q >= 1, "q", "must be at least 1");
  require(q <= n, "q", "must not exceed n");
  ExperimentConfig cfg;
  cfg.model = Model::kWords;
  cfg.set_n(n);
  cfg.k = k;
  cfg.trials = trials;
  cfg.master_seed = seed;
  cfg.split_q = q;
  cfg.workers = workers;
  return *run_experiment(cfg).split;
}

CouplingResult coupling_experiment(std::uint32_t n, double p, std::uint64_t trials,
                                   std::uint64_t seed, unsigned workers) {
  require(p > 0 && p < 1, "p", "must lie in (0, 1)");
  require(n >= 1, "n", "must be at least 1");
  require(trials >= 1, "trials", "must be at least 1");
  struct Pair {
    std::uint64_t cardinality = 0;
    std::uint64_t weight = 0;
  };
  const auto outs = run_trials<Pair>(trials, workers, [&](std::uint64_t t) {
    RngStream stream(seed, t);
    const WeightedGrid g = sample_geometric_grid(n, p, stream);
    return Pair{planar_matching_size(weights_to_graph(g)), max_weight_planar(g)};
  });
  CouplingResult res;
  res.trials = trials;
  std::uint64_t card = 0;
  std::uint64_t weight = 0;
  for (const Pair& o : outs) {
    card += o.cardinality;
    weight += o.weight;
    if (o.cardinality > o.weight) ++res.violations;
  }
  res.mean_cardinality = mean_of(card, trials);
  res.mean_weight = mean_of(weight, trials);
  res.mean_weight_over_n = res.mean_weight / n;
  res.johansson_limit = johansson_limit(p);
  return res;
}

OdbDominanceResult odb_dominance_experiment(std::uint32_t n, double p, std::uint64_t trials,
                                            std::uint64_t seed, unsigned workers) {
  require(p >= 0 && p <= 1, "p", "must lie in [0, 1]");
  require(n >= 1, "n", "must be at least 1");
  require(trials >= 1, "trials", "must be at least 1");
  struct Pair {
    std::uint64_t height = 0;
    std::uint64_t strict = 0;
  };
  const auto outs = run_trials<Pair>(trials, workers, [&](std::uint64_t t) {
    RngStream stream(seed, t);
    const BernoulliMatrix m = sample_bernoulli_matrix(n, p, stream);
    return Pair{odb_height(m), planar_matching_size(matrix_to_graph(m))};
  });
  OdbDominanceResult res;
  res.trials = trials;
  std::uint64_t height = 0;
  std::uint64_t strict = 0;
  for (const Pair& o : outs) {
    height += o.height;
    strict += o.strict;
    if (o.height < o.strict) ++res.violations;
  }
  res.mean_height = mean_of(height, trials);
  res.mean_strict = mean_of(strict, trials);
  return res;
}

bool nondecreasing_within_2se(double a, double se_a, double b, double se_b) {
  return b + 2.0 * std::sqrt(se_a * se_a + se_b * se_b) >= a;
}

SubadditiveProfile subadditive_profile(std::uint32_t k, std::span<const std::uint32_t> n_grid,
                                       std::uint64_t trials, std::uint64_t seed,
                                       unsigned workers) {
  require(!n_grid.empty(), "n_grid", "must be nonempty");
  require(std::ranges::is_sorted(n_grid, std::less_equal<>{}) &&
              std::adjacent_find(n_grid.begin(), n_grid.end()) == n_grid.end(),
          "n_grid", "must be strictly increasing");
  require(trials >= 2, "trials", "need at least 2 trials for a standard error");
  SubadditiveProfile profile;
  for (const std::uint32_t n : n_grid) {
    ExperimentConfig cfg;
    cfg.model = Model::kWords;
    cfg.set_n(n);
    cfg.k = k;
    cfg.trials = trials;
    cfg.master_seed = seed;
    cfg.workers = workers;
    const EstimateSummary s = run_experiment(cfg);
    ProfileRow row{n, s.mean / n, s.std_error / n, true};
    if (!profile.rows.empty()) {
      const ProfileRow& prev = profile.rows.back();
      row.monotone_ok =
          nondecreasing_within_2se(prev.mean_over_n, prev.se_over_n, row.mean_over_n, row.se_over_n);
    }
    profile.monotone_within_2se = profile.monotone_within_2se && row.monotone_ok;
    profile.rows.push_back(row);
  }
  return profile;
}

EstimateSummary permutation_lis_experiment(std::uint32_t N, std::uint64_t trials,
                                           std::uint64_t seed, unsigned workers) {
  ExperimentConfig cfg;
  cfg.model = Model::kPermutation;
  cfg.r = N;
  cfg.s = N;
  cfg.trials = trials;
  cfg.master_seed = seed;
  cfg.workers = workers;
  cfg.retain_trials = true;
  return run_experiment(cfg);
}

double round12(double v) {
  if (!std::isfinite(v)) return v;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

const char* model_name(Model m) {
  switch (m) {
    case Model::kWords:
      return "words";
    case Model::kBinomial:
      return "binomial";
    case Model::kGeometric:
      return "geometric";
    case Model::kOdb:
      return "odb";
    case Model::kPermutation:
      return "permutation";
  }
  return "?";
}

const char* statistic_name(Statistic s) {
  switch (s) {
    case Statistic::kL:
      return "L";
    case Statistic::kWeightedL:
      return "weightedL";
    case Statistic::kHeight:
      return "height";
    case Statistic::kLIS:
      return "LIS";
  }
  return "?";
}

Model parse_model(const std::string& name) {
  for (Model m : {Model::kWords, Model::kBinomial, Model::kGeometric, Model::kOdb,
                  Model::kPermutation}) {
    if (name == model_name(m)) return m;
  }
  throw DomainError("model", "unknown model '" + name + "'");
}

Statistic parse_statistic(const std::string& name) {
  for (Statistic s : {Statistic::kL, Statistic::kWeightedL, Statistic::kHeight, Statistic::kLIS}) {
    if (name == statistic_name(s)) return s;
  }
  throw DomainError("statistic", "unknown statistic '" + name + "'");
}

nlohmann::json config_to_json(const ExperimentConfig& cfg) {
  nlohmann::json j;
  j["model"] = model_name(cfg.model);
  j["r"] = cfg.r;
  j["s"] = cfg.s;
  if (cfg.model == Model::kWords) j["k"] = cfg.k;
  if (cfg.model != Model::kWords && cfg.model != Model::kPermutation) j["p"] = num(cfg.p);
  j["trials"] = cfg.trials;
  j["seed"] = cfg.master_seed;
  j["statistic"] = statistic_name(cfg.effective_statistic());
  nlohmann::json tails = nlohmann::json::array();
  for (const double eps : cfg.tail_thresholds) tails.push_back(num(eps));
  j["tail_thresholds"] = tails;
  j["split_q"] = cfg.split_q ? nlohmann::json(*cfg.split_q) : nlohmann::json(nullptr);
  j["solver"] = cfg.word_solver == WordSolver::kDp ? "dp" : "sparse";
  j["cell_limit"] = cfg.cell_limit;
  return j;
}

ExperimentConfig config_from_json(const nlohmann::json& j, ExperimentConfig base) {
  try {
    if (j.contains("model")) base.model = parse_model(j.at("model").get<std::string>());
    if (j.contains("n")) base.set_n(j.at("n").get<std::uint32_t>());
    if (j.contains("r")) base.r = j.at("r").get<std::uint32_t>();
    if (j.contains("s")) base.s = j.at("s").get<std::uint32_t>();
    if (j.contains("k")) base.k = j.at("k").get<std::uint32_t>();
    if (j.contains("p")) base.p = j.at("p").get<double>();
    if (j.contains("trials")) base.trials = j.at("trials").get<std::uint64_t>();
    if (j.contains("seed")) base.master_seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("workers")) base.workers = j.at("workers").get<unsigned>();
    if (j.contains("statistic")) {
      base.statistic = parse_statistic(j.at("statistic").get<std::string>());
    }
    if (j.contains("tail_thresholds")) {
      base.tail_thresholds = j.at("tail_thresholds").get<std::vector<double>>();
    }
    if (j.contains("split_q") && !j.at("split_q").is_null()) {
      base.split_q = j.at("split_q").get<std::uint32_t>();
    }
    if (j.contains("solver")) {
      const auto solver = j.at("solver").get<std::string>();
      require(solver == "dp" || solver == "sparse", "solver", "must be 'dp' or 'sparse'");
      base.word_solver = solver == "dp" ? WordSolver::kDp : WordSolver::kSparse;
    }
    if (j.contains("cell_limit")) base.cell_limit = j.at("cell_limit").get<std::uint64_t>();
    if (j.contains("retain_trials")) base.retain_trials = j.at("retain_trials").get<bool>();
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("config", e.what());
  }
  return base;
}

nlohmann::json summary_to_json(const EstimateSummary& s) {
  nlohmann::json j;
  j["config"] = config_to_json(s.config);
  j["trials"] = s.trials;
  j["sum"] = s.sum;
  j["mean"] = num(s.mean);
  j["variance"] = num(s.variance);
  j["se"] = num(s.std_error);
  j["median"] = num(s.median);
  j["min"] = s.min;
  j["max"] = s.max;
  j["centering"] = num(s.centering);
  j["normalized"] = num(s.normalized);
  nlohmann::json tails = nlohmann::json::array();
  for (const TailEntry& e : s.tails) {
    nlohmann::json row;
    row["eps"] = e.relative ? num(*e.relative) : nlohmann::json(nullptr);
    row["threshold"] = num(e.threshold);
    row["count"] = e.count;
    row["total"] = e.total;
    row["frequency"] = num(e.frequency);
    tails.push_back(row);
  }
  j["tails"] = tails;
  if (s.split) {
    const SplitInfo& sp = *s.split;
    j["split"] = {{"q", sp.q},
                  {"block_size", sp.block_size},
                  {"whole_sum", sp.whole_sum},
                  {"block_sum", sp.block_sum},
                  {"whole_mean", num(sp.whole_mean)},
                  {"block_mean", num(sp.block_mean)},
                  {"violations", sp.violations}};
  }
  if (!s.per_trial.empty()) j["per_trial"] = s.per_trial;
  return j;
}

std::string trials_jsonl(const EstimateSummary& s) {
  std::string out;
  for (std::size_t t = 0; t < s.per_trial.size(); ++t) {
    out += nlohmann::json{{"trial", t}, {"value", s.per_trial[t]}}.dump();
    out += '\n';
  }
  return out;
}

}  // namespace planarlab
