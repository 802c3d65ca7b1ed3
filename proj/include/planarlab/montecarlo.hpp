#pragma once

// Reproducible experiment engine. Trial t always draws from
// RngStream(master_seed, t); per-trial statistics are integers stored by
// trial index, so every summary is independent of worker count.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace planarlab {

enum class Model { kWords, kBinomial, kGeometric, kOdb, kPermutation };
enum class Statistic { kL, kWeightedL, kHeight, kLIS };
enum class WordSolver { kSparse, kDp };

inline constexpr std::uint64_t kDefaultCellLimit = 100'000'000;

struct ExperimentConfig {
  Model model = Model::kWords;
  std::uint32_t r = 0;  // rows; also N for the permutation model
  std::uint32_t s = 0;  // columns
  std::uint32_t k = 0;  // alphabet size (words)
  double p = 0.0;       // edge / success probability (binomial, geometric, odb)
  std::uint64_t trials = 1;
  std::uint64_t master_seed = 0;
  std::optional<Statistic> statistic;  // defaults per model
  // Relative deviations eps; the tail table counts |v - c| >= eps * c with
  // c the model's centering value.
  std::vector<double> tail_thresholds;
  std::optional<std::uint32_t> split_q;  // words model only
  unsigned workers = 1;
  bool retain_trials = false;
  WordSolver word_solver = WordSolver::kSparse;
  std::uint64_t cell_limit = kDefaultCellLimit;

  void set_n(std::uint32_t n) { r = s = n; }
  Statistic effective_statistic() const;
  /// Throws DomainError for missing or out-of-range parameters.
  void validate() const;
};

struct TailEntry {
  double threshold = 0.0;  // absolute deviation theta
  std::uint64_t count = 0;
  std::uint64_t total = 0;
  double frequency = 0.0;  // count / total
  std::optional<double> relative;  // eps when derived from a relative threshold
};

/// Frequency of |v - center| >= theta for each theta, with exact counts.
std::vector<TailEntry> empirical_tail(std::span<const std::uint64_t> values, double center,
                                      std::span<const double> thresholds);

struct SplitInfo {
  std::uint32_t q = 0;
  std::uint32_t block_size = 0;  // floor(n / q)
  std::uint64_t whole_sum = 0;
  std::uint64_t block_sum = 0;   // sum over trials of sum_i L(G_i)
  double whole_mean = 0.0;
  double block_mean = 0.0;
  std::uint64_t violations = 0;  // trials with L(G) < sum_i L(G_i)
};

struct EstimateSummary {
  ExperimentConfig config;
  std::uint64_t trials = 0;
  std::uint64_t sum = 0;
  double mean = 0.0;
  double variance = 0.0;  // unbiased; NaN for a single trial
  double std_error = 0.0;
  double median = 0.0;
  std::uint64_t min = 0;
  std::uint64_t max = 0;
  double centering = 0.0;   // model-specific reference value for the statistic
  double normalized = 0.0;  // mean / centering
  std::vector<TailEntry> tails;
  std::vector<std::uint64_t> per_trial;  // filled when retain_trials
  std::optional<SplitInfo> split;
};

/// Model-specific centering: 2 sqrt(rs/k), 2 sqrt(rs p), n (1+sqrt(1-p))^2/p,
/// 2 n sqrt(p(1-p)), 2 sqrt(N), and so on.
double centering_value(const ExperimentConfig& cfg);

EstimateSummary run_experiment(const ExperimentConfig& cfg);

/// L(G) against the sum over q diagonal blocks of side floor(n/q).
SplitInfo split_experiment(std::uint32_t n, std::uint32_t k, std::uint32_t q,
                           std::uint64_t trials, std::uint64_t seed, unsigned workers = 1);

struct CouplingResult {
  std::uint64_t trials = 0;
  double mean_cardinality = 0.0;  // L of the nonzero-weight graph
  double mean_weight = 0.0;       // maximum weight planar matching
  double mean_weight_over_n = 0.0;
  double johansson_limit = 0.0;
  std::uint64_t violations = 0;   // trials with cardinality > weight
};

CouplingResult coupling_experiment(std::uint32_t n, double p, std::uint64_t trials,
                                   std::uint64_t seed, unsigned workers = 1);

struct OdbDominanceResult {
  std::uint64_t trials = 0;
  double mean_height = 0.0;
  double mean_strict = 0.0;
  std::uint64_t violations = 0;  // trials with height < strict L
};

OdbDominanceResult odb_dominance_experiment(std::uint32_t n, double p, std::uint64_t trials,
                                            std::uint64_t seed, unsigned workers = 1);

struct ProfileRow {
  std::uint32_t n = 0;
  double mean_over_n = 0.0;
  double se_over_n = 0.0;
  bool monotone_ok = true;  // against the previous row, within 2 combined SE
};

struct SubadditiveProfile {
  std::vector<ProfileRow> rows;
  bool monotone_within_2se = true;
};

/// Words model at fixed k across increasing n.
SubadditiveProfile subadditive_profile(std::uint32_t k, std::span<const std::uint32_t> n_grid,
                                       std::uint64_t trials, std::uint64_t seed,
                                       unsigned workers = 1);

/// True when b is no smaller than a up to twice the combined standard error.
bool nondecreasing_within_2se(double a, double se_a, double b, double se_b);

EstimateSummary permutation_lis_experiment(std::uint32_t N, std::uint64_t trials,
                                           std::uint64_t seed, unsigned workers = 1);

// Serialization. Reals are rounded to 12 significant digits; counts stay
// integers.
double round12(double v);
const char* model_name(Model m);
const char* statistic_name(Statistic s);
Model parse_model(const std::string& name);
Statistic parse_statistic(const std::string& name);

nlohmann::json config_to_json(const ExperimentConfig& cfg);
/// Overlays the keys present in j onto base.
ExperimentConfig config_from_json(const nlohmann::json& j, ExperimentConfig base = {});
nlohmann::json summary_to_json(const EstimateSummary& s);
/// One `{"trial": t, "value": v}` object per line.
std::string trials_jsonl(const EstimateSummary& s);

}  // namespace planarlab
