#include "planarlab/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "planarlab/blocks.hpp"
#include "planarlab/bounds.hpp"
#include "planarlab/error.hpp"
#include "planarlab/models.hpp"
#include "planarlab/montecarlo.hpp"
#include "planarlab/solvers.hpp"

namespace planarlab::cli {

namespace {

using nlohmann::json;

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

json num(double v) {
  if (!std::isfinite(v)) return nullptr;
  return round12(v);
}

unsigned default_workers() {
  if (const char* env = std::getenv(kWorkersEnv)) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 1024) return static_cast<unsigned>(v);
  }
  return 1;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Named experiment presets; the lowest layer under --config and flags.
const std::map<std::string, std::function<ExperimentConfig()>>& presets() {
  static const std::map<std::string, std::function<ExperimentConfig()>> table = {
      {"small-words",
       [] {
         ExperimentConfig c;
         c.model = Model::kWords;
         c.set_n(5000);
         c.k = 1000000;
         c.trials = 10000;
         return c;
       }},
      {"words-4096",
       [] {
         ExperimentConfig c;
         c.model = Model::kWords;
         c.set_n(32768);
         c.k = 4096;
         c.trials = 100;
         return c;
       }},
      {"binomial",
       [] {
         ExperimentConfig c;
         c.model = Model::kBinomial;
         c.set_n(16384);
         c.p = 1.0 / 1024.0;
         c.trials = 100;
         return c;
       }},
      {"permutation",
       [] {
         ExperimentConfig c;
         c.model = Model::kPermutation;
         c.set_n(40000);
         c.trials = 200;
         return c;
       }},
      {"odb",
       [] {
         ExperimentConfig c;
         c.model = Model::kOdb;
         c.set_n(2000);
         c.p = 0.3;
         c.trials = 50;
         return c;
       }},
      {"geometric",
       [] {
         ExperimentConfig c;
         c.model = Model::kGeometric;
         c.set_n(300);
         c.p = 0.5;
         c.trials = 50;
         return c;
       }},
  };
  return table;
}

// Writes to --out when given, otherwise to the command's stream.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw DomainError("out", "cannot open '" + path + "' for writing");
  file << text;
}

struct EstimateFlags {
  std::string preset;
  std::string config_path;
  std::string model;
  std::uint32_t n = 0, r = 0, s = 0, k = 0;
  double p = 0;
  std::uint64_t trials = 0, seed = 0, cell_limit = 0;
  unsigned workers = 0;
  std::string statistic;
  std::string solver;
  std::vector<double> tails;
  std::uint32_t split_q = 0;
  std::string out;
  std::string trials_out;
  bool retain = false;
  bool deterministic = false;

  std::map<std::string, CLI::Option*> opts;

  void add_to(CLI::App& app) {
    opts["preset"] = app.add_option("--preset", preset, "Preset configuration");
    opts["config"] = app.add_option("--config", config_path, "JSON configuration file");
    opts["model"] = app.add_option("--model", model, "words|binomial|geometric|odb|permutation");
    opts["n"] = app.add_option("--n", n, "Side length (sets r and s; N for permutations)");
    opts["r"] = app.add_option("--r", r, "Rows |A|");
    opts["s"] = app.add_option("--s", s, "Columns |B|");
    opts["k"] = app.add_option("--k", k, "Alphabet size");
    opts["p"] = app.add_option("--p", p, "Edge or success probability");
    opts["trials"] = app.add_option("--trials", trials, "Number of trials");
    opts["seed"] = app.add_option("--seed", seed, "Master seed");
    opts["workers"] = app.add_option("--workers", workers, "Worker threads");
    opts["statistic"] = app.add_option("--statistic", statistic, "L|weightedL|height|LIS");
    opts["solver"] = app.add_option("--solver", solver, "sparse|dp (words model)");
    opts["tails"] = app.add_option("--tails", tails, "Relative tail thresholds")->delimiter(',');
    opts["split-q"] = app.add_option("--split-q", split_q, "Diagonal block count (words)");
    opts["cell-limit"] = app.add_option("--cell-limit", cell_limit, "Resource guard");
    app.add_option("--out", out, "Summary output path (default stdout)");
    app.add_option("--trials-out", trials_out, "Per-trial JSONL output path");
    app.add_flag("--retain-trials", retain, "Keep per-trial values in the summary");
    app.add_flag("--deterministic", deterministic, "Suppress the timestamp field");
  }

  bool given(const std::string& name) const { return opts.at(name)->count() > 0; }

  ExperimentConfig resolve() const {
    ExperimentConfig cfg;
    cfg.workers = default_workers();
    if (given("preset")) {
      auto it = presets().find(preset);
      if (it == presets().end()) throw DomainError("preset", "unknown preset '" + preset + "'");
      cfg = it->second();
      cfg.workers = default_workers();
    }
    if (given("config")) {
      std::ifstream in(config_path);
      if (!in) throw DomainError("config", "cannot read '" + config_path + "'");
      json j;
      try {
        in >> j;
      } catch (const json::exception& e) {
        throw DomainError("config", e.what());
      }
      cfg = config_from_json(j, cfg);
    }
    if (given("model")) cfg.model = parse_model(model);
    if (given("n")) cfg.set_n(n);
    if (given("r")) cfg.r = r;
    if (given("s")) cfg.s = s;
    if (given("k")) cfg.k = k;
    if (given("p")) cfg.p = p;
    if (given("trials")) cfg.trials = trials;
    if (given("seed")) cfg.master_seed = seed;
    if (given("workers")) cfg.workers = workers;
    if (given("statistic")) cfg.statistic = parse_statistic(statistic);
    if (given("solver")) {
      require(solver == "sparse" || solver == "dp", "solver", "must be 'sparse' or 'dp'");
      cfg.word_solver = solver == "dp" ? WordSolver::kDp : WordSolver::kSparse;
    }
    if (given("tails")) cfg.tail_thresholds = tails;
    if (given("split-q")) cfg.split_q = split_q;
    if (given("cell-limit")) cfg.cell_limit = cell_limit;
    if (retain || !trials_out.empty()) cfg.retain_trials = true;
    cfg.validate();
    return cfg;
  }
};

int cmd_estimate(const EstimateFlags& f, std::ostream& out) {
  const ExperimentConfig cfg = f.resolve();
  EstimateSummary summary = run_experiment(cfg);
  if (!f.trials_out.empty()) emit(f.trials_out, trials_jsonl(summary), out);
  if (!f.retain) summary.per_trial.clear();
  json j = summary_to_json(summary);
  if (!f.deterministic) j["timestamp"] = utc_timestamp();
  emit(f.out, j.dump(2) + "\n", out);
  return kExitOk;
}

struct SweepFlags {
  std::vector<std::uint32_t> k_list;
  std::vector<double> p_list;
  double ratio = 0;
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;
  unsigned workers = 0;
  std::vector<double> tails;
  std::string out;
  std::uint64_t cell_limit = kDefaultCellLimit;
  CLI::Option* k_opt = nullptr;
  CLI::Option* p_opt = nullptr;
  CLI::Option* workers_opt = nullptr;

  void add_to(CLI::App& app) {
    k_opt = app.add_option("--k-list", k_list, "Alphabet sizes (words model)")->delimiter(',');
    p_opt = app.add_option("--p-list", p_list, "Edge probabilities (binomial model)")
                ->delimiter(',');
    k_opt->excludes(p_opt);
    app.add_option("--ratio", ratio, "n / sqrt(k) or n sqrt(p), held fixed")->required();
    app.add_option("--trials", trials, "Trials per point");
    app.add_option("--seed", seed, "Master seed");
    workers_opt = app.add_option("--workers", workers, "Worker threads");
    app.add_option("--tails", tails, "Relative tail thresholds")->delimiter(',');
    app.add_option("--cell-limit", cell_limit, "Resource guard");
    app.add_option("--out", out, "CSV output path (default stdout)");
    app.add_flag("--deterministic", "Accepted for symmetry; sweeps carry no timestamp");
  }
};

int cmd_sweep(const SweepFlags& f, std::ostream& out) {
  const bool by_k = f.k_opt->count() > 0;
  require(by_k || f.p_opt->count() > 0, "k-list", "one of --k-list or --p-list is required");
  require(std::isfinite(f.ratio) && f.ratio > 0, "ratio", "must be positive");
  std::ostringstream csv;
  csv << (by_k ? "k" : "p") << ",n,trials,mean,se,normalized";
  for (const double eps : f.tails) csv << ",tail_" << fmt12(eps);
  csv << '\n';
  const std::size_t points = by_k ? f.k_list.size() : f.p_list.size();
  for (std::size_t i = 0; i < points; ++i) {
    ExperimentConfig cfg;
    cfg.trials = f.trials;
    cfg.master_seed = f.seed;
    cfg.workers = f.workers_opt->count() ? f.workers : default_workers();
    cfg.tail_thresholds = f.tails;
    cfg.cell_limit = f.cell_limit;
    double n_real = 0;
    if (by_k) {
      cfg.model = Model::kWords;
      cfg.k = f.k_list[i];
      require(cfg.k >= 1, "k-list", "entries must be at least 1");
      n_real = f.ratio * std::sqrt(static_cast<double>(cfg.k));
    } else {
      cfg.model = Model::kBinomial;
      cfg.p = f.p_list[i];
      require(cfg.p > 0 && cfg.p <= 1, "p-list", "entries must lie in (0, 1]");
      n_real = f.ratio / std::sqrt(cfg.p);
    }
    const double rounded = std::round(n_real);
    require(rounded >= 1 && rounded <= 4e9, "ratio", "implied n out of range");
    cfg.set_n(static_cast<std::uint32_t>(rounded));
    const EstimateSummary s = run_experiment(cfg);
    csv << (by_k ? std::to_string(cfg.k) : fmt12(cfg.p)) << ',' << cfg.r << ',' << s.trials
        << ',' << fmt12(s.mean) << ',' << fmt12(s.std_error) << ',' << fmt12(s.normalized);
    for (const TailEntry& e : s.tails) csv << ',' << fmt12(e.frequency);
    csv << '\n';
  }
  emit(f.out, csv.str(), out);
  return kExitOk;
}

struct BlocksFlags {
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  double delta = 0.1;
  double epsilon = 0.1;
  double alpha = 0.6;
  double beta = 0;
  std::uint64_t seed = 0;
  std::string rule = "consecutive";
  std::string out;
  CLI::Option* beta_opt = nullptr;

  void add_to(CLI::App& app) {
    app.add_option("--n", n, "Side length")->required();
    app.add_option("--k", k, "Alphabet size")->required();
    app.add_option("--delta", delta, "delta in (0, 1)");
    app.add_option("--epsilon", epsilon, "epsilon in (0, 1)");
    app.add_option("--alpha", alpha, "alpha in (1/2, 3/4)");
    beta_opt = app.add_option("--beta", beta, "beta in (alpha, 3/4); enables the n >= k^beta flag");
    app.add_option("--seed", seed, "Master seed");
    app.add_option("--spread-rule", rule, "consecutive|difference");
    app.add_option("--out", out, "Output path (default stdout)");
  }
};

int cmd_blocks(const BlocksFlags& f, std::ostream& out) {
  require(f.n >= 1, "n", "must be at least 1");
  require(f.k >= 1, "k", "must be at least 1");
  require(f.rule == "consecutive" || f.rule == "difference", "spread-rule",
          "must be 'consecutive' or 'difference'");
  const auto rule =
      f.rule == "consecutive" ? SpreadRule::kConsecutiveNodes : SpreadRule::kIndexDifference;
  const BlockParameters params =
      block_parameters(f.n, f.k, f.delta, f.epsilon, f.alpha,
                       f.beta_opt->count() ? std::optional<double>(f.beta) : std::nullopt);
  require(params.ell >= 1, "k", "ell = floor(k^alpha) must be at least 1");
  require(params.e_max >= 1, "e_max", "parameters give e_max = 0");

  RngStream stream(f.seed, 0);
  const WordPair w = sample_word_pair(f.n, f.n, f.k, stream);
  const PlanarMatching m = planar_matching_recover(words_to_graph(w));
  const BlockPartition p =
      classify_and_enlarge(build_block_partition(m, params.ell, params.e_max, rule), f.delta);
  const auto violations = check_block_invariants(p, m, f.delta);
  const EnlargementReport rep = enlargement_report(p, f.delta, f.n, m.size());

  std::ostringstream text;
  text << "# n=" << f.n << " k=" << f.k << " delta=" << fmt12(f.delta)
       << " epsilon=" << fmt12(f.epsilon) << " alpha=" << fmt12(f.alpha) << " seed=" << f.seed
       << '\n';
  text << "# ell=" << params.ell << " e_max=" << params.e_max << " m_max=" << fmt12(params.m_max)
       << " spread_rule=" << f.rule << '\n';
  if (params.n_at_least_k_beta) {
    text << "# n_at_least_k_beta=" << (*params.n_at_least_k_beta ? "true" : "false") << '\n';
  }
  text << "# matching_size=" << m.size() << " q=" << p.q() << '\n';
  text << "# a_first a_last b_first b_last e_i label r_bar s_bar\n";
  text << to_text(p);
  text << "# type_length=" << type_of(p).size() << '\n';
  text << "# short=" << rep.short_blocks << " regular=" << rep.regular_blocks
       << " short_bound=" << fmt12(rep.short_bound)
       << " short_bound_applicable=" << (rep.short_bound_applicable ? "true" : "false")
       << " short_bound_holds=" << (rep.short_bound_holds ? "true" : "false") << '\n';
  text << "# sum_r_bar=" << fmt12(rep.sum_r_bar) << " sum_s_bar=" << fmt12(rep.sum_s_bar)
       << " measured_c_rows=" << fmt12(rep.measured_c_rows)
       << " measured_c_cols=" << fmt12(rep.measured_c_cols)
       << " q_ell_over_n=" << fmt12(rep.q_ell_over_n) << '\n';
  if (violations.empty()) {
    text << "# invariants: pass\n";
  } else {
    for (const auto& v : violations) text << "# invariant violated: " << v << '\n';
    text << "# invariants: fail\n";
  }
  emit(f.out, text.str(), out);
  return kExitOk;
}

// `bounds <evaluator>`: every evaluator prints one JSON object.
struct BoundsCommand {
  std::string name;
  std::map<std::string, double> values;
  std::string which = "upper";
  std::string model = "words";
  std::function<json(const BoundsCommand&)> eval;

  double v(const std::string& key) const { return values.at(key); }
};

void register_bounds(CLI::App& bounds, std::vector<std::unique_ptr<BoundsCommand>>& cmds,
                     BoundsCommand*& selected) {
  struct EvaluatorDef {
    const char* name;
    const char* help;
    std::vector<std::pair<const char*, double>> params;  // name, default (NaN = required)
    std::function<json(const BoundsCommand&)> eval;
    bool has_which = false;
    bool has_model = false;
  };
  const double req = std::nan("");
  const std::vector<EvaluatorDef> defs = {
      {"m-upper", "2(1+delta) sqrt(rs/k)", {{"r", req}, {"s", req}, {"k", req}, {"delta", req}},
       [](const BoundsCommand& c) {
         return json{{"value", num(m_upper(c.v("r"), c.v("s"), c.v("k"), c.v("delta")))}};
       }},
      {"m-lower", "2(1-delta) sqrt(rs/k)", {{"r", req}, {"s", req}, {"k", req}, {"delta", req}},
       [](const BoundsCommand& c) {
         return json{{"value", num(m_lower(c.v("r"), c.v("s"), c.v("k"), c.v("delta")))}};
       }},
      {"prop5-regime",
       "Regime conditions for the small-graph concentration bounds",
       {{"r", req}, {"s", req}, {"k", req}, {"delta", req}, {"C", 25.0}},
       [](const BoundsCommand& c) {
         const Prop5Side side = c.which == "lower" ? Prop5Side::kLower : Prop5Side::kUpper;
         const RegimeCheck rc =
             prop5_regime_check(c.v("r"), c.v("s"), c.v("k"), c.v("delta"), c.v("C"), side);
         json j{{"which", c.which},
                {"holds", rc.holds},
                {"size_condition", rc.size_condition},
                {"size_lhs", num(rc.size_lhs)},
                {"size_rhs", num(rc.size_rhs)},
                {"spread_condition", rc.spread_condition},
                {"spread_lhs", num(rc.spread_lhs)},
                {"spread_rhs", num(rc.spread_rhs)}};
         j["failed"] = rc.holds ? json(nullptr) : json(rc.failed);
         return j;
       },
       true},
      {"prop5-tail",
       "Upper and lower tail bound values at deviation t",
       {{"r", req}, {"s", req}, {"k", req}, {"delta", req}, {"t", req}},
       [](const BoundsCommand& c) {
         return json{
             {"m_upper", num(m_upper(c.v("r"), c.v("s"), c.v("k"), c.v("delta")))},
             {"upper", num(prop5_tail_upper(c.v("r"), c.v("s"), c.v("k"), c.v("delta"), c.v("t")))},
             {"lower",
              num(prop5_tail_lower(c.v("r"), c.v("s"), c.v("k"), c.v("delta"), c.v("t")))}};
       }},
      {"bdj-tail",
       "LIS tail bound shapes with caller constants",
       {{"N", req}, {"lambda", req}, {"B0", 1.0}, {"B1", 1.0}, {"c", 1.0}},
       [](const BoundsCommand& c) {
         const auto up = bdj_tail_upper(c.v("N"), c.v("lambda"), c.v("B0"), c.v("B1"), c.v("c"));
         const auto lo = bdj_tail_lower(c.v("N"), c.v("lambda"), c.v("B0"), c.v("B1"), c.v("c"));
         return json{{"upper", {{"value", num(up.value)}, {"in_window", up.in_window}}},
                     {"lower", {{"value", num(lo.value)}, {"in_window", lo.in_window}}}};
       }},
      {"chebyshev",
       "(EX(1-EX) + Delta) / t^2",
       {{"ex", req}, {"pair-sum", req}, {"t", req}},
       [](const BoundsCommand& c) {
         return json{
             {"value", num(chebyshev_indicator_bound(c.v("ex"), c.v("pair-sum"), c.v("t")))}};
       }},
      {"type-count",
       "5 max log C(n,q) against C1 (n/ell) log ell",
       {{"n", req}, {"ell", req}, {"q-max", req}, {"C1", 10.0}},
       [](const BoundsCommand& c) {
         const auto b = type_count_log_bound(static_cast<std::uint64_t>(c.v("n")), c.v("ell"),
                                             static_cast<std::uint64_t>(c.v("q-max")), c.v("C1"));
         return json{{"exact_log", num(b.exact_log)},
                     {"argmax_q", b.argmax_q},
                     {"closed_form", num(b.closed_form)},
                     {"within_closed_form", b.within_closed_form}};
       }},
      {"block-params",
       "ell, e_max and m_max for a block partition",
       {{"n", req}, {"k", req}, {"delta", req}, {"epsilon", req}, {"alpha", req}},
       [](const BoundsCommand& c) {
         const auto b =
             block_parameters(c.v("n"), c.v("k"), c.v("delta"), c.v("epsilon"), c.v("alpha"));
         return json{{"ell", b.ell}, {"e_max", b.e_max}, {"m_max", num(b.m_max)}};
       }},
      {"lower-params",
       "n~ = floor(delta k / 12) and the expectation floor",
       {{"k", req}, {"delta", req}, {"C-tilde", 100.0}},
       [](const BoundsCommand& c) {
         const auto b = lower_bound_parameters(c.v("k"), c.v("delta"), c.v("C-tilde"));
         return json{{"n_tilde", b.n_tilde},
                     {"epsilon", num(b.epsilon)},
                     {"expectation_floor", num(b.expectation_floor)},
                     {"gate_value", num(b.gate_value)},
                     {"gate_holds", b.gate_holds}};
       }},
      {"theorem-tail",
       "exp(-c n / sqrt(k)) or exp(-c n sqrt(p))",
       {{"n", req}, {"k-or-p", req}, {"c", req}},
       [](const BoundsCommand& c) {
         const TailModel m = c.model == "binomial" ? TailModel::kBinomial : TailModel::kWords;
         return json{{"model", c.model},
                     {"value", num(theorem_tail_form(c.v("n"), c.v("k-or-p"), c.v("c"), m))}};
       },
       false, true},
      {"johansson", "(1 + sqrt(1-p))^2 / p", {{"p", req}},
       [](const BoundsCommand& c) { return json{{"value", num(johansson_limit(c.v("p")))}}; }},
      {"odb-limit", "2 sqrt(p(1-p))", {{"p", req}},
       [](const BoundsCommand& c) {
         const OdbLimit o = odb_limit(c.v("p"));
         return json{{"value", num(o.value)}, {"established", o.established}};
       }},
  };

  for (const EvaluatorDef& entry : defs) {
    auto cmd = std::make_unique<BoundsCommand>();
    cmd->name = entry.name;
    cmd->eval = entry.eval;
    CLI::App* sub = bounds.add_subcommand(entry.name, entry.help);
    for (const auto& [param, def] : entry.params) {
      cmd->values[param] = def;
      auto* opt = sub->add_option(std::string("--") + param, cmd->values[param], param);
      if (std::isnan(def)) opt->required();
    }
    if (entry.has_which) {
      sub->add_option("--which", cmd->which, "upper|lower")
          ->check(CLI::IsMember({"upper", "lower"}));
    }
    if (entry.has_model) {
      sub->add_option("--model", cmd->model, "words|binomial")
          ->check(CLI::IsMember({"words", "binomial"}));
    }
    BoundsCommand* raw = cmd.get();
    sub->callback([raw, &selected] { selected = raw; });
    cmds.push_back(std::move(cmd));
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Longest planar matchings in ordered random bipartite graphs"};
  app.require_subcommand(1);

  EstimateFlags estimate_flags;
  CLI::App* estimate = app.add_subcommand("estimate", "Run one Monte Carlo experiment");
  estimate_flags.add_to(*estimate);

  SweepFlags sweep_flags;
  CLI::App* sweep = app.add_subcommand("sweep", "Sweep k (or p) at fixed n/sqrt(k) (or n sqrt(p))");
  sweep_flags.add_to(*sweep);

  BlocksFlags blocks_flags;
  CLI::App* blocks = app.add_subcommand("blocks", "Block partition of one sampled instance");
  blocks_flags.add_to(*blocks);

  CLI::App* bounds = app.add_subcommand("bounds", "Evaluate a closed-form bound");
  bounds->require_subcommand(1);
  std::vector<std::unique_ptr<BoundsCommand>> bound_cmds;
  BoundsCommand* selected = nullptr;
  register_bounds(*bounds, bound_cmds, selected);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, eo;
    const int code = app.exit(e, o, eo);
    out << o.str();
    err << eo.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (estimate->parsed()) return cmd_estimate(estimate_flags, out);
    if (sweep->parsed()) return cmd_sweep(sweep_flags, out);
    if (blocks->parsed()) return cmd_blocks(blocks_flags, out);
    if (bounds->parsed() && selected != nullptr) {
      out << selected->eval(*selected).dump(2) << '\n';
      return kExitOk;
    }
  } catch (const DomainError& e) {
    err << json{{"error", "domain"}, {"field", e.field()}, {"reason", e.reason()}}.dump() << '\n';
    return kExitUsage;
  } catch (const ResourceGuardError& e) {
    err << json{{"error", "resource_guard"}, {"reason", e.what()}}.dump() << '\n';
    return kExitResourceGuard;
  }
  return kExitUsage;
}

}  // namespace planarlab::cli
