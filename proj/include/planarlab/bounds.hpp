#pragma once

// Closed-form quantities and bound evaluators. Every constant whose value is
// only known to exist (C, C~, C1, c, B0, B1) is an explicit argument; nothing
// here asserts an inequality that depends on one. Checks are returned as
// verdicts and margins.

#include <cstdint>
#include <optional>
#include <string>

namespace planarlab {

/// Bundle of tuning parameters and caller-chosen constants.
struct BoundParams {
  double delta = 0.1;
  double epsilon = 0.1;
  double alpha = 0.6;
  double beta = 0.7;
  double C = 25.0;
  double C_tilde = 100.0;
  double C1 = 10.0;
  double c = 1.0;
  double B0 = 1.0;
  double B1 = 1.0;

  /// Throws DomainError naming the first field out of range.
  void validate() const;
};

/// 2(1 + delta) sqrt(rs/k). delta = 0 gives the centering value.
double m_upper(double r, double s, double k, double delta);
/// 2(1 - delta) sqrt(rs/k).
double m_lower(double r, double s, double k, double delta);

enum class Prop5Side { kUpper, kLower };

struct RegimeCheck {
  bool holds = false;
  bool size_condition = false;    // rs >= C k
  bool spread_condition = false;  // side-specific second condition
  double size_lhs = 0, size_rhs = 0;
  double spread_lhs = 0, spread_rhs = 0;
  std::string failed;  // empty when holds, otherwise the failing condition(s)
};

/// Upper side: rs >= Ck and (r+s) sqrt(rs) <= delta k^{3/2} / 6.
/// Lower side: rs >= Ck and r + s <= delta k / 6.
RegimeCheck prop5_regime_check(double r, double s, double k, double delta, double C,
                               Prop5Side side);

/// 2 exp(-t^2 / (8 (m_u + t))).
double prop5_tail_upper(double r, double s, double k, double delta, double t);
/// 2 exp(-t^2 / (8 m_u)); the exponent uses m_u, not m_l.
double prop5_tail_lower(double r, double s, double k, double delta, double t);

struct WindowedValue {
  double value = 0.0;
  bool in_window = true;  // false: lambda outside the range the bound is stated for
};

/// B1 exp(-c lambda^{3/5} N^{1/5}), stated for B0/N^{1/3} <= lambda <= sqrt(N) - 2.
WindowedValue bdj_tail_upper(double N, double lambda, double B0, double B1, double c);
/// B1 exp(-c lambda^3 N), stated for B0/N^{1/3} <= lambda <= 2.
WindowedValue bdj_tail_lower(double N, double lambda, double B0, double B1, double c);

/// (EX (1 - EX) + Delta) / t^2 for a sum X of indicators with
/// Delta = sum_{i != j} E[X_i X_j].
double chebyshev_indicator_bound(double expectation, double pair_sum, double t);

/// log C(n, q) as a sum of logarithms.
double log_binomial(std::uint64_t n, std::uint64_t q);

struct TypeCountBound {
  double exact_log = 0.0;         // 5 max_{q <= q_max} log C(n, q)
  std::uint64_t argmax_q = 0;
  double closed_form = 0.0;       // C1 (n / ell) log ell
  bool within_closed_form = false;
};

TypeCountBound type_count_log_bound(std::uint64_t n, double ell, std::uint64_t q_max, double C1);

struct BlockParameters {
  std::uint64_t ell = 0;    // floor(k^alpha)
  std::uint64_t e_max = 0;  // floor((1/delta)(ell/n) m_max)
  double m_max = 0.0;       // (1 + epsilon) 2n / sqrt(k)
  std::optional<bool> n_at_least_k_beta;  // set when beta is supplied
};

BlockParameters block_parameters(double n, double k, double delta, double epsilon, double alpha,
                                 std::optional<double> beta = std::nullopt);

struct LowerBoundParameters {
  std::uint64_t n_tilde = 0;       // floor(delta k / 12)
  double epsilon = 0.0;            // from (1 - 2 delta)^2 = 1 - epsilon
  double expectation_floor = 0.0;  // (1 - epsilon) 2 n~ / sqrt(k)
  double gate_value = 0.0;         // exp(-delta^2 C~ / (4 (1 + delta)))
  bool gate_holds = false;         // gate_value <= delta
};

LowerBoundParameters lower_bound_parameters(double k, double delta, double C_tilde);

enum class TailModel { kWords, kBinomial };

/// exp(-c n / sqrt(k)) for words, exp(-c n sqrt(p)) for the binomial model.
double theorem_tail_form(double n, double k_or_p, double c, TailModel model);

/// (1 + sqrt(1 - p))^2 / p: limit of E[weighted L] / n for geometric weights.
double johansson_limit(double p);

/// 2 sqrt(p (1 - p)); `established` is false for p >= 1/2, where this value
/// is not the stated limit.
struct OdbLimit {
  double value = 0.0;
  bool established = true;
};
OdbLimit odb_limit(double p);

}  // namespace planarlab
