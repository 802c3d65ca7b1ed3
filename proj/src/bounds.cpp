#include "planarlab/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "planarlab/error.hpp"

namespace planarlab {

namespace {

bool finite(double x) { return std::isfinite(x); }

void check_sizes(double r, double s, double k) {
  require(finite(r) && r >= 1, "r", "must be at least 1");
  require(finite(s) && s >= 1, "s", "must be at least 1");
  require(finite(k) && k >= 1, "k", "must be at least 1");
}

void check_delta_closed(double delta) {
  require(finite(delta) && delta >= 0 && delta < 1, "delta", "must lie in [0, 1)");
}

void check_open_unit(double x, const char* field) {
  require(finite(x) && x > 0 && x < 1, field, "must lie in (0, 1)");
}

}  // namespace

void BoundParams::validate() const {
  check_open_unit(delta, "delta");
  check_open_unit(epsilon, "epsilon");
  require(finite(alpha) && finite(beta) && 0.5 < alpha && alpha < beta && beta < 0.75, "alpha",
          "need 1/2 < alpha < beta < 3/4");
  require(C > 0, "C", "must be positive");
  require(C_tilde > 0, "C_tilde", "must be positive");
  require(C1 > 0, "C1", "must be positive");
  require(c > 0, "c", "must be positive");
  require(B0 > 0, "B0", "must be positive");
  require(B1 > 0, "B1", "must be positive");
}

double m_upper(double r, double s, double k, double delta) {
  check_sizes(r, s, k);
  check_delta_closed(delta);
  return 2.0 * (1.0 + delta) * std::sqrt(r * s / k);
}

double m_lower(double r, double s, double k, double delta) {
  check_sizes(r, s, k);
  check_delta_closed(delta);
  return 2.0 * (1.0 - delta) * std::sqrt(r * s / k);
}

RegimeCheck prop5_regime_check(double r, double s, double k, double delta, double C,
                               Prop5Side side) {
  check_sizes(r, s, k);
  check_open_unit(delta, "delta");
  require(finite(C) && C > 0, "C", "must be positive");
  RegimeCheck out;
  out.size_lhs = r * s;
  out.size_rhs = C * k;
  out.size_condition = out.size_lhs >= out.size_rhs;
  if (side == Prop5Side::kUpper) {
    out.spread_lhs = (r + s) * std::sqrt(r * s);
    out.spread_rhs = delta * std::pow(k, 1.5) / 6.0;
  } else {
    out.spread_lhs = r + s;
    out.spread_rhs = delta * k / 6.0;
  }
  out.spread_condition = out.spread_lhs <= out.spread_rhs;
  out.holds = out.size_condition && out.spread_condition;
  if (!out.size_condition) out.failed = "rs >= C k";
  if (!out.spread_condition) {
    if (!out.failed.empty()) out.failed += "; ";
    out.failed += side == Prop5Side::kUpper ? "(r + s) sqrt(rs) <= delta k^(3/2) / 6"
                                            : "r + s <= delta k / 6";
  }
  return out;
}

double prop5_tail_upper(double r, double s, double k, double delta, double t) {
  require(finite(t) && t >= 0, "t", "must be nonnegative");
  const double mu = m_upper(r, s, k, delta);
  return 2.0 * std::exp(-t * t / (8.0 * (mu + t)));
}

double prop5_tail_lower(double r, double s, double k, double delta, double t) {
  require(finite(t) && t >= 0, "t", "must be nonnegative");
  const double mu = m_upper(r, s, k, delta);
  return 2.0 * std::exp(-t * t / (8.0 * mu));
}

WindowedValue bdj_tail_upper(double N, double lambda, double B0, double B1, double c) {
  require(finite(N) && N >= 1, "N", "must be at least 1");
  require(finite(lambda) && lambda >= 0, "lambda", "must be nonnegative");
  require(B0 > 0 && B1 > 0 && c > 0, "constants", "B0, B1, c must be positive");
  WindowedValue out;
  out.value = B1 * std::exp(-c * std::pow(lambda, 0.6) * std::pow(N, 0.2));
  out.in_window = lambda >= B0 / std::cbrt(N) && lambda <= std::sqrt(N) - 2.0;
  return out;
}

WindowedValue bdj_tail_lower(double N, double lambda, double B0, double B1, double c) {
  require(finite(N) && N >= 1, "N", "must be at least 1");
  require(finite(lambda) && lambda >= 0, "lambda", "must be nonnegative");
  require(B0 > 0 && B1 > 0 && c > 0, "constants", "B0, B1, c must be positive");
  WindowedValue out;
  out.value = B1 * std::exp(-c * lambda * lambda * lambda * N);
  out.in_window = lambda >= B0 / std::cbrt(N) && lambda <= 2.0;
  return out;
}

double chebyshev_indicator_bound(double expectation, double pair_sum, double t) {
  require(finite(t) && t > 0, "t", "must be positive");
  require(finite(expectation) && expectation >= 0, "EX", "must be nonnegative");
  require(finite(pair_sum) && pair_sum >= 0, "Delta", "must be nonnegative");
  return (expectation * (1.0 - expectation) + pair_sum) / (t * t);
}

double log_binomial(std::uint64_t n, std::uint64_t q) {
  require(q <= n, "q", "must not exceed n");
  q = std::min(q, n - q);
  double acc = 0.0;
  for (std::uint64_t i = 0; i < q; ++i) {
    acc += std::log(static_cast<double>(n - i)) - std::log(static_cast<double>(i + 1));
  }
  return acc;
}

TypeCountBound type_count_log_bound(std::uint64_t n, double ell, std::uint64_t q_max, double C1) {
  require(n >= 1, "n", "must be at least 1");
  require(q_max >= 1 && q_max <= n, "q_max", "must lie in [1, n]");
  require(finite(ell) && ell >= 1, "ell", "must be at least 1");
  require(finite(C1) && C1 > 0, "C1", "must be positive");
  // log C(n, q) increases in q up to n/2, so the maximum sits at min(q_max, n/2).
  TypeCountBound out;
  out.argmax_q = std::min(q_max, n / 2 == 0 ? std::uint64_t{1} : n / 2);
  out.exact_log = 5.0 * log_binomial(n, out.argmax_q);
  out.closed_form = C1 * (static_cast<double>(n) / ell) * std::log(ell);
  out.within_closed_form = out.exact_log <= out.closed_form;
  return out;
}

BlockParameters block_parameters(double n, double k, double delta, double epsilon, double alpha,
                                 std::optional<double> beta) {
  require(finite(n) && n >= 1, "n", "must be at least 1");
  require(finite(k) && k >= 1, "k", "must be at least 1");
  check_open_unit(delta, "delta");
  check_open_unit(epsilon, "epsilon");
  require(finite(alpha) && alpha > 0.5 && alpha < 0.75, "alpha", "must lie in (1/2, 3/4)");
  if (beta) {
    require(finite(*beta) && *beta > alpha && *beta < 0.75, "beta",
            "must lie in (alpha, 3/4)");
  }
  BlockParameters out;
  out.m_max = (1.0 + epsilon) * 2.0 * n / std::sqrt(k);
  out.ell = static_cast<std::uint64_t>(std::floor(std::pow(k, alpha)));
  out.e_max = static_cast<std::uint64_t>(
      std::floor((1.0 / delta) * (static_cast<double>(out.ell) / n) * out.m_max));
  if (beta) out.n_at_least_k_beta = n >= std::pow(k, *beta);
  return out;
}

LowerBoundParameters lower_bound_parameters(double k, double delta, double C_tilde) {
  require(finite(k) && k >= 1, "k", "must be at least 1");
  check_open_unit(delta, "delta");
  require(finite(C_tilde) && C_tilde > 0, "C_tilde", "must be positive");
  LowerBoundParameters out;
  out.n_tilde = static_cast<std::uint64_t>(std::floor(delta * k / 12.0));
  const double shrink = 1.0 - 2.0 * delta;
  out.epsilon = 1.0 - shrink * shrink;
  out.expectation_floor =
      (1.0 - out.epsilon) * 2.0 * static_cast<double>(out.n_tilde) / std::sqrt(k);
  out.gate_value = std::exp(-delta * delta * C_tilde / (4.0 * (1.0 + delta)));
  out.gate_holds = out.gate_value <= delta;
  return out;
}

double theorem_tail_form(double n, double k_or_p, double c, TailModel model) {
  require(finite(n) && n >= 0, "n", "must be nonnegative");
  require(finite(c) && c >= 0, "c", "must be nonnegative");
  if (model == TailModel::kWords) {
    require(finite(k_or_p) && k_or_p >= 1, "k", "must be at least 1");
    return std::exp(-c * n / std::sqrt(k_or_p));
  }
  check_open_unit(k_or_p, "p");
  return std::exp(-c * n * std::sqrt(k_or_p));
}

double johansson_limit(double p) {
  check_open_unit(p, "p");
  const double root = 1.0 + std::sqrt(1.0 - p);
  return root * root / p;
}

OdbLimit odb_limit(double p) {
  check_open_unit(p, "p");
  return {2.0 * std::sqrt(p * (1.0 - p)), p < 0.5};
}

}  // namespace planarlab
