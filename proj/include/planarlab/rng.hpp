#pragma once

#include <cstdint>
#include <limits>

namespace planarlab {

/// Counter-based random stream. Draw number i of trial t under master seed s
/// is a fixed function of (s, t, i), so trials can run in any order or on any
/// thread and still reproduce bit-for-bit.
class RngStream {
 public:
  using result_type = std::uint64_t;

  RngStream(std::uint64_t master_seed, std::uint64_t trial_index);

  std::uint64_t master_seed() const noexcept { return master_seed_; }
  std::uint64_t trial_index() const noexcept { return trial_index_; }
  std::uint64_t draws() const noexcept { return counter_; }

  std::uint64_t next_u64() noexcept;

  /// Uniform on [0, 1) with 53 bits of resolution.
  double next_unit() noexcept;
  /// Uniform on (0, 1]; safe to take the logarithm of.
  double next_open_unit() noexcept;

  /// Exactly uniform on {0, ..., bound-1}; bound must be positive.
  std::uint64_t next_below(std::uint64_t bound) noexcept;

  bool bernoulli(double p) noexcept { return next_unit() < p; }

  /// Number of failures before the first success, P(j) = (1-p)^j p.
  /// Takes log(1-p) precomputed by the caller (must be negative).
  std::uint64_t geometric_from_log(double log_one_minus_p) noexcept;

  // UniformRandomBitGenerator surface.
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()() noexcept { return next_u64(); }

 private:
  std::uint64_t master_seed_;
  std::uint64_t trial_index_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace planarlab
