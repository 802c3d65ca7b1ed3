#include "planarlab/rng.hpp"

#include <cmath>

namespace planarlab {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kTrialMul = 0xD1B54A32D192ED03ULL;
constexpr std::uint64_t kTrialAdd = 0x8CB92BA72F3D8DD7ULL;
}  // namespace

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t trial_index)
    : master_seed_(master_seed),
      trial_index_(trial_index),
      key_(mix64(mix64(master_seed + kGolden) ^ mix64(trial_index * kTrialMul + kTrialAdd))) {}

std::uint64_t RngStream::next_u64() noexcept {
  ++counter_;
  return mix64(key_ + counter_ * kGolden);
}

double RngStream::next_unit() noexcept {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::next_open_unit() noexcept {
  return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

std::uint64_t RngStream::next_below(std::uint64_t bound) noexcept {
  // Lemire's multiply-shift with rejection of the biased low region.
  __uint128_t m = static_cast<__uint128_t>(next_u64()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<__uint128_t>(next_u64()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

std::uint64_t RngStream::geometric_from_log(double log_one_minus_p) noexcept {
  const double w = std::floor(std::log(next_open_unit()) / log_one_minus_p);
  constexpr double kCap = 9.0e18;
  return w >= kCap ? static_cast<std::uint64_t>(kCap) : static_cast<std::uint64_t>(w);
}

}  // namespace planarlab
