#pragma once

// Greedy partition of a planar matching into blocks of consecutive edges with
// bounded edge count and bounded node spread, the block "type", and the
// short/regular classification with enlarged block sizes.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "planarlab/solvers.hpp"

namespace planarlab {

enum class BlockLabel { kUnset, kShort, kRegular };

/// How "spread over at most ell nodes" is read.
///   kConsecutiveNodes: a_last - a_first + 1 <= ell (default)
///   kIndexDifference:  a_last - a_first <= ell
enum class SpreadRule { kConsecutiveNodes, kIndexDifference };

struct Block {
  std::uint32_t a_first = 0;
  std::uint32_t a_last = 0;
  std::uint32_t b_first = 0;
  std::uint32_t b_last = 0;
  std::uint64_t edge_count = 0;
  BlockLabel label = BlockLabel::kUnset;
  double r_bar = 0.0;  // enlarged sizes, filled by classify_and_enlarge
  double s_bar = 0.0;

  std::uint32_t rows() const { return a_last - a_first + 1; }
  std::uint32_t cols() const { return b_last - b_first + 1; }

  bool operator==(const Block&) const = default;
};

struct BlockPartition {
  std::vector<Block> blocks;
  std::uint64_t ell = 0;
  std::uint64_t e_max = 0;
  SpreadRule rule = SpreadRule::kConsecutiveNodes;

  std::size_t q() const { return blocks.size(); }
  bool operator==(const BlockPartition&) const = default;
};

BlockPartition build_block_partition(const PlanarMatching& m, std::uint64_t ell,
                                     std::uint64_t e_max,
                                     SpreadRule rule = SpreadRule::kConsecutiveNodes);

/// (a_1, a'_1, b_1, b'_1, e_1, ..., a_q, a'_q, b_q, b'_q, e_q).
std::vector<std::uint64_t> type_of(const BlockPartition& p);

/// Labels each block and fills its enlarged size (r_bar, s_bar).
BlockPartition classify_and_enlarge(BlockPartition p, double delta);

struct EnlargementReport {
  std::size_t short_blocks = 0;
  std::size_t regular_blocks = 0;
  // (|S| - 1) e_max <= |M|
  bool short_count_identity = false;
  // |S| <= 2 delta n / ell, checked when e_max >= (1/delta)(ell/n)|M| - 1.
  double short_bound = 0.0;
  bool short_bound_applicable = false;
  bool short_bound_holds = false;
  double sum_r_bar = 0.0;
  double sum_s_bar = 0.0;
  // Smallest c with sum <= (1 + c delta) n + 2 delta n, per side.
  double measured_c_rows = 0.0;
  double measured_c_cols = 0.0;
  double q_ell_over_n = 0.0;  // q measured against n / ell
};

EnlargementReport enlargement_report(const BlockPartition& p, double delta, std::uint32_t n,
                                     std::size_t matching_size);

/// Returns one message per violated invariant; empty means all hold.
/// Enlargement invariants are checked only when delta is given.
std::vector<std::string> check_block_invariants(const BlockPartition& p, const PlanarMatching& m,
                                                std::optional<double> delta = std::nullopt);

/// One block per line: `a_first a_last b_first b_last e_i label r_bar s_bar`.
std::string to_text(const BlockPartition& p);
/// Inverse of to_text; ell, e_max and rule are not part of the line format.
BlockPartition parse_text(std::string_view text, std::uint64_t ell, std::uint64_t e_max,
                          SpreadRule rule = SpreadRule::kConsecutiveNodes);

}  // namespace planarlab
