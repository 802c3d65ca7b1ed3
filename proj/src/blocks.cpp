#include "planarlab/blocks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "planarlab/error.hpp"

namespace planarlab {

namespace {

std::uint64_t max_spread(std::uint64_t ell, SpreadRule rule) {
  return rule == SpreadRule::kConsecutiveNodes ? ell - 1 : ell;
}

const char* label_name(BlockLabel label) {
  switch (label) {
    case BlockLabel::kShort:
      return "short";
    case BlockLabel::kRegular:
      return "regular";
    case BlockLabel::kUnset:
      break;
  }
  return "unset";
}

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

BlockPartition build_block_partition(const PlanarMatching& m, std::uint64_t ell,
                                     std::uint64_t e_max, SpreadRule rule) {
  require(ell >= 1, "ell", "must be at least 1");
  require(e_max >= 1, "e_max", "must be at least 1");
  BlockPartition p;
  p.ell = ell;
  p.e_max = e_max;
  p.rule = rule;
  const auto edges = m.edges();
  const std::uint64_t spread = max_spread(ell, rule);
  std::size_t start = 0;
  while (start < edges.size()) {
    const Edge& first = edges[start];
    std::size_t end = start + 1;  // one past the block's last edge
    while (end < edges.size() && end - start < e_max && edges[end].a - first.a <= spread &&
           edges[end].b - first.b <= spread) {
      ++end;
    }
    const Edge& last = edges[end - 1];
    p.blocks.push_back({first.a, last.a, first.b, last.b, end - start});
    start = end;
  }
  return p;
}

std::vector<std::uint64_t> type_of(const BlockPartition& p) {
  std::vector<std::uint64_t> t;
  t.reserve(5 * p.q());
  for (const Block& blk : p.blocks) {
    t.insert(t.end(), {blk.a_first, blk.a_last, blk.b_first, blk.b_last, blk.edge_count});
  }
  return t;
}

BlockPartition classify_and_enlarge(BlockPartition p, double delta) {
  require(std::isfinite(delta) && delta > 0 && delta < 1, "delta", "must lie in (0, 1)");
  const auto ell = static_cast<double>(p.ell);
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    Block& blk = p.blocks[i];
    const bool last = i + 1 == p.blocks.size();
    if (last || blk.edge_count == p.e_max) {
      blk.label = BlockLabel::kShort;
      blk.r_bar = ell;
      blk.s_bar = ell;
      continue;
    }
    blk.label = BlockLabel::kRegular;
    const Block& next = p.blocks[i + 1];
    if (next.a_first - blk.a_first >= p.ell) {
      blk.r_bar = ell;
      blk.s_bar = std::max(delta * ell, static_cast<double>(blk.cols()));
    } else {
      blk.r_bar = std::max(delta * ell, static_cast<double>(blk.rows()));
      blk.s_bar = ell;
    }
  }
  return p;
}

EnlargementReport enlargement_report(const BlockPartition& p, double delta, std::uint32_t n,
                                     std::size_t matching_size) {
  require(std::isfinite(delta) && delta > 0 && delta < 1, "delta", "must lie in (0, 1)");
  require(n >= 1, "n", "must be at least 1");
  EnlargementReport out;
  for (const Block& blk : p.blocks) {
    require(blk.label != BlockLabel::kUnset, "partition", "classify_and_enlarge first");
    (blk.label == BlockLabel::kShort ? out.short_blocks : out.regular_blocks) += 1;
    out.sum_r_bar += blk.r_bar;
    out.sum_s_bar += blk.s_bar;
  }
  const double nn = n;
  const auto ell = static_cast<double>(p.ell);
  const auto e_max = static_cast<double>(p.e_max);
  const auto m = static_cast<double>(matching_size);
  out.short_count_identity =
      out.short_blocks == 0 || (static_cast<double>(out.short_blocks) - 1.0) * e_max <= m;
  out.short_bound = 2.0 * delta * nn / ell;
  out.short_bound_applicable = e_max >= (1.0 / delta) * (ell / nn) * m - 1.0;
  out.short_bound_holds = static_cast<double>(out.short_blocks) <= out.short_bound;
  out.measured_c_rows = (out.sum_r_bar - nn - 2.0 * delta * nn) / (delta * nn);
  out.measured_c_cols = (out.sum_s_bar - nn - 2.0 * delta * nn) / (delta * nn);
  out.q_ell_over_n = static_cast<double>(p.q()) * ell / nn;
  return out;
}

std::vector<std::string> check_block_invariants(const BlockPartition& p, const PlanarMatching& m,
                                                std::optional<double> delta) {
  std::vector<std::string> bad;
  auto fail = [&](std::size_t i, const std::string& what) {
    bad.push_back("block " + std::to_string(i + 1) + ": " + what);
  };
  const auto edges = m.edges();
  const std::uint64_t spread = max_spread(p.ell, p.rule);
  std::size_t offset = 0;
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    const Block& blk = p.blocks[i];
    if (blk.edge_count == 0 || offset + blk.edge_count > edges.size()) {
      fail(i, "edge range outside the matching");
      return bad;
    }
    const Edge& first = edges[offset];
    const Edge& last = edges[offset + blk.edge_count - 1];
    if (first.a != blk.a_first || first.b != blk.b_first || last.a != blk.a_last ||
        last.b != blk.b_last) {
      fail(i, "endpoints do not match the covered edges");
    }
    if (blk.edge_count > p.e_max) fail(i, "more than e_max edges");
    if (blk.a_last - blk.a_first > spread || blk.b_last - blk.b_first > spread) {
      fail(i, "spread exceeds ell");
    }
    const bool last_block = i + 1 == p.blocks.size();
    const bool should_be_short = last_block || blk.edge_count == p.e_max;
    if (blk.label != BlockLabel::kUnset &&
        (blk.label == BlockLabel::kShort) != should_be_short) {
      fail(i, "short/regular label disagrees with the definition");
    }
    if (!last_block) {
      const Block& next = p.blocks[i + 1];
      // Greedy maximality: the following edge could not have joined this block.
      const bool could_extend = blk.edge_count < p.e_max &&
                                next.a_first - blk.a_first <= spread &&
                                next.b_first - blk.b_first <= spread;
      if (could_extend) fail(i, "block is not maximal");
      if (!should_be_short && next.a_first - blk.a_first < p.ell &&
          next.b_first - blk.b_first < p.ell) {
        fail(i, "regular block followed by a start closer than ell in both coordinates");
      }
    }
    if (delta && blk.label != BlockLabel::kUnset) {
      const auto ell = static_cast<double>(p.ell);
      const double tol = 1e-12 * ell * ell;
      if (blk.r_bar * blk.s_bar < *delta * ell * ell - tol) fail(i, "r_bar s_bar < delta ell^2");
      if (blk.r_bar + blk.s_bar > 2.0 * ell + 1e-12 * ell) fail(i, "r_bar + s_bar > 2 ell");
      if (blk.r_bar < blk.rows() || blk.s_bar < blk.cols()) {
        fail(i, "block content does not fit its enlarged window");
      }
      if (blk.r_bar < std::min<double>(blk.rows(), ell) ||
          blk.s_bar < std::min<double>(blk.cols(), ell)) {
        fail(i, "enlargement shrank the block");
      }
    }
    offset += blk.edge_count;
  }
  if (offset != edges.size()) bad.push_back("blocks do not cover every matching edge");
  return bad;
}

std::string to_text(const BlockPartition& p) {
  std::string out;
  for (const Block& blk : p.blocks) {
    out += std::to_string(blk.a_first) + ' ' + std::to_string(blk.a_last) + ' ' +
           std::to_string(blk.b_first) + ' ' + std::to_string(blk.b_last) + ' ' +
           std::to_string(blk.edge_count) + ' ' + label_name(blk.label) + ' ' +
           fmt12(blk.r_bar) + ' ' + fmt12(blk.s_bar) + '\n';
  }
  return out;
}

BlockPartition parse_text(std::string_view text, std::uint64_t ell, std::uint64_t e_max,
                          SpreadRule rule) {
  BlockPartition p;
  p.ell = ell;
  p.e_max = e_max;
  p.rule = rule;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    std::istringstream fields(line);
    Block blk;
    std::string label;
    if (!(fields >> blk.a_first >> blk.a_last >> blk.b_first >> blk.b_last >> blk.edge_count >>
          label >> blk.r_bar >> blk.s_bar)) {
      throw DomainError("text", "malformed block line: " + line);
    }
    if (label == "short") {
      blk.label = BlockLabel::kShort;
    } else if (label == "regular") {
      blk.label = BlockLabel::kRegular;
    } else if (label == "unset") {
      blk.label = BlockLabel::kUnset;
    } else {
      throw DomainError("text", "unknown block label: " + label);
    }
    p.blocks.push_back(blk);
  }
  return p;
}

}  // namespace planarlab
