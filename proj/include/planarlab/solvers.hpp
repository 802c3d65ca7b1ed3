#pragma once

// Exact solvers for maximum planar matchings and their relatives, plus an
// exhaustive oracle for small instances.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iterator>
#include <ranges>
#include <span>
#include <vector>

#include "planarlab/models.hpp"

namespace planarlab {

/// Edges strictly increasing in both coordinates, i.e. pairwise noncrossing.
class PlanarMatching {
 public:
  PlanarMatching() = default;
  explicit PlanarMatching(std::vector<Edge> edges);

  std::span<const Edge> edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }

  bool operator==(const PlanarMatching&) const = default;

 private:
  std::vector<Edge> edges_;
};

/// Length of the longest subsequence that is strictly increasing under
/// `less`. Patience sorting, O(N log N).
template <std::ranges::input_range R, typename Less = std::less<>>
std::size_t lis_length(const R& seq, Less less = {}) {
  using T = std::ranges::range_value_t<R>;
  std::vector<T> tails;
  for (const auto& v : seq) {
    auto it = std::lower_bound(tails.begin(), tails.end(), v, less);
    if (it == tails.end()) {
      tails.push_back(v);
    } else {
      *it = v;
    }
  }
  return tails.size();
}

/// Longest strictly decreasing subsequence.
template <std::ranges::input_range R>
std::size_t lds_length(const R& seq) {
  return lis_length(seq, std::greater<>{});
}

/// L(G): size of a maximum planar matching.
std::size_t planar_matching_size(const OrderedBipartiteGraph& g);

/// A maximum planar matching. Among all maximum ones, returns the
/// lexicographically smallest edge sequence.
PlanarMatching planar_matching_recover(const OrderedBipartiteGraph& g);

/// Classical O(rs) longest common subsequence table.
std::size_t lcs_length_dp(const WordPair& w);

/// Longest common subsequence over the match list (Hunt-Szymanski),
/// O((r + s + m) log s) with m matching pairs.
std::size_t lcs_length_sparse(const WordPair& w);

/// Maximum total weight of a planar matching on the grid's cells.
std::uint64_t max_weight_planar(const WeightedGrid& g);

/// Longest chain of 1-cells with rows strictly increasing and columns
/// nondecreasing.
std::size_t odb_height(const BernoulliMatrix& m);

inline constexpr std::size_t kBruteForceEdgeLimit = 25;

/// Exhaustive search over noncrossing edge subsets; rejects graphs with more
/// than kBruteForceEdgeLimit edges.
std::size_t brute_force_planar_size(const OrderedBipartiteGraph& g);

}  // namespace planarlab
