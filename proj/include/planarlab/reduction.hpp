#pragma once

// Pruning of a bipartite graph down to its degree-one part, and the
// correspondence between partial matchings and permutations.

#include <cstdint>
#include <vector>

#include "planarlab/models.hpp"

namespace planarlab {

/// Keeps exactly the edges whose two endpoints both have degree 1.
OrderedBipartiteGraph prune_degree_ge2(const OrderedBipartiteGraph& g);

/// For a graph of maximum degree 1: the partners' ranks, listed in order of
/// the matched A-nodes. Its LIS equals L(g).
std::vector<std::uint32_t> matching_to_permutation(const OrderedBipartiteGraph& g);

struct EdgeStats {
  std::uint64_t edges_total = 0;    // |E| of the original graph
  std::uint64_t edges_removed = 0;  // |E \ E'|
  // histogram[d] = number of nodes of degree d
  std::vector<std::uint64_t> degree_histogram_a;
  std::vector<std::uint64_t> degree_histogram_b;
  // Y = sum over nodes of degree >= 2 of their degree.
  std::uint64_t y_total = 0;
  bool removed_within_y = true;
};

/// Requires pruned == prune_degree_ge2(original).
EdgeStats edge_stats(const OrderedBipartiteGraph& pruned, const OrderedBipartiteGraph& original);

struct ExpectedRemoved {
  double exact = 0.0;        // E[Y] under the random words model
  double crude_bound = 0.0;  // (r + s) r s / k^2
};

ExpectedRemoved expected_removed_exact(std::uint32_t r, std::uint32_t s, std::uint32_t k);

}  // namespace planarlab
