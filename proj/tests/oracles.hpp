#pragma once

// Independent brute-force oracles. None of these share code paths with the
// library's solvers: they enumerate subsets or fill full tables directly.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "planarlab/models.hpp"
#include "planarlab/rng.hpp"

namespace oracle {

using planarlab::Edge;

/// Longest subsequence satisfying `ok(prev, next)` for consecutive picks, by
/// enumerating all 2^N subsets. N <= 20.
template <typename T, typename Ok>
std::size_t best_subsequence(const std::vector<T>& seq, Ok ok) {
  std::size_t best = 0;
  const std::size_t n = seq.size();
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    std::optional<T> prev;
    bool good = true;
    std::size_t len = 0;
    for (std::size_t i = 0; i < n && good; ++i) {
      if (!(mask >> i & 1U)) continue;
      if (prev && !ok(*prev, seq[i])) good = false;
      prev = seq[i];
      ++len;
    }
    if (good) best = std::max(best, len);
  }
  return best;
}

inline std::size_t lis_brute(const std::vector<int>& seq) {
  return best_subsequence(seq, [](int x, int y) { return x < y; });
}

inline std::size_t lds_brute(const std::vector<int>& seq) {
  return best_subsequence(seq, [](int x, int y) { return x > y; });
}

/// Full-table DP on the adjacency matrix: L(a, b) over prefixes.
inline std::size_t planar_table(const planarlab::OrderedBipartiteGraph& g) {
  std::vector<std::vector<std::uint8_t>> adj(g.r() + 1, std::vector<std::uint8_t>(g.s() + 1, 0));
  for (const Edge& e : g.edges()) adj[e.a][e.b] = 1;
  std::vector<std::vector<std::size_t>> t(g.r() + 1, std::vector<std::size_t>(g.s() + 1, 0));
  for (std::uint32_t a = 1; a <= g.r(); ++a) {
    for (std::uint32_t b = 1; b <= g.s(); ++b) {
      t[a][b] = std::max({t[a - 1][b], t[a][b - 1], t[a - 1][b - 1] + adj[a][b]});
    }
  }
  return t[g.r()][g.s()];
}

/// Every chain of cells accepted by `follows(prev, next)`, visited by DFS in
/// lexicographic order; returns the lexicographically smallest longest chain.
inline std::vector<Edge> longest_chain_lexmin(const std::vector<Edge>& cells,
                                              const std::function<bool(Edge, Edge)>& follows,
                                              const std::function<std::uint64_t(Edge)>& weight,
                                              std::uint64_t* best_weight = nullptr) {
  std::vector<Edge> sorted = cells;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Edge> cur;
  std::vector<Edge> best;
  std::uint64_t best_w = 0;
  std::uint64_t cur_w = 0;
  std::function<void(std::size_t)> dfs = [&](std::size_t from) {
    if (cur.size() > best.size() || (cur.size() == best.size() && cur < best)) best = cur;
    best_w = std::max(best_w, cur_w);
    for (std::size_t i = from; i < sorted.size(); ++i) {
      if (!cur.empty() && !follows(cur.back(), sorted[i])) continue;
      cur.push_back(sorted[i]);
      cur_w += weight(sorted[i]);
      dfs(i + 1);
      cur_w -= weight(sorted[i]);
      cur.pop_back();
    }
  };
  dfs(0);
  if (best_weight) *best_weight = best_w;
  return best;
}

inline bool strictly_after(Edge x, Edge y) { return x.a < y.a && x.b < y.b; }
inline bool odb_after(Edge x, Edge y) { return x.a < y.a && x.b <= y.b; }

/// Random graph on r x s with each edge present with probability p.
inline planarlab::OrderedBipartiteGraph random_graph(std::uint32_t r, std::uint32_t s, double p,
                                                     planarlab::RngStream& rng) {
  std::vector<Edge> edges;
  for (std::uint32_t a = 1; a <= r; ++a) {
    for (std::uint32_t b = 1; b <= s; ++b) {
      if (rng.bernoulli(p)) edges.push_back({a, b});
    }
  }
  return planarlab::OrderedBipartiteGraph(r, s, std::move(edges));
}

/// Random partial matching: a random injective map from a subset of A into B.
inline planarlab::OrderedBipartiteGraph random_partial_matching(std::uint32_t r, std::uint32_t s,
                                                                planarlab::RngStream& rng) {
  std::vector<std::uint32_t> bs(s);
  for (std::uint32_t i = 0; i < s; ++i) bs[i] = i + 1;
  for (std::uint32_t i = s - 1; i > 0; --i) {
    std::swap(bs[i], bs[rng.next_below(i + 1)]);
  }
  std::vector<Edge> edges;
  for (std::uint32_t a = 1, j = 0; a <= r && j < s; ++a) {
    if (rng.bernoulli(0.6)) edges.push_back({a, bs[j++]});
  }
  return planarlab::OrderedBipartiteGraph(r, s, std::move(edges));
}

}  // namespace oracle
