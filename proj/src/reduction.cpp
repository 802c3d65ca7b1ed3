#include "planarlab/reduction.hpp"

#include <algorithm>
#include <cmath>

#include "planarlab/error.hpp"

namespace planarlab {

namespace {

struct Degrees {
  std::vector<std::uint32_t> a;  // indexed by node, slot 0 unused
  std::vector<std::uint32_t> b;
};

Degrees count_degrees(const OrderedBipartiteGraph& g) {
  Degrees d{std::vector<std::uint32_t>(g.r() + 1, 0), std::vector<std::uint32_t>(g.s() + 1, 0)};
  for (const Edge& e : g.edges()) ++d.a[e.a];
  for (const Edge& e : g.edges()) ++d.b[e.b];
  return d;
}

std::vector<std::uint64_t> histogram(const std::vector<std::uint32_t>& degrees) {
  std::vector<std::uint64_t> h;
  for (std::size_t v = 1; v < degrees.size(); ++v) {
    if (degrees[v] >= h.size()) h.resize(degrees[v] + 1, 0);
    ++h[degrees[v]];
  }
  return h;
}

// s/k - (s/k) (1 - 1/k)^(s-1): expected degree of one node minus P(degree 1).
double expected_y_one_node(std::uint32_t s, std::uint32_t k) {
  const double mean = static_cast<double>(s) / k;
  if (s == 1) return 0.0;
  if (k == 1) return mean;
  return -mean * std::expm1(static_cast<double>(s - 1) * std::log1p(-1.0 / k));
}

}  // namespace

OrderedBipartiteGraph prune_degree_ge2(const OrderedBipartiteGraph& g) {
  const Degrees d = count_degrees(g);
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (d.a[e.a] == 1 && d.b[e.b] == 1) kept.push_back(e);
  }
  return OrderedBipartiteGraph(g.r(), g.s(), std::move(kept));
}

std::vector<std::uint32_t> matching_to_permutation(const OrderedBipartiteGraph& g) {
  const Degrees d = count_degrees(g);
  require(std::ranges::all_of(d.a, [](std::uint32_t x) { return x <= 1; }) &&
              std::ranges::all_of(d.b, [](std::uint32_t x) { return x <= 1; }),
          "graph", "every node must have degree at most 1");
  // rank[b] = position of b among the matched B-nodes.
  std::vector<std::uint32_t> rank(g.s() + 1, 0);
  std::uint32_t next = 0;
  for (std::uint32_t b = 1; b <= g.s(); ++b) {
    if (d.b[b] == 1) rank[b] = ++next;
  }
  std::vector<std::uint32_t> perm;
  perm.reserve(g.edge_count());
  for (const Edge& e : g.edges()) perm.push_back(rank[e.b]);
  return perm;
}

EdgeStats edge_stats(const OrderedBipartiteGraph& pruned, const OrderedBipartiteGraph& original) {
  require(prune_degree_ge2(original) == pruned, "pruned",
          "must equal prune_degree_ge2(original)");
  const Degrees d = count_degrees(original);
  EdgeStats stats;
  stats.edges_total = original.edge_count();
  stats.edges_removed = original.edge_count() - pruned.edge_count();
  stats.degree_histogram_a = histogram(d.a);
  stats.degree_histogram_b = histogram(d.b);
  auto add_y = [&](const std::vector<std::uint32_t>& degrees) {
    for (std::size_t v = 1; v < degrees.size(); ++v) {
      if (degrees[v] >= 2) stats.y_total += degrees[v];
    }
  };
  add_y(d.a);
  add_y(d.b);
  stats.removed_within_y = stats.edges_removed <= stats.y_total;
  return stats;
}

ExpectedRemoved expected_removed_exact(std::uint32_t r, std::uint32_t s, std::uint32_t k) {
  require(r >= 1, "r", "must be at least 1");
  require(s >= 1, "s", "must be at least 1");
  require(k >= 1, "k", "must be at least 1");
  ExpectedRemoved out;
  out.exact = r * expected_y_one_node(s, k) + s * expected_y_one_node(r, k);
  const double kk = static_cast<double>(k);
  out.crude_bound = (static_cast<double>(r) + s) * r * s / (kk * kk);
  return out;
}

}  // namespace planarlab
