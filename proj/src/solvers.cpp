#include "planarlab/solvers.hpp"

#include <algorithm>
#include <numeric>

#include "planarlab/error.hpp"

namespace planarlab {

namespace {

bool noncrossing_before(const Edge& x, const Edge& y) { return x.a < y.a && x.b < y.b; }

// Edge order used by the strict reduction: a ascending, b descending. Within
// one a-node the b-values then decrease, so a strict LIS picks at most one.
std::vector<std::uint32_t> b_in_reduction_order(std::span<const Edge> edges) {
  std::vector<std::uint32_t> bs;
  bs.reserve(edges.size());
  std::size_t i = 0;
  while (i < edges.size()) {
    std::size_t j = i;
    while (j < edges.size() && edges[j].a == edges[i].a) ++j;
    for (std::size_t t = j; t > i; --t) bs.push_back(edges[t - 1].b);
    i = j;
  }
  return bs;
}

// Prefix maximum over positions 1..n.
class PrefixMax {
 public:
  explicit PrefixMax(std::size_t n) : tree_(n + 1, 0) {}

  void raise(std::size_t pos, std::uint64_t value) {
    for (; pos < tree_.size(); pos += pos & (~pos + 1)) tree_[pos] = std::max(tree_[pos], value);
  }

  std::uint64_t query(std::size_t pos) const {
    std::uint64_t best = 0;
    for (; pos > 0; pos -= pos & (~pos + 1)) best = std::max(best, tree_[pos]);
    return best;
  }

 private:
  std::vector<std::uint64_t> tree_;
};

}  // namespace

PlanarMatching::PlanarMatching(std::vector<Edge> edges) : edges_(std::move(edges)) {
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    require(noncrossing_before(edges_[i - 1], edges_[i]), "edges",
            "matching edges must increase strictly in both coordinates");
  }
}

std::size_t planar_matching_size(const OrderedBipartiteGraph& g) {
  return lis_length(b_in_reduction_order(g.edges()));
}

PlanarMatching planar_matching_recover(const OrderedBipartiteGraph& g) {
  const auto edges = g.edges();
  const std::size_t m = edges.size();
  if (m == 0) return {};

  // chain[i]: longest planar chain that starts with edges[i]. Scan a
  // descending, b ascending inside each a, and run a strictly decreasing LIS
  // on b; the pile an edge lands in is its chain length.
  std::vector<std::uint32_t> chain(m);
  std::vector<std::uint32_t> tails;  // tails[h]: largest b heading a chain of length h+1
  std::size_t hi = m;
  while (hi > 0) {
    std::size_t lo = hi - 1;
    while (lo > 0 && edges[lo - 1].a == edges[hi - 1].a) --lo;
    for (std::size_t i = lo; i < hi; ++i) {
      const std::uint32_t b = edges[i].b;
      auto it = std::lower_bound(tails.begin(), tails.end(), b, std::greater<>{});
      chain[i] = static_cast<std::uint32_t>(it - tails.begin()) + 1;
      if (it == tails.end()) {
        tails.push_back(b);
      } else {
        *it = b;
      }
    }
    hi = lo;
  }

  // Greedy lexicographic walk: the first qualifying edge is the smallest.
  auto need = static_cast<std::uint32_t>(tails.size());
  std::vector<Edge> picked;
  picked.reserve(need);
  Edge last{0, 0};
  for (std::size_t i = 0; i < m && need > 0; ++i) {
    if (chain[i] == need && noncrossing_before(last, edges[i])) {
      picked.push_back(edges[i]);
      last = edges[i];
      --need;
    }
  }
  return PlanarMatching(std::move(picked));
}

std::size_t lcs_length_dp(const WordPair& w) {
  const auto x = w.word_a();
  const auto y = w.word_b();
  std::vector<std::uint32_t> prev(y.size() + 1, 0);
  std::vector<std::uint32_t> cur(y.size() + 1, 0);
  for (std::size_t i = 1; i <= x.size(); ++i) {
    for (std::size_t j = 1; j <= y.size(); ++j) {
      cur[j] = x[i - 1] == y[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[y.size()];
}

std::size_t lcs_length_sparse(const WordPair& w) {
  const auto x = w.word_a();
  const auto y = w.word_b();
  std::vector<std::uint32_t> by_char(y.size());
  std::iota(by_char.begin(), by_char.end(), 0U);
  std::ranges::stable_sort(by_char, {}, [&](std::uint32_t j) { return y[j]; });

  std::vector<std::uint32_t> tails;
  for (const std::uint32_t c : x) {
    auto lo = std::ranges::lower_bound(by_char, c, {}, [&](std::uint32_t j) { return y[j]; });
    auto hi = lo;
    while (hi != by_char.end() && y[*hi] == c) ++hi;
    // Descending positions so one character of x matches at most once.
    for (auto it = hi; it != lo; --it) {
      const std::uint32_t pos = *std::prev(it);
      auto slot = std::lower_bound(tails.begin(), tails.end(), pos);
      if (slot == tails.end()) {
        tails.push_back(pos);
      } else {
        *slot = pos;
      }
    }
  }
  return tails.size();
}

std::uint64_t max_weight_planar(const WeightedGrid& g) {
  PrefixMax best(g.cols());
  std::vector<std::pair<std::uint32_t, std::uint64_t>> pending;
  std::uint64_t overall = 0;
  for (std::uint32_t a = 1; a <= g.rows(); ++a) {
    pending.clear();
    for (std::uint32_t b = 1; b <= g.cols(); ++b) {
      const std::uint64_t w = g.at(a, b);
      if (w == 0) continue;
      pending.emplace_back(b, best.query(b - 1) + w);
    }
    // Commit after the whole row has been queried: same-row cells never chain.
    for (const auto& [b, value] : pending) {
      best.raise(b, value);
      overall = std::max(overall, value);
    }
  }
  return overall;
}

std::size_t odb_height(const BernoulliMatrix& m) {
  std::vector<std::uint32_t> tails;
  for (std::uint32_t row = 1; row <= m.n(); ++row) {
    for (std::uint32_t col = m.n(); col >= 1; --col) {
      if (!m.at(row, col)) continue;
      // Weak comparison on columns: equal columns may follow each other.
      auto it = std::upper_bound(tails.begin(), tails.end(), col);
      if (it == tails.end()) {
        tails.push_back(col);
      } else {
        *it = col;
      }
    }
  }
  return tails.size();
}

std::size_t brute_force_planar_size(const OrderedBipartiteGraph& g) {
  const auto edges = g.edges();
  require(edges.size() <= kBruteForceEdgeLimit, "edges",
          "brute force is limited to 25 edges");
  std::size_t best = 0;
  std::vector<std::size_t> chosen;
  // Depth-first over every subset of pairwise noncrossing edges.
  auto extend = [&](auto&& self, std::size_t from) -> void {
    best = std::max(best, chosen.size());
    for (std::size_t i = from; i < edges.size(); ++i) {
      const bool fits = std::ranges::all_of(chosen, [&](std::size_t j) {
        const Edge& x = edges[j];
        const Edge& y = edges[i];
        return (x.a < y.a && x.b < y.b) || (y.a < x.a && y.b < x.b);
      });
      if (!fits) continue;
      chosen.push_back(i);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  extend(extend, 0);
  return best;
}

}  // namespace planarlab
