#include "planarlab/models.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "planarlab/error.hpp"

namespace planarlab {

OrderedBipartiteGraph::OrderedBipartiteGraph(std::uint32_t r, std::uint32_t s,
                                             std::vector<Edge> edges)
    : r_(r), s_(s), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    require(e.a >= 1 && e.a <= r_, "edges", "a-endpoint out of range");
    require(e.b >= 1 && e.b <= s_, "edges", "b-endpoint out of range");
    require(i == 0 || edges_[i - 1] < e, "edges", "edge list must be strictly sorted");
  }
}

WordPair::WordPair(std::uint32_t k, std::vector<std::uint32_t> word_a,
                   std::vector<std::uint32_t> word_b)
    : k_(k), word_a_(std::move(word_a)), word_b_(std::move(word_b)) {
  require(k_ >= 1, "k", "alphabet size must be at least 1");
  auto in_alphabet = [this](std::uint32_t c) { return c >= 1 && c <= k_; };
  require(std::ranges::all_of(word_a_, in_alphabet), "word_a", "character outside {1..k}");
  require(std::ranges::all_of(word_b_, in_alphabet), "word_b", "character outside {1..k}");
}

WeightedGrid::WeightedGrid(std::uint32_t rows, std::uint32_t cols,
                           std::vector<std::uint64_t> weights)
    : rows_(rows), cols_(cols), weights_(std::move(weights)) {
  require(weights_.size() == static_cast<std::size_t>(rows_) * cols_, "weights",
          "size must equal rows * cols");
}

BernoulliMatrix::BernoulliMatrix(std::uint32_t n, std::vector<std::uint8_t> entries)
    : n_(n), entries_(std::move(entries)) {
  require(entries_.size() == static_cast<std::size_t>(n_) * n_, "entries",
          "size must equal n * n");
  require(std::ranges::all_of(entries_, [](std::uint8_t v) { return v <= 1; }), "entries",
          "entries must be 0 or 1");
}

WordPair sample_word_pair(std::uint32_t r, std::uint32_t s, std::uint32_t k, RngStream& stream) {
  require(r >= 1, "r", "must be at least 1");
  require(s >= 1, "s", "must be at least 1");
  require(k >= 1, "k", "must be at least 1");
  std::vector<std::uint32_t> word_a(r);
  std::vector<std::uint32_t> word_b(s);
  for (auto& c : word_a) c = static_cast<std::uint32_t>(stream.next_below(k)) + 1;
  for (auto& c : word_b) c = static_cast<std::uint32_t>(stream.next_below(k)) + 1;
  return WordPair(k, std::move(word_a), std::move(word_b));
}

OrderedBipartiteGraph words_to_graph(const WordPair& w) {
  const auto word_a = w.word_a();
  const auto word_b = w.word_b();
  // B positions grouped by character, ascending within each group.
  std::vector<std::uint32_t> by_char(word_b.size());
  std::iota(by_char.begin(), by_char.end(), 0U);
  std::ranges::stable_sort(by_char, {}, [&](std::uint32_t j) { return word_b[j]; });

  std::vector<Edge> edges;
  for (std::uint32_t i = 0; i < word_a.size(); ++i) {
    const std::uint32_t c = word_a[i];
    auto lo = std::ranges::lower_bound(by_char, c, {}, [&](std::uint32_t j) { return word_b[j]; });
    for (auto it = lo; it != by_char.end() && word_b[*it] == c; ++it) {
      edges.push_back({i + 1, *it + 1});
    }
  }
  return OrderedBipartiteGraph(w.r(), w.s(), std::move(edges));
}

OrderedBipartiteGraph sample_binomial_graph(std::uint32_t r, std::uint32_t s, double p,
                                            RngStream& stream) {
  require(p >= 0.0 && p <= 1.0, "p", "must lie in [0, 1]");
  const std::uint64_t cells = static_cast<std::uint64_t>(r) * s;
  std::vector<Edge> edges;
  auto emit = [&](std::uint64_t idx) {
    edges.push_back({static_cast<std::uint32_t>(idx / s) + 1,
                     static_cast<std::uint32_t>(idx % s) + 1});
  };
  if (p == 0.0) {
    // empty
  } else if (p == 1.0) {
    edges.reserve(cells);
    for (std::uint64_t idx = 0; idx < cells; ++idx) emit(idx);
  } else if (p < 0.25) {
    const double log_q = std::log1p(-p);
    edges.reserve(static_cast<std::size_t>(static_cast<double>(cells) * p * 1.1) + 16);
    std::uint64_t idx = 0;
    while (true) {
      const std::uint64_t gap = stream.geometric_from_log(log_q);
      if (gap >= cells - idx) break;
      idx += gap;
      emit(idx);
      if (++idx >= cells) break;
    }
  } else {
    for (std::uint64_t idx = 0; idx < cells; ++idx) {
      if (stream.bernoulli(p)) emit(idx);
    }
  }
  return OrderedBipartiteGraph(r, s, std::move(edges));
}

WeightedGrid sample_geometric_grid(std::uint32_t n, double p, RngStream& stream) {
  require(p > 0.0 && p < 1.0, "p", "must lie in (0, 1)");
  const double log_q = std::log1p(-p);
  std::vector<std::uint64_t> weights(static_cast<std::size_t>(n) * n);
  for (auto& w : weights) w = stream.geometric_from_log(log_q);
  return WeightedGrid(n, n, std::move(weights));
}

OrderedBipartiteGraph weights_to_graph(const WeightedGrid& g) {
  std::vector<Edge> edges;
  for (std::uint32_t a = 1; a <= g.rows(); ++a) {
    for (std::uint32_t b = 1; b <= g.cols(); ++b) {
      if (g.at(a, b) > 0) edges.push_back({a, b});
    }
  }
  return OrderedBipartiteGraph(g.rows(), g.cols(), std::move(edges));
}

BernoulliMatrix sample_bernoulli_matrix(std::uint32_t n, double p, RngStream& stream) {
  require(p >= 0.0 && p <= 1.0, "p", "must lie in [0, 1]");
  std::vector<std::uint8_t> entries(static_cast<std::size_t>(n) * n);
  for (auto& e : entries) e = stream.bernoulli(p) ? 1 : 0;
  return BernoulliMatrix(n, std::move(entries));
}

OrderedBipartiteGraph matrix_to_graph(const BernoulliMatrix& m) {
  std::vector<Edge> edges;
  for (std::uint32_t row = 1; row <= m.n(); ++row) {
    for (std::uint32_t col = 1; col <= m.n(); ++col) {
      if (m.at(row, col)) edges.push_back({row, col});
    }
  }
  return OrderedBipartiteGraph(m.n(), m.n(), std::move(edges));
}

std::vector<std::uint32_t> sample_permutation(std::uint32_t n, RngStream& stream) {
  require(n >= 1, "N", "must be at least 1");
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 1U);
  for (std::uint32_t i = n - 1; i > 0; --i) {
    const auto j = static_cast<std::uint32_t>(stream.next_below(std::uint64_t{i} + 1));
    std::swap(perm[i], perm[j]);
  }
  return perm;
}

}  // namespace planarlab
