#pragma once

// Random ordered bipartite graphs and the weighted/0-1 grids they are
// coupled to. Nodes on both sides are numbered from 1.

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "planarlab/rng.hpp"

namespace planarlab {

struct Edge {
  std::uint32_t a = 0;
  std::uint32_t b = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Bipartite graph on A = {1..r}, B = {1..s}. The edge list is always
/// strictly sorted lexicographically, which also rules out duplicates.
class OrderedBipartiteGraph {
 public:
  OrderedBipartiteGraph(std::uint32_t r, std::uint32_t s, std::vector<Edge> edges);

  std::uint32_t r() const noexcept { return r_; }
  std::uint32_t s() const noexcept { return s_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  bool operator==(const OrderedBipartiteGraph&) const = default;

 private:
  std::uint32_t r_;
  std::uint32_t s_;
  std::vector<Edge> edges_;
};

/// Two words over the alphabet {1..k}.
class WordPair {
 public:
  WordPair(std::uint32_t k, std::vector<std::uint32_t> word_a, std::vector<std::uint32_t> word_b);

  std::uint32_t k() const noexcept { return k_; }
  std::span<const std::uint32_t> word_a() const noexcept { return word_a_; }
  std::span<const std::uint32_t> word_b() const noexcept { return word_b_; }
  std::uint32_t r() const noexcept { return static_cast<std::uint32_t>(word_a_.size()); }
  std::uint32_t s() const noexcept { return static_cast<std::uint32_t>(word_b_.size()); }

  bool operator==(const WordPair&) const = default;

 private:
  std::uint32_t k_;
  std::vector<std::uint32_t> word_a_;
  std::vector<std::uint32_t> word_b_;
};

/// Row-major r x s array of nonnegative integer weights.
class WeightedGrid {
 public:
  WeightedGrid(std::uint32_t rows, std::uint32_t cols, std::vector<std::uint64_t> weights);

  std::uint32_t rows() const noexcept { return rows_; }
  std::uint32_t cols() const noexcept { return cols_; }
  /// 1-based access.
  std::uint64_t at(std::uint32_t a, std::uint32_t b) const { return weights_[index(a, b)]; }
  std::span<const std::uint64_t> weights() const noexcept { return weights_; }

  bool operator==(const WeightedGrid&) const = default;

 private:
  std::size_t index(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::size_t>(a - 1) * cols_ + (b - 1);
  }

  std::uint32_t rows_;
  std::uint32_t cols_;
  std::vector<std::uint64_t> weights_;
};

/// n x n 0/1 matrix, row-major.
class BernoulliMatrix {
 public:
  BernoulliMatrix(std::uint32_t n, std::vector<std::uint8_t> entries);

  std::uint32_t n() const noexcept { return n_; }
  bool at(std::uint32_t row, std::uint32_t col) const {
    return entries_[static_cast<std::size_t>(row - 1) * n_ + (col - 1)] != 0;
  }
  std::span<const std::uint8_t> entries() const noexcept { return entries_; }

  bool operator==(const BernoulliMatrix&) const = default;

 private:
  std::uint32_t n_;
  std::vector<std::uint8_t> entries_;
};

WordPair sample_word_pair(std::uint32_t r, std::uint32_t s, std::uint32_t k, RngStream& stream);

/// Edge (a, b) iff word_a[a] == word_b[b].
OrderedBipartiteGraph words_to_graph(const WordPair& w);

/// Each of the r*s edges independently with probability p. Sparse p uses
/// geometric gap skipping; the resulting law is the same.
OrderedBipartiteGraph sample_binomial_graph(std::uint32_t r, std::uint32_t s, double p,
                                            RngStream& stream);

/// n x n grid of i.i.d. weights with P(w = j) = (1-p)^j p, j >= 0.
WeightedGrid sample_geometric_grid(std::uint32_t n, double p, RngStream& stream);

/// Keeps exactly the cells with nonzero weight. Note P(w > 0) = 1 - p under the
/// geometric law above, so the result is distributed as the binomial model
/// with edge probability 1 - p, not p.
OrderedBipartiteGraph weights_to_graph(const WeightedGrid& g);

BernoulliMatrix sample_bernoulli_matrix(std::uint32_t n, double p, RngStream& stream);

/// The graph whose edges are the 1-cells (row, column) of the matrix.
OrderedBipartiteGraph matrix_to_graph(const BernoulliMatrix& m);

/// Uniform permutation of {1..n} by Fisher-Yates.
std::vector<std::uint32_t> sample_permutation(std::uint32_t n, RngStream& stream);

}  // namespace planarlab
