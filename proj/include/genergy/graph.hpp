#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <iterator>
#include <string>
#include <utility>
#include <vector>

#include "genergy/matrix.hpp"

namespace genergy {

using Edge = std::pair<std::size_t, std::size_t>;

/// Simple undirected graph on vertices 0..order-1. Edges are stored
/// canonically: each pair (u, v) with u < v, the list sorted.
class Graph {
 public:
  explicit Graph(std::size_t order, std::vector<Edge> edges = {});

  std::size_t order() const noexcept { return order_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool has_edge(std::size_t u, std::size_t v) const;
  std::vector<std::size_t> degrees() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t order_;
  std::vector<Edge> edges_;
};

// Named families. Labelings:
//   complete(n)                every pair
//   complete_bipartite(a, b)   parts {0..a-1} and {a..a+b-1}
//   cycle(n)                   i ~ i+1 (mod n)
//   path(n)                    i ~ i+1
//   star(n)                    centre 0 joined to 1..n-1
//   petersen()                 outer 5-cycle 0..4, spokes i ~ i+5,
//                              inner pentagram i+5 ~ (i+2 mod 5)+5
Graph complete(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph cycle(std::size_t n);
Graph path(std::size_t n);
Graph star(std::size_t n);
Graph petersen();

/// Parses a family spec: "complete:4", "complete_bipartite:2:3", "cycle:5",
/// "path:3", "star:6", "petersen". Whitespace works as separator too.
Graph family(const std::string& spec);

/// n x n symmetric 0/1 matrix with zero diagonal.
DenseMatrix adjacency(const Graph& g);

/// Number of potential edges n(n-1)/2.
constexpr std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

/// Index of pair (i, j), i < j, in row-major order over i < j. This is the
/// canonical edge ordering used by enumeration, sampling and local search.
constexpr std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

/// Graph whose edge set is the bits of `mask` under the canonical ordering
/// (bit k <-> k-th pair).
Graph graph_from_mask(std::size_t n, std::uint64_t mask);

/// All labeled graphs on n <= 6 vertices. Iteration yields each of the
/// 2^(n(n-1)/2) graphs once, in increasing order of the edge-indicator mask.
/// Placing edge (i, j) at bit i*n + j instead of at its pair index gives the
/// same order, since both maps are monotone in the row-major pair order.
class LabeledGraphs {
 public:
  static constexpr std::size_t max_order = 6;

  explicit LabeledGraphs(std::size_t n);

  std::size_t order() const noexcept { return n_; }
  std::uint64_t count() const noexcept { return std::uint64_t{1} << pair_count(n_); }
  Graph at(std::uint64_t mask) const { return graph_from_mask(n_, mask); }

  class iterator {
   public:
    using value_type = Graph;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    iterator(std::size_t n, std::uint64_t mask) : n_(n), mask_(mask) {}
    Graph operator*() const { return graph_from_mask(n_, mask_); }
    iterator& operator++() {
      ++mask_;
      return *this;
    }
    iterator operator++(int) {
      auto old = *this;
      ++mask_;
      return old;
    }
    std::uint64_t mask() const noexcept { return mask_; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.mask_ == b.mask_; }

   private:
    std::size_t n_ = 0;
    std::uint64_t mask_ = 0;
  };

  iterator begin() const { return {n_, 0}; }
  iterator end() const { return {n_, count()}; }

 private:
  std::size_t n_;
};

/// Throws GuardError for n > 6 or n == 0.
LabeledGraphs enumerate_graphs(std::size_t n);

// Edge-list text: first non-comment line is n, then one "u v" per line.
// '#' comments and blank lines are ignored; pairs are canonicalized to u < v.
Graph parse_edge_list(const std::string& text);
Graph read_edge_list(std::istream& in);
std::string serialize_edge_list(const Graph& g);

}  // namespace genergy
