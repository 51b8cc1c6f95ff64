#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sparsecc/rational.hpp"
#include "sparsecc/xexpr.hpp"

namespace sparsecc {

using Edge = std::pair<int, int>;

// Small simple labelled graph: no loops, no repeated edges.
struct Graph {
  int n = 0;
  std::vector<Edge> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }
  int excess() const { return edge_count() - n; }
  std::vector<std::vector<int>> adjacency() const;
};

// Validates endpoints, rejects loops and duplicates, normalises u < v.
Graph make_graph(int n, std::vector<Edge> edges);

// c3..c16, k4, diamond, bowtie, k23, house, prism. Throws invalid_input.
Graph named_graph(std::string_view name);
// Cycle length when g is a polygon, otherwise nullopt.
std::optional<int> polygon_length(const Graph& g);

bool is_connected(const Graph& g);
// Connected, at least 3 vertices, and no cut vertex.
bool is_two_connected(const Graph& g);
long automorphism_count(const Graph& g);

// c(H) T^v with excess e(H) - v(H), where c(H) = 1/|Aut(H)|.
Configuration configuration_of(const Graph& h);

// Symmetric multiplicity matrix; mult[x][x] counts loops at x.
struct MultigraphInstance {
  int n = 0;
  std::vector<std::vector<int>> mult;

  explicit MultigraphInstance(int n_ = 0)
      : n(n_), mult(n_, std::vector<int>(n_, 0)) {}
  int edge_count() const;
  int degree(int x) const;  // a loop adds 2
  void add_edge(int x, int y);
};

// 1 / prod_x (2^{m_xx} prod_{y>=x} m_xy!)
Rational kappa(const MultigraphInstance& mg);

bool isomorphic(const MultigraphInstance& a, const MultigraphInstance& b);
MultigraphInstance as_multigraph(const Graph& g);

// Kernel of a (multi)graph given as an edge list: prune to the 2-core and
// suppress vertices of degree 2. Returns nullopt when the 2-core is empty or
// a disjoint union of cycles with no vertex of degree >= 3.
std::optional<MultigraphInstance> kernel_of(int n, const std::vector<Edge>& edges);

// Adjacency-list graph used for copy search in large sparse components.
class SparseGraph {
 public:
  SparseGraph(int n, const std::vector<Edge>& edges);  // loops and repeats dropped
  int size() const { return static_cast<int>(adj_.size()); }
  const std::vector<int>& neighbours(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const;

 private:
  std::vector<std::vector<int>> adj_;
};

// Backtracking search for injective homomorphisms of a connected pattern.
class PatternMatcher {
 public:
  explicit PatternMatcher(const Graph& pattern);

  const Graph& pattern() const { return pattern_; }
  long automorphisms() const { return automorphisms_; }

  // Stops after step_limit extension attempts; returns nullopt in that case.
  std::optional<bool> exists(const SparseGraph& g, long step_limit = -1) const;
  long count_embeddings(const SparseGraph& g) const;

  // Dense path for graphs on at most 16 vertices with bitmask adjacency.
  // Calls visit(image) for each embedding; visit returns false to stop.
  template <class Visit>
  void for_each_embedding(const std::uint16_t* adj, int n, Visit&& visit) const;

 private:
  Graph pattern_;
  long automorphisms_ = 1;
  std::vector<int> order_;                    // pattern vertices in search order
  std::vector<int> anchor_;                   // earlier neighbour used to generate candidates
  std::vector<std::vector<int>> back_edges_;  // earlier neighbours (positions in order_)
};

template <class Visit>
void PatternMatcher::for_each_embedding(const std::uint16_t* adj, int n, Visit&& visit) const {
  const int h = pattern_.n;
  if (h > n) return;
  std::vector<int> image(h, -1);
  std::vector<std::uint16_t> candidates(h, 0);
  std::uint16_t used = 0;
  int depth = 0;
  auto build = [&](int d) {
    std::uint16_t c;
    if (d == 0) {
      c = static_cast<std::uint16_t>((1u << n) - 1);
    } else {
      c = adj[image[order_[anchor_[d]]]];
      for (int j : back_edges_[d]) c &= adj[image[order_[j]]];
    }
    candidates[d] = static_cast<std::uint16_t>(c & ~used);
  };
  build(0);
  while (depth >= 0) {
    if (candidates[depth] == 0) {
      --depth;
      if (depth >= 0) used &= static_cast<std::uint16_t>(~(1u << image[order_[depth]]));
      continue;
    }
    const int v = __builtin_ctz(candidates[depth]);
    candidates[depth] &= static_cast<std::uint16_t>(candidates[depth] - 1);
    image[order_[depth]] = v;
    if (depth == h - 1) {
      if (!visit(image)) return;
      continue;
    }
    used |= static_cast<std::uint16_t>(1u << v);
    ++depth;
    build(depth);
  }
}

}  // namespace sparsecc
