#ifndef SOMBORQ_GRAPH_HPP
#define SOMBORQ_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "somborq/errors.hpp"

namespace somborq {

/// Undirected simple graph on vertices 0..n-1 with sorted adjacency lists.
/// Values are immutable: every mutating operation returns a new graph, so
/// graphs can be shared freely across threads.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const noexcept { return n_; }
  int size() const noexcept { return m_; }

  int degree(int v) const;
  bool has_edge(int u, int v) const;
  const std::vector<int>& neighbors(int v) const;

  /// Edges as (u,v) pairs with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  Graph add_edge(int u, int v) const;     // edge must be absent
  Graph delete_edge(int u, int v) const;  // edge must be present
  /// Remove v and compact labels to 0..n-2, preserving relative order.
  Graph delete_vertex(int v) const;

  /// New graph with vertex v relabelled to perm[v].
  Graph relabeled(const std::vector<int>& perm) const;

  bool operator==(const Graph& other) const = default;

private:
  void check_vertex(int v) const;

  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;
};

struct QuasiTreeWitness {
  int apex = 0;  // removing this vertex leaves a tree
  int k = 0;     // its degree
  bool operator==(const QuasiTreeWitness&) const = default;
};

bool is_connected(const Graph& g);

/// Connected and acyclic. The empty graph is not a tree; a single vertex is.
bool is_tree(const Graph& g);

/// All vertices u with deg(u) >= 1 whose removal leaves a tree, sorted by
/// vertex id. Empty exactly when g is not a quasi-tree.
std::vector<QuasiTreeWitness> quasi_tree_witnesses(const Graph& g);

/// Relabelling-invariant encoding; equal bytes iff isomorphic (n <= 16).
struct CanonicalForm {
  std::vector<std::uint8_t> bytes;
  auto operator<=>(const CanonicalForm&) const = default;
  std::string hex() const;
};

struct CanonicalResult {
  CanonicalForm form;
  std::uint64_t automorphisms = 1;
};

CanonicalForm canonical_form(const Graph& g);
CanonicalResult canonical_form_with_aut(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace somborq

#endif
