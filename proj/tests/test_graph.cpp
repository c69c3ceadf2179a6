#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "somborq/families.hpp"
#include "somborq/graph.hpp"

using namespace somborq;

namespace {

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, n - 1);
  return Graph::from_edges(n, e);
}

Graph star_graph(int n) { return construct({Family::S, n, 1}).graph; }

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

// Independent tree test: DFS over adjacency with one vertex masked out,
// avoiding delete_vertex / is_tree so witness results are cross-checked by a
// second route.
bool tree_after_removal_dfs(const Graph& g, int skip) {
  const int n = g.order();
  if (n - 1 <= 0) return false;
  int start = skip == 0 ? 1 : 0;
  std::vector<bool> seen(n, false);
  std::vector<int> stack{start};
  seen[start] = true;
  int visited = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : g.neighbors(u)) {
      if (v == skip) continue;
      if (!seen[v]) {
        seen[v] = true;
        ++visited;
        stack.push_back(v);
      }
    }
  }
  int remaining_edges = 0;
  for (int u = 0; u < n; ++u) {
    if (u == skip) continue;
    for (int v : g.neighbors(u))
      if (v != skip && u < v) ++remaining_edges;
  }
  return visited == n - 1 && remaining_edges == n - 2;
}

std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

}  // namespace

TEST_CASE("degree basics") {
  Graph s5 = star_graph(5);
  CHECK(s5.degree(0) == 4);  // hub
  CHECK(s5.degree(4) == 1);

  Graph k2 = Graph::from_edges(2, {{0, 1}});
  CHECK(k2.degree(0) == 1);
  CHECK(k2.degree(1) == 1);

  FamilyGraph q52 = construct({Family::Q, 5, 2});
  CHECK(q52.graph.degree(q52.witness.apex) == 2);

  CHECK_THROWS_AS(s5.degree(-1), std::invalid_argument);
  CHECK_THROWS_AS(s5.degree(5), std::invalid_argument);
}

TEST_CASE("edge count invariant m = half the degree sum") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = random_graph(8, 0.4, rng);
    int degsum = 0;
    for (int v = 0; v < g.order(); ++v) degsum += g.degree(v);
    CHECK(degsum == 2 * g.size());
  }
}

TEST_CASE("is_tree") {
  CHECK(is_tree(path_graph(4)));
  CHECK_FALSE(is_tree(cycle_graph(3)));
  CHECK_FALSE(is_tree(Graph::from_edges(4, {{0, 1}, {2, 3}})));  // disconnected
  CHECK_FALSE(is_tree(Graph(0)));
  CHECK(is_tree(Graph(1)));
  CHECK_FALSE(is_tree(Graph(2)));
}

TEST_CASE("quasi-tree witnesses of the small named graphs") {
  // star of order 4: removing a leaf leaves a tree, removing the hub leaves
  // three isolated vertices, so only the leaves certify
  Graph s4 = star_graph(4);
  auto ws = quasi_tree_witnesses(s4);
  REQUIRE(ws.size() == 3);
  for (const auto& w : ws) {
    CHECK(w.apex >= 1);
    CHECK(w.k == 1);
  }

  Graph c3 = cycle_graph(3);
  auto wc = quasi_tree_witnesses(c3);
  REQUIRE(wc.size() == 3);
  for (const auto& w : wc) CHECK(w.k == 2);

  CHECK(quasi_tree_witnesses(Graph::from_edges(4, {{0, 1}, {2, 3}})).empty());

  auto wk2 = quasi_tree_witnesses(Graph::from_edges(2, {{0, 1}}));
  CHECK(wk2.size() == 2);
}

TEST_CASE("witnesses cross-checked by independent DFS") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = random_graph(7, 0.35, rng);
    auto ws = quasi_tree_witnesses(g);
    std::set<int> reported;
    for (const auto& w : ws) {
      reported.insert(w.apex);
      CHECK(w.k == g.degree(w.apex));
      CHECK(tree_after_removal_dfs(g, w.apex));
    }
    for (int u = 0; u < g.order(); ++u) {
      bool expected = g.degree(u) >= 1 && tree_after_removal_dfs(g, u);
      CHECK(reported.count(u) == (expected ? 1u : 0u));
    }
  }
}

TEST_CASE("every leaf of a tree is a witness with k = 1") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    // random tree via a random attachment process
    int n = 4 + static_cast<int>(rng() % 5);
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v < n; ++v) e.emplace_back(static_cast<int>(rng() % v), v);
    Graph t = Graph::from_edges(n, e);
    REQUIRE(is_tree(t));
    auto ws = quasi_tree_witnesses(t);
    CHECK_FALSE(ws.empty());
    std::set<int> reported;
    for (const auto& w : ws) reported.insert(w.apex);
    for (int v = 0; v < n; ++v)
      if (t.degree(v) == 1) CHECK(reported.count(v) == 1);
  }
}

TEST_CASE("edit operations") {
  Graph c3 = cycle_graph(3);
  Graph p3 = c3.delete_edge(0, 2);
  CHECK(isomorphic(p3, path_graph(3)));
  CHECK(c3.size() == 3);  // input untouched

  Graph back = p3.add_edge(0, 2);
  CHECK(isomorphic(back, c3));

  Graph s4 = star_graph(4);
  Graph rest = s4.delete_vertex(0);
  CHECK(rest.order() == 3);
  CHECK(rest.size() == 0);

  CHECK_THROWS_AS(p3.delete_edge(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(c3.add_edge(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(c3.add_edge(1, 1), std::invalid_argument);
}

TEST_CASE("delete_vertex compacts labels preserving order") {
  // 0-1, 1-2, 2-3, 1-3: drop vertex 1 -> remaining 0,2,3 become 0,1,2
  Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {1, 3}});
  Graph h = g.delete_vertex(1);
  CHECK(h.order() == 3);
  CHECK(h.size() == 1);
  CHECK(h.has_edge(1, 2));  // old (2,3)
  CHECK_FALSE(h.has_edge(0, 1));
}

TEST_CASE("add then delete is the identity on adjacency") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_graph(8, 0.3, rng);
    int u = static_cast<int>(rng() % 8), v = static_cast<int>(rng() % 8);
    if (u == v || g.has_edge(u, v)) continue;
    Graph same = g.add_edge(u, v).delete_edge(u, v);
    CHECK(same == g);
  }
}

TEST_CASE("canonical forms decide isomorphism") {
  Graph p3a = Graph::from_edges(3, {{0, 1}, {1, 2}});
  Graph p3b = Graph::from_edges(3, {{0, 1}, {0, 2}});  // centre relabelled
  CHECK(canonical_form(p3a) == canonical_form(p3b));

  CHECK(canonical_form(path_graph(4)) != canonical_form(star_graph(4)));

  // Q_{6,2} built with two different apex-leaf choices
  Graph a = Graph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 5}});
  Graph b = Graph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {3, 5}});
  CHECK(canonical_form(a) == canonical_form(b));
}

TEST_CASE("canonical form is invariant under random relabelling") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 80; ++trial) {
    int n = 2 + static_cast<int>(rng() % 8);  // up to 9
    Graph g = random_graph(n, 0.4, rng);
    Graph h = g.relabeled(random_permutation(n, rng));
    CHECK(canonical_form(g) == canonical_form(h));
  }
}

TEST_CASE("automorphism counts of known graphs") {
  CHECK(canonical_form_with_aut(star_graph(6)).automorphisms == 120);  // 5!
  CHECK(canonical_form_with_aut(path_graph(4)).automorphisms == 2);
  CHECK(canonical_form_with_aut(cycle_graph(5)).automorphisms == 10);
  CHECK(canonical_form_with_aut(complete_graph(4)).automorphisms == 24);
  CHECK(canonical_form_with_aut(Graph::from_edges(2, {{0, 1}})).automorphisms == 2);
  // Q_{6,2}: swap the two triangle 2-vertices, permute the three leaves
  Graph q62 = construct({Family::Q, 6, 2}).graph;
  CHECK(canonical_form_with_aut(q62).automorphisms == 12);
}

TEST_CASE("canonicalization size cap") {
  CHECK_THROWS_AS(canonical_form(Graph(17)), unsupported_size_error);
  CHECK_NOTHROW(canonical_form(cycle_graph(16)));  // one big cell, needs individualisation
}

TEST_CASE("relabeled validates its permutation") {
  Graph g = path_graph(3);
  CHECK_THROWS_AS(g.relabeled({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(g.relabeled({0, 1}), std::invalid_argument);
}
