#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "somborq/families.hpp"
#include "somborq/oracle.hpp"
#include "somborq/sombor.hpp"
#include "somborq/transforms.hpp"
#include "somborq/verify.hpp"

using namespace somborq;

namespace {

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

// star hub 0 with `leaves` pendant leaves plus a pendant path of `len` edges
Graph broom(int leaves, int len) {
  int n = 1 + leaves + len;
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  int prev = 0;
  for (int i = 0; i < len; ++i) {
    e.emplace_back(prev, leaves + 1 + i);
    prev = leaves + 1 + i;
  }
  return Graph::from_edges(n, e);
}

std::vector<int> degree_multiset(const Graph& g) {
  std::vector<int> d;
  for (int v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST_CASE("dominance relation on the named examples") {
  Graph s5 = construct({Family::S, 5, 1}).graph;
  CHECK(dominates(s5, 0, 1));        // hub beats a leaf
  CHECK_FALSE(dominates(s5, 1, 0));  // leaf degree below hub degree

  // path a-b-c-d: the two middle vertices dominate each other
  Graph p4 = path_graph(4);
  CHECK(dominates(p4, 1, 2));
  CHECK(dominates(p4, 2, 1));

  // double star with unequal sides: bigger hub dominates the smaller
  Graph ds = Graph::from_edges(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {4, 5}, {4, 6}});
  CHECK(ds.degree(0) == 4);
  CHECK(ds.degree(4) == 3);
  CHECK(dominates(ds, 0, 4));
  CHECK_FALSE(dominates(ds, 4, 0));

  // vacuous quantifiers: two endpoints of one edge
  Graph k2 = Graph::from_edges(2, {{0, 1}});
  CHECK(dominates(k2, 0, 1));

  CHECK_THROWS_AS(dominates(p4, 2, 2), std::invalid_argument);
}

TEST_CASE("swap move validity is strict about the non-edges") {
  Graph p5 = path_graph(5);
  // (u,v)=(2,3), (x,y)=(0,1) would re-create the existing edge 1-2
  CHECK_FALSE(swap_move_valid(p5, {2, 3, 0, 1}));
  CHECK_THROWS_AS(apply_swap(p5, {2, 3, 0, 1}), move_error);

  CHECK_THROWS_AS(apply_swap(p5, {0, 1, 0, 1}), move_error);   // collision
  CHECK_THROWS_AS(apply_swap(p5, {0, 2, 3, 4}), move_error);   // uv missing
  CHECK_THROWS_AS(apply_swap(p5, {9, 1, 2, 3}), move_error);   // out of range
}

TEST_CASE("swap equality case on the path") {
  // (u,v)=(1,2), (x,y)=(4,3): deg(v) = deg(y) = 2 forces SO equality
  Graph p5 = path_graph(5);
  SwapMove m{1, 2, 4, 3};
  REQUIRE(swap_move_valid(p5, m));
  REQUIRE(p5.degree(m.u) >= p5.degree(m.x));
  REQUIRE(p5.degree(m.v) == p5.degree(m.y));
  Graph after = apply_swap(p5, m);
  CHECK(degree_multiset(after) == degree_multiset(p5));
  ComparisonOutcome c = compare(sombor_index(after), sombor_index(p5));
  CHECK(c.ordering == Ordering::Equal);
}

TEST_CASE("swaps preserve every vertex degree") {
  std::mt19937_64 rng(61);
  int found = 0;
  while (found < 30) {
    std::vector<int> seq(5);
    for (auto& s : seq) s = static_cast<int>(rng() % 7);
    Graph t = prufer_decode(seq, 7);
    auto edges = t.edges();
    std::size_t i = rng() % edges.size(), j = rng() % edges.size();
    if (i == j) continue;
    SwapMove m{edges[i].first, edges[i].second, edges[j].first, edges[j].second};
    if (!swap_move_valid(t, m)) continue;
    ++found;
    Graph after = apply_swap(t, m);
    for (int v = 0; v < 7; ++v) CHECK(after.degree(v) == t.degree(v));
  }
}

TEST_CASE("a strictly increasing swap exists on trees of order 7") {
  std::mt19937_64 rng(67);
  bool found_strict = false;
  for (int trial = 0; trial < 4000 && !found_strict; ++trial) {
    std::vector<int> seq(5);
    for (auto& s : seq) s = static_cast<int>(rng() % 7);
    Graph t = prufer_decode(seq, 7);
    auto edges = t.edges();
    for (std::size_t i = 0; i < edges.size() && !found_strict; ++i)
      for (std::size_t j = 0; j < edges.size() && !found_strict; ++j) {
        if (i == j) continue;
        for (int flip = 0; flip < 4; ++flip) {
          SwapMove m{flip & 1 ? edges[i].second : edges[i].first,
                     flip & 1 ? edges[i].first : edges[i].second,
                     flip & 2 ? edges[j].second : edges[j].first,
                     flip & 2 ? edges[j].first : edges[j].second};
          if (!swap_move_valid(t, m)) continue;
          if (t.degree(m.u) <= t.degree(m.x) || t.degree(m.v) <= t.degree(m.y)) continue;
          ComparisonOutcome c = compare(sombor_index(apply_swap(t, m)), sombor_index(t));
          CHECK(c.ordering == Ordering::Greater);
          found_strict = true;
          break;
        }
      }
  }
  CHECK(found_strict);
}

TEST_CASE("rotation validity and mechanics") {
  Graph p5 = path_graph(5);
  CHECK_THROWS_AS(apply_rotation(p5, {0, 1, 2}), move_error);  // xy present
  CHECK_THROWS_AS(apply_rotation(p5, {0, 3, 0}), move_error);  // x = z
  CHECK_THROWS_AS(apply_rotation(p5, {0, 2, 4}), move_error);  // yz missing

  // mechanics without any dominance claim: degrees shift by one
  RotationMove m{2, 4, 3};
  REQUIRE(rotation_move_valid(p5, m));
  CHECK_FALSE(dominates(p5, 2, 3));
  Graph after = apply_rotation(p5, m);
  CHECK(after.degree(2) == p5.degree(2) + 1);
  CHECK(after.degree(3) == p5.degree(3) - 1);

  // the move may isolate z
  Graph two_edges = Graph::from_edges(4, {{0, 1}, {2, 3}});
  Graph rotated = apply_rotation(two_edges, {0, 2, 3});
  CHECK(rotated.degree(3) == 0);
  CHECK(rotated.has_edge(0, 2));
}

TEST_CASE("rotating a pendant path edge onto a dominating hub raises SO") {
  Graph g = broom(3, 2);  // hub 0, leaves 1..3, path 0-4-5
  RotationMove m{0, 5, 4};
  REQUIRE(rotation_move_valid(g, m));
  REQUIRE(dominates(g, 0, 4));
  ComparisonOutcome c = compare(sombor_index(apply_rotation(g, m)), sombor_index(g));
  CHECK(c.ordering == Ordering::Greater);
}

TEST_CASE("broom collapses to the star under repeated dominated rotations") {
  for (int leaves = 2; leaves <= 4; ++leaves)
    for (int len = 2; len <= 4; ++len) {
      Graph g = broom(leaves, len);
      const int n = g.order();
      double last = sombor_index(g).value;
      int steps = 0;
      for (;;) {
        // find the hub's degree-2 neighbour and its child
        int hub = 0, mid = -1, tip = -1;
        for (int v : g.neighbors(hub))
          if (g.degree(v) >= 2) mid = v;
        if (mid < 0) break;  // star reached
        for (int w : g.neighbors(mid))
          if (w != hub) tip = w;
        RotationMove m{hub, tip, mid};
        REQUIRE(rotation_move_valid(g, m));
        REQUIRE(dominates(g, hub, mid));
        g = apply_rotation(g, m);
        double now = sombor_index(g).value;
        CHECK(now > last);
        last = now;
        ++steps;
      }
      CHECK(steps == len - 1);
      CHECK(isomorphic(g, construct({Family::S, n, 1}).graph));
    }
}

TEST_CASE("randomized move contracts at reduced sample counts") {
  VerifyOptions opt;
  opt.samples = 1500;
  opt.jobs = 1;
  VerificationReport swap = verify_claim("lemma2.3", opt);
  CHECK(swap.pass);
  CHECK(swap.checked >= 1500);
  VerificationReport rot = verify_claim("lemma2.4", opt);
  CHECK(rot.pass);
  CHECK(rot.checked >= 1500);
}
