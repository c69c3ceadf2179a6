#ifndef SOMBORQ_ORACLE_HPP
#define SOMBORQ_ORACLE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "somborq/graph.hpp"
#include "somborq/sombor.hpp"

namespace somborq {

/// Decode a Prufer sequence of length n-2 over 0..n-1 into its labelled tree.
/// The map is a bijection between sequences and labelled trees on n >= 2
/// vertices.
Graph prufer_decode(std::span<const int> seq, int n);

/// One isomorphism class attaining a level.
struct RankRep {
  CanonicalForm form;
  Graph graph;                    // a decoded representative
  std::uint64_t automorphisms = 1;
  long long hits = 0;             // streamed objects in this class
};

/// One retained index level. Levels are strictly separated: identical
/// normalised term lists cluster together, anything within the double
/// escalation window is certified apart (or merged) in extended precision.
struct RankEntry {
  int level = 0;                  // 1 = maximum
  double value = 0.0;
  std::string value_str;          // 12 significant digits
  RadicalSum signature;
  std::vector<RankRep> reps;      // pairwise non-isomorphic, sorted by form
  long long labeled_count = 0;    // labelled graphs on n vertices at this level
  long long hits = 0;             // streamed objects at this level
};

struct RankResult {
  std::string universe;           // "quasi-tree" | "tree" | "unicyclic"
  int n = 0;
  int k = 0;                      // 0 when not applicable
  int top = 0;
  std::vector<RankEntry> entries;
  unsigned long long universe_size = 0;  // streamed objects
};

/// Exhaustive ranking over Q(n,k): all labelled trees on n-1 vertices crossed
/// with all k-subsets as the neighbourhood of a fixed apex vertex n-1.
struct EnumerationTask {
  int n = 0;           // 4 <= n <= 10
  int k = 0;           // 1 <= k <= n-1
  int top = 3;         // distinct levels to retain
  int jobs = 1;        // worker threads (first Prufer symbol partitioning)
};

RankResult enumerate_rank(const EnumerationTask& task);

/// Exhaustive ranking over all labelled trees of order n (2 <= n <= 10).
RankResult rank_trees(int n, int top = 3, int jobs = 1);

/// Exhaustive ranking over all labelled unicyclic graphs of order n
/// (3 <= n <= 10), generated as tree plus one extra edge and visited once
/// per labelled graph.
RankResult rank_unicyclic(int n, int top = 3, int jobs = 1);

/// Merge the retained levels of several rankings of order-n graphs into one
/// top-`top` ranking (used for "best over all k" questions). Hit counts are
/// summed per class; labelled counts are recomputed per representative.
RankResult merge_rank_results(const std::vector<const RankResult*>& parts, int n, int top);

}  // namespace somborq

#endif
