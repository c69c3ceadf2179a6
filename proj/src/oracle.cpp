#include "somborq/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdio>
#include <limits>
#include <thread>

#include "somborq/precision.hpp"

namespace somborq {

namespace {

constexpr int kMaxEnumOrder = 10;

std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// sqrt(a^2+b^2) for degrees up to kMaxEnumOrder
struct WeightTable {
  double w[kMaxEnumOrder + 2][kMaxEnumOrder + 2];
  WeightTable() {
    for (int a = 0; a <= kMaxEnumOrder + 1; ++a)
      for (int b = 0; b <= kMaxEnumOrder + 1; ++b)
        w[a][b] = std::sqrt(static_cast<double>(a) * a + static_cast<double>(b) * b);
  }
};
const WeightTable kW;

long long factorial_ll(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Top-`top` strictly separated levels with isomorphism-deduped reps.
// Ordering decisions between distinct signatures within the double escalation
// window are settled in extended precision, so results do not depend on the
// stream order (and hence not on the worker count).
struct LevelTracker {
  struct Level {
    RadicalSum sig;
    double value = 0.0;
    std::vector<RankRep> reps;
    long long hits = 0;
  };

  int top;
  std::vector<Level> levels;  // descending

  explicit LevelTracker(int top_) : top(top_) {}

  bool full() const { return static_cast<int>(levels.size()) >= top; }
  double cutoff() const {
    return full() ? levels.back().value - precision::kEscalation
                  : -std::numeric_limits<double>::infinity();
  }

  static RadicalSum signature_of(const Graph& g) {
    RadicalSum s;
    for (auto [u, v] : g.edges()) {
      long long a = g.degree(u), b = g.degree(v);
      s.add(a * a + b * b, 1);
    }
    return s;
  }

  void add_rep(Level& lvl, const Graph& g, long long hits) {
    lvl.hits += hits;
    CanonicalResult canon = canonical_form_with_aut(g);
    for (auto& rep : lvl.reps) {
      if (rep.form == canon.form) {
        rep.hits += hits;
        return;
      }
    }
    lvl.reps.push_back({std::move(canon.form), g, canon.automorphisms, hits});
  }

  void offer(const Graph& g, long long hits = 1) {
    RadicalSum sig = signature_of(g);
    offer_sig(std::move(sig), g, hits);
  }

  void offer_sig(RadicalSum sig, const Graph& g, long long hits) {
    for (auto& lvl : levels) {
      if (lvl.sig == sig) {
        add_rep(lvl, g, hits);
        return;
      }
    }
    double value = sig.value();
    std::size_t pos = levels.size();
    for (std::size_t i = 0; i < levels.size(); ++i) {
      ComparisonOutcome c = compare(sig, value, levels[i].sig, levels[i].value);
      if (c.ordering == Ordering::Equal) {
        // Distinct term lists below the hard-equality threshold share a level.
        add_rep(levels[i], g, hits);
        return;
      }
      if (c.ordering == Ordering::Greater) {
        pos = i;
        break;
      }
    }
    if (full() && pos == levels.size()) return;
    Level lvl;
    lvl.sig = std::move(sig);
    lvl.value = value;
    lvl.hits = 0;
    levels.insert(levels.begin() + static_cast<std::ptrdiff_t>(pos), std::move(lvl));
    add_rep(levels[pos], g, hits);
    if (static_cast<int>(levels.size()) > top) levels.pop_back();
  }

  void fold(LevelTracker&& other) {
    for (auto& lvl : other.levels) {
      // merge by signature if present, else position by comparison
      Level* match = nullptr;
      for (auto& mine : levels)
        if (mine.sig == lvl.sig) {
          match = &mine;
          break;
        }
      if (!match) {
        std::size_t pos = levels.size();
        for (std::size_t i = 0; i < levels.size(); ++i) {
          ComparisonOutcome c = compare(lvl.sig, lvl.value, levels[i].sig, levels[i].value);
          if (c.ordering == Ordering::Equal) {
            match = &levels[i];
            break;
          }
          if (c.ordering == Ordering::Greater) {
            pos = i;
            break;
          }
        }
        if (!match) {
          if (full() && pos == levels.size()) continue;
          levels.insert(levels.begin() + static_cast<std::ptrdiff_t>(pos), std::move(lvl));
          if (static_cast<int>(levels.size()) > top) levels.pop_back();
          continue;
        }
      }
      match->hits += lvl.hits;
      for (auto& rep : lvl.reps) {
        bool found = false;
        for (auto& mine : match->reps) {
          if (mine.form == rep.form) {
            mine.hits += rep.hits;
            found = true;
            break;
          }
        }
        if (!found) match->reps.push_back(std::move(rep));
      }
    }
  }

  std::vector<RankEntry> finish(int n) const {
    std::vector<RankEntry> out;
    long long nfact = factorial_ll(n);
    int idx = 1;
    for (const auto& lvl : levels) {
      RankEntry e;
      e.level = idx++;
      e.signature = lvl.sig;
      e.value = lvl.sig.value();
      e.value_str = fmt12(e.value);
      e.reps = lvl.reps;
      std::sort(e.reps.begin(), e.reps.end(),
                [](const RankRep& a, const RankRep& b) { return a.form < b.form; });
      e.hits = lvl.hits;
      e.labeled_count = 0;
      for (const auto& rep : e.reps)
        e.labeled_count += nfact / static_cast<long long>(rep.automorphisms);
      out.push_back(std::move(e));
    }
    return out;
  }
};

// ---------------------------------------------------------------------------
// Prufer streaming
// ---------------------------------------------------------------------------

struct TreeScratch {
  int n = 0;
  std::array<int, kMaxEnumOrder> deg{};
  std::array<std::pair<int, int>, kMaxEnumOrder> edges{};  // n-1 used
};

// O(n) pointer decode; seq entries must be in range already.
void decode_into(const int* seq, int len, int n, TreeScratch& t) {
  t.n = n;
  for (int i = 0; i < n; ++i) t.deg[i] = 1;
  for (int i = 0; i < len; ++i) ++t.deg[seq[i]];
  int ptr = 0;
  while (t.deg[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int i = 0; i < len; ++i) {
    int s = seq[i];
    t.edges[i] = {leaf, s};
    if (--t.deg[s] == 1 && s < ptr) {
      leaf = s;
    } else {
      ++ptr;
      while (ptr < n && t.deg[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  t.edges[len] = {leaf, n - 1};
  // restore degree counts (consumed by the walk)
  for (int i = 0; i < n; ++i) t.deg[i] = 1;
  for (int i = 0; i < len; ++i) ++t.deg[seq[i]];
}

// Visit every Prufer sequence of length `len` over symbols 0..base-1 whose
// first symbol s satisfies s % stride == offset (all of them for len == 0 and
// offset 0). Calls fn(seq pointer).
template <typename Fn>
void stream_sequences(int base, int len, int offset, int stride, Fn&& fn) {
  std::vector<int> seq(std::max(len, 1), 0);
  if (len == 0) {
    if (offset == 0) fn(seq.data());
    return;
  }
  for (int first = offset; first < base; first += stride) {
    seq[0] = first;
    std::fill(seq.begin() + 1, seq.end(), 0);
    for (;;) {
      fn(seq.data());
      int i = len - 1;
      while (i >= 1 && seq[i] == base - 1) seq[i--] = 0;
      if (i < 1) break;
      ++seq[i];
    }
  }
}

void check_enum_order(int n, int lo) {
  if (n > kMaxEnumOrder)
    throw unsupported_size_error("enumeration supports n <= " +
                                 std::to_string(kMaxEnumOrder) + " (got n=" +
                                 std::to_string(n) + ")");
  if (n < lo)
    throw std::invalid_argument("enumeration requires n >= " + std::to_string(lo) +
                                " (got n=" + std::to_string(n) + ")");
}

int clamp_jobs(int jobs) {
  if (jobs <= 0) {
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
  }
  return jobs;
}

struct WorkerOutcome {
  LevelTracker tracker{1};
  unsigned long long visited = 0;
};

// Run `jobs` workers over the Prufer space of trees on `base` vertices with
// sequence length `len`; fold trackers in worker order. `graph_order` is the
// order of the streamed graphs (labelled-count normalisation).
template <typename PerTree>
RankResult run_workers(int base, int len, int top, int jobs, int graph_order,
                       PerTree per_tree) {
  jobs = std::min(clamp_jobs(jobs), std::max(base, 1));
  std::vector<WorkerOutcome> outs;
  outs.reserve(static_cast<std::size_t>(jobs));
  for (int w = 0; w < jobs; ++w) outs.push_back({LevelTracker(top), 0});

  auto body = [&](int w) {
    TreeScratch scratch;
    stream_sequences(base, len, w, jobs, [&](const int* seq) {
      decode_into(seq, len, base, scratch);
      per_tree(scratch, outs[static_cast<std::size_t>(w)]);
    });
  };

  if (jobs == 1) {
    body(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) pool.emplace_back(body, w);
    for (auto& t : pool) t.join();
  }

  RankResult res;
  res.top = top;
  LevelTracker master(top);
  for (auto& o : outs) {
    res.universe_size += o.visited;
    master.fold(std::move(o.tracker));
  }
  res.entries = master.finish(graph_order);
  return res;
}

}  // namespace

Graph prufer_decode(std::span<const int> seq, int n) {
  if (n < 2) throw std::invalid_argument("prufer_decode requires n >= 2");
  if (static_cast<int>(seq.size()) != n - 2)
    throw std::invalid_argument("prufer_decode: sequence length must be n-2");
  for (int s : seq)
    if (s < 0 || s >= n)
      throw std::invalid_argument("prufer_decode: entry " + std::to_string(s) +
                                  " out of range [0," + std::to_string(n) + ")");
  std::vector<int> deg(n, 1);
  for (int s : seq) ++deg[s];
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  int ptr = 0;
  while (deg[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int s : seq) {
    edges.emplace_back(std::min(leaf, s), std::max(leaf, s));
    if (--deg[s] == 1 && s < ptr) {
      leaf = s;
    } else {
      ++ptr;
      while (ptr < n && deg[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(std::min(leaf, n - 1), std::max(leaf, n - 1));
  return Graph::from_edges(n, edges);
}

RankResult enumerate_rank(const EnumerationTask& task) {
  check_enum_order(task.n, 4);
  const int n = task.n, k = task.k;
  if (k < 1 || k > n - 1)
    throw std::invalid_argument("enumerate_rank requires 1 <= k <= n-1 (got k=" +
                                std::to_string(k) + ", n=" + std::to_string(n) + ")");
  if (task.top < 1) throw std::invalid_argument("enumerate_rank requires top >= 1");

  const int nt = n - 1;      // tree order
  const int len = nt - 2;    // Prufer length
  const int apex = n - 1;

  // all k-subsets of 0..nt-1 as bitmasks plus member lists
  std::vector<unsigned> masks;
  std::vector<std::vector<int>> members;
  for (unsigned m = 1; m < (1u << nt); ++m) {
    if (std::popcount(m) != k) continue;
    masks.push_back(m);
    std::vector<int> mem;
    for (int v = 0; v < nt; ++v)
      if (m & (1u << v)) mem.push_back(v);
    members.push_back(std::move(mem));
  }

  RankResult res = run_workers(nt, len, task.top, task.jobs, n,
    [&](const TreeScratch& t, WorkerOutcome& out) {
      out.visited += masks.size();
      for (std::size_t mi = 0; mi < masks.size(); ++mi) {
        const unsigned mask = masks[mi];
        double so = 0.0;
        for (int e = 0; e < nt - 1; ++e) {
          auto [a, b] = t.edges[e];
          so += kW.w[t.deg[a] + ((mask >> a) & 1)][t.deg[b] + ((mask >> b) & 1)];
        }
        for (int s : members[mi]) so += kW.w[t.deg[s] + 1][k];
        if (so < out.tracker.cutoff()) continue;

        std::vector<std::pair<int, int>> edges(t.edges.begin(), t.edges.begin() + (nt - 1));
        for (int s : members[mi]) edges.emplace_back(s, apex);
        out.tracker.offer(Graph::from_edges(n, edges));
      }
    });

  res.universe = "quasi-tree";
  res.n = n;
  res.k = k;
  return res;
}

RankResult rank_trees(int n, int top, int jobs) {
  check_enum_order(n, 2);
  if (top < 1) throw std::invalid_argument("rank_trees requires top >= 1");
  const int len = n - 2;

  RankResult res = run_workers(n, len, top, jobs, n,
    [&](const TreeScratch& t, WorkerOutcome& out) {
      ++out.visited;
      double so = 0.0;
      for (int e = 0; e < n - 1; ++e) {
        auto [a, b] = t.edges[e];
        so += kW.w[t.deg[a]][t.deg[b]];
      }
      if (so < out.tracker.cutoff()) return;
      std::vector<std::pair<int, int>> edges(t.edges.begin(), t.edges.begin() + (n - 1));
      out.tracker.offer(Graph::from_edges(n, edges));
    });

  res.universe = "tree";
  res.n = n;
  res.k = 0;
  return res;
}

RankResult rank_unicyclic(int n, int top, int jobs) {
  check_enum_order(n, 3);
  if (top < 1) throw std::invalid_argument("rank_unicyclic requires top >= 1");
  const int len = n - 2;

  RankResult res = run_workers(n, len, top, jobs, n,
    [&](const TreeScratch& t, WorkerOutcome& out) {
      // adjacency bitmasks, parents and depths for the current tree
      std::array<unsigned, kMaxEnumOrder> adj{};
      for (int e = 0; e < n - 1; ++e) {
        auto [a, b] = t.edges[e];
        adj[a] |= 1u << b;
        adj[b] |= 1u << a;
      }
      std::array<int, kMaxEnumOrder> parent{}, depth{}, stack{};
      parent[0] = -1;
      depth[0] = 0;
      int sp = 0;
      stack[sp++] = 0;
      unsigned seen = 1u;
      while (sp) {
        int u = stack[--sp];
        unsigned nb = adj[u] & ~seen;
        while (nb) {
          int v = std::countr_zero(nb);
          nb &= nb - 1;
          seen |= 1u << v;
          parent[v] = u;
          depth[v] = depth[u] + 1;
          stack[sp++] = v;
        }
      }

      // Each labelled unicyclic graph is tree + its lexicographically
      // smallest cycle edge; accept (u,v) only in that role, so every
      // labelled graph is visited exactly once.
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (adj[u] & (1u << v)) continue;
          // walk the tree path u..v; reject if any edge sorts below (u,v)
          int a = u, b = v;
          bool minimal = true;
          while (a != b) {
            int* step = depth[a] >= depth[b] ? &a : &b;
            int c = *step, p = parent[c];
            int lo = std::min(c, p), hi = std::max(c, p);
            if (lo < u || (lo == u && hi < v)) {
              minimal = false;
              break;
            }
            *step = p;
          }
          if (!minimal) continue;
          ++out.visited;

          double so = 0.0;
          for (int e = 0; e < n - 1; ++e) {
            auto [p, q] = t.edges[e];
            so += kW.w[t.deg[p] + (p == u || p == v)][t.deg[q] + (q == u || q == v)];
          }
          so += kW.w[t.deg[u] + 1][t.deg[v] + 1];
          if (so < out.tracker.cutoff()) continue;

          std::vector<std::pair<int, int>> edges(t.edges.begin(), t.edges.begin() + (n - 1));
          edges.emplace_back(u, v);
          out.tracker.offer(Graph::from_edges(n, edges));
        }
      }
    });

  res.universe = "unicyclic";
  res.n = n;
  res.k = 0;
  return res;
}

RankResult merge_rank_results(const std::vector<const RankResult*>& parts, int n, int top) {
  LevelTracker master(top);
  RankResult res;
  res.universe = "merged";
  res.n = n;
  res.top = top;
  for (const RankResult* part : parts) {
    res.universe_size += part->universe_size;
    for (const auto& entry : part->entries)
      for (const auto& rep : entry.reps) master.offer(rep.graph, rep.hits);
  }
  res.entries = master.finish(n);
  return res;
}

}  // namespace somborq
