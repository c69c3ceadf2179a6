#include "somborq/graph.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <numeric>

namespace somborq {

namespace {

std::string vertex_msg(const char* what, int v, int n) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%s: vertex %d out of range [0,%d)", what, v, n);
  return buf;
}

}  // namespace

Graph::Graph(int n) : n_(n), m_(0), adj_(n >= 0 ? n : 0) {
  if (n < 0) throw std::invalid_argument("graph order must be >= 0");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw std::invalid_argument("from_edges: self-loops are not allowed");
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  g.m_ = static_cast<int>(edges.size());
  for (auto& a : g.adj_) {
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end())
      throw std::invalid_argument("from_edges: duplicate edge");
  }
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument(vertex_msg("graph", v, n_));
}

int Graph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].size());
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::add_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("add_edge: self-loops are not allowed");
  if (has_edge(u, v))
    throw std::invalid_argument("add_edge: edge (" + std::to_string(u) + "," +
                                std::to_string(v) + ") already present");
  Graph g(*this);
  g.adj_[u].insert(std::lower_bound(g.adj_[u].begin(), g.adj_[u].end(), v), v);
  g.adj_[v].insert(std::lower_bound(g.adj_[v].begin(), g.adj_[v].end(), u), u);
  ++g.m_;
  return g;
}

Graph Graph::delete_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (!has_edge(u, v))
    throw std::invalid_argument("delete_edge: edge (" + std::to_string(u) + "," +
                                std::to_string(v) + ") not present");
  Graph g(*this);
  auto& a = g.adj_[u];
  a.erase(std::lower_bound(a.begin(), a.end(), v));
  auto& b = g.adj_[v];
  b.erase(std::lower_bound(b.begin(), b.end(), u));
  --g.m_;
  return g;
}

Graph Graph::delete_vertex(int v) const {
  check_vertex(v);
  Graph g(n_ - 1);
  for (int u = 0; u < n_; ++u) {
    if (u == v) continue;
    int nu = u < v ? u : u - 1;
    auto& row = g.adj_[nu];
    row.reserve(adj_[u].size());
    for (int w : adj_[u]) {
      if (w == v) continue;
      row.push_back(w < v ? w : w - 1);  // input rows sorted, mapping monotone
      if (nu < row.back()) ++g.m_;
    }
  }
  return g;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_)
    throw std::invalid_argument("relabeled: permutation size mismatch");
  std::vector<bool> seen(n_, false);
  for (int p : perm) {
    if (p < 0 || p >= n_ || seen[p])
      throw std::invalid_argument("relabeled: not a permutation of 0..n-1");
    seen[p] = true;
  }
  Graph g(n_);
  g.m_ = m_;
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u]) g.adj_[perm[u]].push_back(perm[v]);
  for (auto& a : g.adj_) std::sort(a.begin(), a.end());
  return g;
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n == 0) return false;
  std::vector<int> stack{0};
  std::vector<bool> seen(n, false);
  seen[0] = true;
  int visited = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : g.neighbors(u)) {
      if (!seen[v]) {
        seen[v] = true;
        ++visited;
        stack.push_back(v);
      }
    }
  }
  return visited == n;
}

bool is_tree(const Graph& g) {
  if (g.order() == 0) return false;
  return g.size() == g.order() - 1 && is_connected(g);
}

std::vector<QuasiTreeWitness> quasi_tree_witnesses(const Graph& g) {
  std::vector<QuasiTreeWitness> out;
  for (int u = 0; u < g.order(); ++u) {
    if (g.degree(u) < 1) continue;  // removal of an isolated vertex never certifies
    if (is_tree(g.delete_vertex(u))) out.push_back({u, g.degree(u)});
  }
  return out;
}

std::string CanonicalForm::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string s;
  s.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    s.push_back(digits[b >> 4]);
    s.push_back(digits[b & 15]);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Canonical labelling for n <= 16: colour refinement, twin compression and an
// individualisation fallback. The canonical form is the lexicographic minimum
// of the packed upper-triangle adjacency bits over all orderings visited by
// the search; the number of orderings attaining the minimum recovers |Aut|.
// ---------------------------------------------------------------------------

namespace {

constexpr int kMaxCanonOrder = 16;
constexpr std::uint64_t kEnumLimit = 1u << 20;

struct CanonSearch {
  const Graph& g;
  int n;
  std::vector<std::uint16_t> adjbits;  // row bitmasks
  std::vector<std::uint8_t> best;
  bool have_best = false;
  std::uint64_t best_count = 0;

  explicit CanonSearch(const Graph& graph) : g(graph), n(graph.order()) {
    adjbits.assign(n, 0);
    for (int u = 0; u < n; ++u)
      for (int v : g.neighbors(u)) adjbits[u] |= std::uint16_t(1u << v);
  }

  // Iterated refinement: colour by (old colour, sorted neighbour colours)
  // until stable. Colour ids are ranks of sorted signatures, so they are
  // identical for isomorphic graphs.
  std::vector<int> refine(std::vector<int> col) const {
    for (;;) {
      std::vector<std::pair<std::vector<int>, int>> sig(n);
      for (int v = 0; v < n; ++v) {
        std::vector<int> key;
        key.reserve(g.neighbors(v).size() + 1);
        key.push_back(col[v]);
        for (int w : g.neighbors(v)) key.push_back(col[w]);
        std::sort(key.begin() + 1, key.end());
        sig[v] = {std::move(key), v};
      }
      std::vector<std::pair<std::vector<int>, int>> sorted = sig;
      std::sort(sorted.begin(), sorted.end());
      std::vector<int> next(n);
      int c = 0;
      for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i > 0 && sorted[i].first != sorted[i - 1].first) ++c;
        next[sorted[i].second] = c;
      }
      if (next == col) return col;
      col = std::move(next);
    }
  }

  bool twins(int u, int v) const {
    std::uint16_t mu = adjbits[u] & std::uint16_t(~(1u << v));
    std::uint16_t mv = adjbits[v] & std::uint16_t(~(1u << u));
    mu &= std::uint16_t(~(1u << u));
    mv &= std::uint16_t(~(1u << v));
    return mu == mv;
  }

  static std::uint64_t factorial(int k) {
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
  }

  // Distinct orderings of a multiset of class ids.
  static std::uint64_t multiset_perms(const std::vector<int>& ids) {
    std::uint64_t total = factorial(static_cast<int>(ids.size()));
    int run = 1;
    for (std::size_t i = 1; i <= ids.size(); ++i) {
      if (i < ids.size() && ids[i] == ids[i - 1]) {
        ++run;
      } else {
        total /= factorial(run);
        run = 1;
      }
    }
    return total;
  }

  void encode(const std::vector<int>& order, std::vector<std::uint8_t>& out) const {
    out.assign(1 + static_cast<std::size_t>(n * (n - 1) / 2 + 7) / 8, 0);
    out[0] = static_cast<std::uint8_t>(n);
    int bit = 0;
    for (int i = 0; i < n; ++i) {
      std::uint16_t row = adjbits[order[i]];
      for (int j = i + 1; j < n; ++j, ++bit) {
        if (row & (1u << order[j])) out[1 + bit / 8] |= std::uint8_t(1u << (bit % 8));
      }
    }
  }

  struct CellInfo {
    std::vector<std::vector<int>> classes;  // twin classes, members in id order
    std::vector<int> class_ids;             // multiset over classes, sorted
  };

  void descend(std::vector<int> col, std::uint64_t mult) {
    col = refine(col);

    // Cells in colour order; twin classes inside each cell.
    int ncol = *std::max_element(col.begin(), col.end()) + 1;
    std::vector<std::vector<int>> cells(ncol);
    for (int v = 0; v < n; ++v) cells[col[v]].push_back(v);

    std::vector<CellInfo> info(ncol);
    std::uint64_t cost = 1;
    bool overflow = false;
    std::uint64_t twin_factor = 1;
    for (int c = 0; c < ncol; ++c) {
      auto& cell = cells[c];
      auto& ci = info[c];
      std::vector<int> cls(cell.size(), -1);
      int next_id = 0;
      for (std::size_t i = 0; i < cell.size(); ++i) {
        if (cls[i] >= 0) continue;
        cls[i] = next_id;
        ci.classes.push_back({cell[i]});
        for (std::size_t j = i + 1; j < cell.size(); ++j) {
          if (cls[j] < 0 && twins(cell[i], cell[j])) {
            cls[j] = next_id;
            ci.classes.back().push_back(cell[j]);
          }
        }
        ++next_id;
      }
      ci.class_ids = cls;
      std::sort(ci.class_ids.begin(), ci.class_ids.end());
      std::uint64_t perms = multiset_perms(ci.class_ids);
      if (cost > kEnumLimit / std::max<std::uint64_t>(perms, 1)) overflow = true;
      cost *= std::max<std::uint64_t>(perms, 1);
      for (const auto& cl : ci.classes) twin_factor *= factorial(static_cast<int>(cl.size()));
    }

    if (!overflow && cost <= kEnumLimit) {
      enumerate(cells, info, mult * twin_factor);
      return;
    }

    // Individualise one vertex per twin class of the first non-singleton
    // cell; twin siblings give symmetric branches, accounted via class size.
    for (int c = 0; c < ncol; ++c) {
      if (cells[c].size() <= 1) continue;
      int fresh = ncol;
      for (const auto& cl : info[c].classes) {
        std::vector<int> col2 = col;
        col2[cl.front()] = fresh;
        descend(std::move(col2), mult * static_cast<std::uint64_t>(cl.size()));
      }
      return;
    }
  }

  // Odometer over per-cell multiset orderings; realise each ordering by
  // drawing twin-class members in fixed order.
  void enumerate(const std::vector<std::vector<int>>& cells, std::vector<CellInfo>& info,
                 std::uint64_t leaf_mult) {
    const int ncol = static_cast<int>(cells.size());
    std::vector<std::vector<int>> state(ncol);
    for (int c = 0; c < ncol; ++c) state[c] = info[c].class_ids;

    std::vector<int> order(n);
    std::vector<std::uint8_t> enc;
    std::vector<int> taken;
    for (;;) {
      int pos = 0;
      for (int c = 0; c < ncol; ++c) {
        taken.assign(info[c].classes.size(), 0);
        for (int id : state[c]) order[pos++] = info[c].classes[id][taken[id]++];
      }
      encode(order, enc);
      if (!have_best || enc < best) {
        best = enc;
        have_best = true;
        best_count = leaf_mult;
      } else if (enc == best) {
        best_count += leaf_mult;
      }

      int c = 0;
      while (c < ncol && !std::next_permutation(state[c].begin(), state[c].end())) ++c;
      if (c == ncol) break;
    }
  }
};

CanonicalResult canonicalize(const Graph& g) {
  const int n = g.order();
  if (n > kMaxCanonOrder)
    throw unsupported_size_error("canonical_form supports n <= 16 (got n=" +
                                 std::to_string(n) + ")");
  if (n == 0) return {CanonicalForm{{0}}, 1};
  CanonSearch search(g);
  search.descend(std::vector<int>(n, 0), 1);
  return {CanonicalForm{search.best}, search.best_count};
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) { return canonicalize(g).form; }

CanonicalResult canonical_form_with_aut(const Graph& g) { return canonicalize(g); }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace somborq
