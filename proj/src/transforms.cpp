#include "somborq/transforms.hpp"

#include <stdexcept>

namespace somborq {

bool dominates(const Graph& g, int x, int z) {
  if (x == z) throw std::invalid_argument("dominates requires x != z");
  if (g.degree(x) < g.degree(z)) return false;
  int max_x_nbr = -1;
  for (int w : g.neighbors(x)) {
    if (w == z) continue;
    max_x_nbr = std::max(max_x_nbr, g.degree(w));
  }
  if (max_x_nbr < 0) return true;  // vacuous
  for (int w : g.neighbors(z)) {
    if (w == x) continue;
    if (max_x_nbr > g.degree(w)) return false;
  }
  return true;
}

bool swap_move_valid(const Graph& g, const SwapMove& m, std::string* why) {
  auto fail = [&](const char* msg) {
    if (why) *why = msg;
    return false;
  };
  const int u = m.u, v = m.v, x = m.x, y = m.y;
  for (int w : {u, v, x, y})
    if (w < 0 || w >= g.order()) return fail("swap vertex out of range");
  if (u == v || u == x || u == y || v == x || v == y || x == y)
    return fail("swap vertices must be pairwise distinct");
  if (!g.has_edge(u, v)) return fail("swap requires uv in E");
  if (!g.has_edge(x, y)) return fail("swap requires xy in E");
  if (g.has_edge(u, y)) return fail("swap requires uy not in E");
  if (g.has_edge(x, v)) return fail("swap requires xv not in E");
  return true;
}

bool rotation_move_valid(const Graph& g, const RotationMove& m, std::string* why) {
  auto fail = [&](const char* msg) {
    if (why) *why = msg;
    return false;
  };
  const int x = m.x, y = m.y, z = m.z;
  for (int w : {x, y, z})
    if (w < 0 || w >= g.order()) return fail("rotation vertex out of range");
  if (x == y || x == z || y == z) return fail("rotation vertices must be pairwise distinct");
  if (g.has_edge(x, y)) return fail("rotation requires xy not in E");
  if (!g.has_edge(y, z)) return fail("rotation requires yz in E");
  return true;
}

Graph apply_swap(const Graph& g, const SwapMove& m) {
  std::string why;
  if (!swap_move_valid(g, m, &why)) throw move_error("invalid swap move: " + why);
  return g.delete_edge(m.u, m.v).delete_edge(m.x, m.y).add_edge(m.u, m.y).add_edge(m.x, m.v);
}

Graph apply_rotation(const Graph& g, const RotationMove& m) {
  std::string why;
  if (!rotation_move_valid(g, m, &why)) throw move_error("invalid rotation move: " + why);
  return g.delete_edge(m.y, m.z).add_edge(m.x, m.y);
}

}  // namespace somborq
