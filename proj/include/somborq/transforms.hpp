#ifndef SOMBORQ_TRANSFORMS_HPP
#define SOMBORQ_TRANSFORMS_HPP

#include "somborq/graph.hpp"

namespace somborq {

/// Degree-preserving double swap: uv, xy in E and uy, xv not in E, all four
/// vertices distinct. Applying it replaces {uv, xy} with {uy, xv}. When
/// deg(u) >= deg(x) and deg(v) >= deg(y) the index never decreases, with
/// equality exactly when deg(u) = deg(x) or deg(v) = deg(y).
struct SwapMove {
  int u = 0, v = 0, x = 0, y = 0;
};

/// Edge rotation: xy not in E, yz in E, x/y/z distinct. Applying it replaces
/// yz with xy, raising deg(x) by one and lowering deg(z) by one. When
/// dominates(g, x, z) holds the index strictly increases.
struct RotationMove {
  int x = 0, y = 0, z = 0;
};

/// x dominates z: deg(x) >= deg(z) and every neighbour of x other than z has
/// degree <= every neighbour of z other than x. Empty quantifier ranges are
/// vacuously true. Requires x != z.
bool dominates(const Graph& g, int x, int z);

bool swap_move_valid(const Graph& g, const SwapMove& m, std::string* why = nullptr);
bool rotation_move_valid(const Graph& g, const RotationMove& m, std::string* why = nullptr);

/// Apply the move mechanically; throws move_error when invalid. Both may
/// disconnect the graph; the index contracts are degree-local.
Graph apply_swap(const Graph& g, const SwapMove& m);
Graph apply_rotation(const Graph& g, const RotationMove& m);

}  // namespace somborq

#endif
