#include "somborq/families.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

#include "somborq/precision.hpp"
#include "somborq/sombor.hpp"

namespace somborq {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

// S_n: hub 0, leaves 1..n-1.
EdgeList star_edges(int n) {
  EdgeList e;
  for (int i = 1; i < n; ++i) e.emplace_back(0, i);
  return e;
}

// S'_n: S_{n-1} on 0..n-2, pendant n-1 attached to leaf 1.
EdgeList sprime_edges(int n) {
  EdgeList e = star_edges(n - 1);
  e.emplace_back(1, n - 1);
  return e;
}

// S''_n: S'_{n-1} on 0..n-2 (2-vertex is 1), pendant n-1 attached to 1.
EdgeList sdprime_edges(int n) {
  EdgeList e = star_edges(n - 2);
  e.emplace_back(1, n - 2);
  e.emplace_back(1, n - 1);
  return e;
}

// Q_{n,k}: hub 0 with leaves 1..n-2; apex n-1 joined to the hub and to
// leaves 1..k-1.
EdgeList q_edges(int n, int k) {
  EdgeList e = star_edges(n - 1);
  e.emplace_back(0, n - 1);
  for (int i = 1; i <= k - 1; ++i) e.emplace_back(i, n - 1);
  return e;
}

// Q*_{n,k}: hub 0 with leaves 1..n-2; apex n-1 joined to leaves 1..k only.
EdgeList qstar_edges(int n, int k) {
  EdgeList e = star_edges(n - 1);
  for (int i = 1; i <= k; ++i) e.emplace_back(i, n - 1);
  return e;
}

// Q'_{n,2}: Q_{n-1,2} on 0..n-2 (hub 0, apex n-2 joined to 0 and 1), pendant
// n-1 attached to the triangle 2-vertex 1 (not to the apex).
EdgeList qprime2_edges(int n) {
  EdgeList e = q_edges(n - 1, 2);
  e.emplace_back(1, n - 1);
  return e;
}

// Q'_{n,k} for k >= 3: hub 0; common hub/apex neighbours 1..k-2; plain leaves
// k-1..n-3; apex v = n-2 joined to hub and 1..k-2; the added vertex w = n-1
// is joined to both the 2-vertex 1 and to v, lifting deg(v) to k.
EdgeList qprime_edges(int n, int k) {
  EdgeList e;
  for (int i = 1; i <= n - 3; ++i) e.emplace_back(0, i);
  e.emplace_back(0, n - 2);
  for (int i = 1; i <= k - 2; ++i) e.emplace_back(i, n - 2);
  e.emplace_back(1, n - 1);
  e.emplace_back(n - 2, n - 1);
  return e;
}

// Q''_{n,3}: Q_{n-1,3} on 0..n-2 (apex n-2 joined to 0, 1, 2), pendant n-1
// attached to the common neighbour 1 (not to the apex).
EdgeList qdprime3_edges(int n) {
  EdgeList e = q_edges(n - 1, 3);
  e.emplace_back(1, n - 1);
  return e;
}

// Q''_{n,n-1}: Q'_{n-1,n-2} on 0..n-2 (3-vertex is 1, apex v = n-3), plus
// w2 = n-1 joined to the 3-vertex and to v, lifting deg(1) to 4 and deg(v)
// to n-1.
EdgeList qdprime_top_edges(int n) {
  EdgeList e = qprime_edges(n - 1, n - 2);
  e.emplace_back(1, n - 1);
  e.emplace_back(n - 3, n - 1);
  return e;
}

}  // namespace

bool family_spec_valid(const FamilySpec& spec, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const int n = spec.n, k = spec.k;
  switch (spec.family) {
    case Family::S:
      if (n < 2) return fail("S requires n >= 2");
      return true;
    case Family::Sprime:
      if (n < 4) return fail("Sprime requires n >= 4");
      return true;
    case Family::Sdprime:
      if (n < 6) return fail("Sdprime requires n >= 6");
      return true;
    case Family::Q:
      if (n < 3) return fail("Q requires n >= 3");
      if (k < 1 || k > n - 1) return fail("Q requires 1 <= k <= n-1");
      return true;
    case Family::Qstar:
      if (n < 4) return fail("Qstar requires n >= 4");
      if (k < 1 || k > n - 2) return fail("Qstar requires 1 <= k <= n-2");
      return true;
    case Family::Qprime:
      if (n < 5) return fail("Qprime requires n >= 5");
      if (k < 1 || k > n - 1) return fail("Qprime requires 1 <= k <= n-1");
      return true;
    case Family::Qdprime:
      if (k == 1 && n >= 6) return true;
      if (k == 3 && n >= 6 && k != n - 1) return true;
      if (k == n - 1 && n >= 7) return true;
      return fail(
          "Qdprime requires k in {1, 3, n-1} with n >= 6 for k in {1,3} and "
          "n >= 7 for k = n-1");
  }
  return fail("unknown family");
}

FamilyGraph construct(const FamilySpec& spec) {
  std::string why;
  if (!family_spec_valid(spec, &why))
    throw std::invalid_argument(why + " (got n=" + std::to_string(spec.n) +
                                ", k=" + std::to_string(spec.k) + ")");

  const int n = spec.n, k = spec.k;
  EdgeList edges;
  QuasiTreeWitness witness{n - 1, 1};
  switch (spec.family) {
    case Family::S:
      edges = star_edges(n);
      break;
    case Family::Sprime:
      edges = sprime_edges(n);
      break;
    case Family::Sdprime:
      edges = sdprime_edges(n);
      break;
    case Family::Q:
      edges = q_edges(n, k);
      witness = {n - 1, k};
      break;
    case Family::Qstar:
      edges = qstar_edges(n, k);
      witness = {n - 1, k};
      break;
    case Family::Qprime:
      if (k == 1) {
        edges = sprime_edges(n);
      } else if (k == 2) {
        edges = qprime2_edges(n);
        witness = {n - 2, 2};
      } else {
        edges = qprime_edges(n, k);
        witness = {n - 2, k};
      }
      break;
    case Family::Qdprime:
      if (k == 1) {
        edges = sdprime_edges(n);
      } else if (k == 3) {
        edges = qdprime3_edges(n);
        witness = {n - 2, 3};
      } else {
        edges = qdprime_top_edges(n);
        witness = {n - 3, n - 1};
      }
      break;
  }

  FamilyGraph out{Graph::from_edges(n, edges), witness};

#ifndef NDEBUG
  // Construction gate: the result must price exactly at its closed form and
  // the witness must certify membership.
  assert(out.graph.degree(out.witness.apex) == out.witness.k);
  assert(is_tree(out.graph.delete_vertex(out.witness.apex)));
  if (auto cf = paired_closed_form(spec))
    assert(std::abs(sombor_value(out.graph) - cf->value) < precision::kFormulaTol);
#endif
  return out;
}

std::optional<ClosedFormValue> paired_closed_form(const FamilySpec& spec) {
  const int n = spec.n, k = spec.k;
  switch (spec.family) {
    case Family::S:
      if (n < 3) return std::nullopt;
      return phi(n, 1);
    case Family::Sprime:
      return phi_star(n, 1);
    case Family::Sdprime:
      return phi_dprime(n, 1);
    case Family::Q:
      return phi(n, k);
    case Family::Qstar:
      return phi_star(n, k);
    case Family::Qprime:
      return phi_prime(n, k);
    case Family::Qdprime:
      return phi_dprime(n, k);
  }
  return std::nullopt;
}

Family family_from_name(const std::string& name) {
  if (name == "S") return Family::S;
  if (name == "Sprime") return Family::Sprime;
  if (name == "Sdprime") return Family::Sdprime;
  if (name == "Q") return Family::Q;
  if (name == "Qstar") return Family::Qstar;
  if (name == "Qprime") return Family::Qprime;
  if (name == "Qdprime") return Family::Qdprime;
  throw std::invalid_argument("unknown family \"" + name +
                              "\" (valid: S, Sprime, Sdprime, Q, Qstar, Qprime, Qdprime)");
}

const char* family_name(Family f) {
  switch (f) {
    case Family::S: return "S";
    case Family::Sprime: return "Sprime";
    case Family::Sdprime: return "Sdprime";
    case Family::Q: return "Q";
    case Family::Qstar: return "Qstar";
    case Family::Qprime: return "Qprime";
    case Family::Qdprime: return "Qdprime";
  }
  return "?";
}

std::string family_label(Family f, int n, int k) {
  std::string nk = "{" + std::to_string(n) + "," + std::to_string(k) + "}";
  switch (f) {
    case Family::S: return "S_" + std::to_string(n);
    case Family::Sprime: return "S'_" + std::to_string(n);
    case Family::Sdprime: return "S''_" + std::to_string(n);
    case Family::Q: return "Q_" + nk;
    case Family::Qstar: return "Q*_" + nk;
    case Family::Qprime: return "Q'_" + nk;
    case Family::Qdprime: return "Q''_" + nk;
  }
  return "?";
}

}  // namespace somborq
