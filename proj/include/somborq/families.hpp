#ifndef SOMBORQ_FAMILIES_HPP
#define SOMBORQ_FAMILIES_HPP

#include <optional>
#include <string>

#include "somborq/formulas.hpp"
#include "somborq/graph.hpp"

namespace somborq {

enum class Family { S, Sprime, Sdprime, Q, Qstar, Qprime, Qdprime };

/// Named construction with its order n and apex degree k (k is implicitly 1
/// for the S families and ignored there).
struct FamilySpec {
  Family family = Family::S;
  int n = 0;
  int k = 1;
};

struct FamilyGraph {
  Graph graph;
  QuasiTreeWitness witness;
};

// Validity ranges:
//   S: n >= 2          Sprime: n >= 4        Sdprime: n >= 6
//   Q: n >= 3, 1 <= k <= n-1
//   Qstar: n >= 4, 1 <= k <= n-2
//   Qprime: n >= 5, 1 <= k <= n-1
//   Qdprime: k in {1,3,n-1}; n >= 6 for k in {1,3}, n >= 7 for k = n-1
bool family_spec_valid(const FamilySpec& spec, std::string* why = nullptr);

/// Build the named graph with a valid witness. Labels are deterministic:
/// star hub is 0, apex-adjacent leaves come first, pendant additions take the
/// highest labels. Throws std::invalid_argument naming the violated bound.
FamilyGraph construct(const FamilySpec& spec);

/// Closed form whose value equals SO(construct(spec)), when one is defined
/// for the parameters (S_2 and S'_4 sit below the phi/phi_prime domains).
std::optional<ClosedFormValue> paired_closed_form(const FamilySpec& spec);

Family family_from_name(const std::string& name);  // "Q", "Qstar", ... ; throws
const char* family_name(Family f);
std::string family_label(Family f, int n, int k);  // e.g. "Q*_{6,2}", "S'_6"

}  // namespace somborq

#endif
