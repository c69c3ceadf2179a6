#ifndef SOMBORQ_FORMULAS_HPP
#define SOMBORQ_FORMULAS_HPP

#include <string>
#include <vector>

#include "somborq/sombor.hpp"

namespace somborq {

/// One transcribed term c * sqrt(radicand); radicands are sums of two squares.
struct RadTerm {
  long long coeff = 0;
  long long radicand = 0;
  bool operator==(const RadTerm&) const = default;
};

/// Closed-form value phi/phi_prime/phi_star/phi_dprime at (n,k), kept as the
/// literal term list plus its double value and normalised radical sum.
struct ClosedFormValue {
  std::string name;
  int n = 0, k = 0;
  double value = 0.0;
  std::vector<RadTerm> terms;
  RadicalSum radicals;

  SomborValue as_sombor() const;
};

// Validity ranges follow the constructions the formulas price:
//   phi:        n >= 3, 1 <= k <= n-1
//   phi_prime:  n >= 5, 1 <= k <= n-1   (separate k=1, k=2, k>=3 branches)
//   phi_star:   n >= 4, 1 <= k <= n-2
//   phi_dprime: k in {1, 3, n-1}; n >= 6 for k in {1,3}, n >= 7 for k = n-1
ClosedFormValue phi(int n, int k);
ClosedFormValue phi_prime(int n, int k);
ClosedFormValue phi_star(int n, int k);
ClosedFormValue phi_dprime(int n, int k);

/// phi_star(n,k) - phi_prime(n,k); requires 2 <= k <= n-2 (and n >= 5).
double f_diff(int n, int k);

/// Evaluate a formula by CLI name: phi | phi_prime | phi_star | phi_dprime | f.
ClosedFormValue formula_by_name(const std::string& name, int n, int k);

}  // namespace somborq

#endif
