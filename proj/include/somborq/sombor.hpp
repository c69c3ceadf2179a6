#ifndef SOMBORQ_SOMBOR_HPP
#define SOMBORQ_SOMBOR_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "somborq/graph.hpp"
#include "somborq/precision.hpp"

namespace somborq {

/// Sum of integer square roots, sum c * sqrt(d), normalised so that every d
/// is squarefree (d = 1 carries the rational part). Two sums are equal as
/// real numbers iff their normalised part lists coincide, which makes exact
/// tie detection decidable without numeric thresholds.
struct RadicalSum {
  std::vector<std::pair<long long, long long>> parts;  // (squarefree d, coeff), d ascending

  bool operator==(const RadicalSum&) const = default;
  bool empty() const { return parts.empty(); }
  double value() const;
  void add(long long radicand, long long coeff);  // folds in coeff * sqrt(radicand)
  void normalize();                               // sort and drop zero coefficients
};

/// A degree pair (a,b) with a <= b and the number of edges carrying it.
struct DegreeTerm {
  int a = 0, b = 0;
  long long count = 0;
  auto operator<=>(const DegreeTerm&) const = default;
};

/// A Sombor index value. Values produced from graphs or closed forms retain
/// their term structure so equality can be decided exactly.
struct SomborValue {
  double value = 0.0;
  bool exact = false;                   // terms/radical sum populated
  std::vector<DegreeTerm> terms;        // degree pairs (graph-produced values)
  RadicalSum radicals;

  static SomborValue from_scalar(double v);
};

/// SO(g) = sum over edges uv of sqrt(deg(u)^2 + deg(v)^2).
SomborValue sombor_index(const Graph& g);

/// Plain double evaluation, no term bookkeeping.
double sombor_value(const Graph& g);

/// Drop in the edge weight sqrt(x^2 + y^2) when y decreases by r, that is
/// sqrt(x^2 + y^2) - sqrt(x^2 + (y-r)^2). Requires r > 0.
double weight_drop(double r, double x, double y);

/// Step of the reciprocal weight 1/sqrt(x^2 + a^2) between x-1 and x, that is
/// 1/sqrt(x^2 + a^2) - 1/sqrt((x-1)^2 + a^2). Requires a > 0.
double inv_weight_step(double x, double a);

enum class Ordering { Less, Equal, Greater };

struct ComparisonOutcome {
  Ordering ordering = Ordering::Equal;
  double gap = 0.0;      // a - b as far as the deciding tier can tell
  bool escalated = false;
};

/// Two-tier comparison: identical normalised term lists compare Equal with no
/// numeric work; double gaps of at least precision::kEscalation decide
/// directly; anything closer is re-evaluated in fixed point with
/// precision::kFractionBits fractional bits, calling Equal only below
/// precision::kHardEquality. Values without term structure fall back to the
/// double tier.
ComparisonOutcome compare(const SomborValue& a, const SomborValue& b);

/// Same policy applied to bare radical sums.
ComparisonOutcome compare(const RadicalSum& a, double va, const RadicalSum& b, double vb);

}  // namespace somborq

#endif
