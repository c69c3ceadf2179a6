#ifndef SOMBORQ_PRECISION_HPP
#define SOMBORQ_PRECISION_HPP

namespace somborq::precision {

// Two-tier numeric policy used by every comparison downstream. Doubles carry
// ~11 safe decimal digits for the index values that occur at n <= 200, so a
// gap below kEscalation is re-decided in fixed-point integers with
// kFractionBits fractional bits before anything is called a tie.
inline constexpr double kEscalation = 1e-6;     // double gap that forces escalation
inline constexpr double kHardEquality = 1e-30;  // extended-precision tie threshold
inline constexpr double kClusterRadius = 1e-9;  // enumeration level clustering
inline constexpr double kFormulaTol = 1e-9;     // constructor vs closed form
inline constexpr int kFractionBits = 192;       // extended-precision resolution

}  // namespace somborq::precision

#endif
