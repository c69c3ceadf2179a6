#include "somborq/sombor.hpp"

#include <gmp.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace somborq {

namespace {

constexpr int kSieveMax = 80000;  // covers radicands a^2+b^2 for degrees < 200

// smallest-prime-factor sieve, built once
const std::vector<int>& spf_table() {
  static const std::vector<int> table = [] {
    std::vector<int> spf(kSieveMax + 1, 0);
    for (int i = 2; i <= kSieveMax; ++i) {
      if (spf[i] == 0)
        for (int j = i; j <= kSieveMax; j += i)
          if (spf[j] == 0) spf[j] = i;
    }
    return spf;
  }();
  return table;
}

// d = s^2 * f with f squarefree; returns (f, s)
std::pair<long long, long long> squarefree_split(long long d) {
  long long f = 1, s = 1;
  if (d <= kSieveMax) {
    const auto& spf = spf_table();
    while (d > 1) {
      long long p = spf[d], e = 0;
      while (d % p == 0) {
        d /= p;
        ++e;
      }
      for (long long i = 0; i < e / 2; ++i) s *= p;
      if (e % 2) f *= p;
    }
  } else {
    for (long long p = 2; p * p <= d; ++p) {
      if (d % p) continue;
      long long e = 0;
      while (d % p == 0) {
        d /= p;
        ++e;
      }
      for (long long i = 0; i < e / 2; ++i) s *= p;
      if (e % 2) f *= p;
    }
    if (d > 1) f *= d;
  }
  return {f, s};
}

// Fixed-point evaluation: floor(2^kFractionBits * sum c * sqrt(d)) up to one
// unit of slack per term, far below the kHardEquality threshold.
void extended_eval(const RadicalSum& s, mpz_t out) {
  mpz_t rad, root, term;
  mpz_inits(rad, root, term, nullptr);
  mpz_set_ui(out, 0);
  for (auto [d, c] : s.parts) {
    mpz_set_si(rad, d);
    mpz_mul_2exp(rad, rad, 2 * precision::kFractionBits);
    mpz_sqrt(root, rad);
    mpz_set_si(term, c);
    mpz_mul(term, term, root);
    mpz_add(out, out, term);
  }
  mpz_clears(rad, root, term, nullptr);
}

// 2^kFractionBits * kHardEquality, rounded down
void hard_equality_bound(mpz_t out) {
  mpz_t denom;
  mpz_init(denom);
  mpz_set_ui(out, 1);
  mpz_mul_2exp(out, out, precision::kFractionBits);
  mpz_ui_pow_ui(denom, 10, 30);
  mpz_tdiv_q(out, out, denom);
  mpz_clear(denom);
}

double mpz_to_double_scaled(const mpz_t v) {
  // v / 2^kFractionBits as a double
  signed long exp2 = -static_cast<signed long>(precision::kFractionBits);
  double d = mpz_get_d(v);
  return std::ldexp(d, static_cast<int>(exp2));
}

}  // namespace

double RadicalSum::value() const {
  double v = 0.0;
  for (auto [d, c] : parts) v += static_cast<double>(c) * std::sqrt(static_cast<double>(d));
  return v;
}

void RadicalSum::add(long long radicand, long long coeff) {
  if (radicand < 0) throw std::invalid_argument("RadicalSum: negative radicand");
  if (radicand == 0 || coeff == 0) return;
  auto [f, s] = squarefree_split(radicand);
  long long c = coeff * s;
  auto it = std::lower_bound(parts.begin(), parts.end(), f,
                             [](const auto& p, long long key) { return p.first < key; });
  if (it != parts.end() && it->first == f) {
    it->second += c;
    if (it->second == 0) parts.erase(it);
  } else {
    parts.insert(it, {f, c});
  }
}

void RadicalSum::normalize() {
  std::sort(parts.begin(), parts.end());
  std::vector<std::pair<long long, long long>> out;
  for (auto [d, c] : parts) {
    if (!out.empty() && out.back().first == d)
      out.back().second += c;
    else
      out.push_back({d, c});
  }
  std::erase_if(out, [](const auto& p) { return p.second == 0; });
  parts = std::move(out);
}

SomborValue SomborValue::from_scalar(double v) {
  SomborValue s;
  s.value = v;
  return s;
}

SomborValue sombor_index(const Graph& g) {
  std::map<std::pair<int, int>, long long> count;
  for (auto [u, v] : g.edges()) {
    int a = g.degree(u), b = g.degree(v);
    if (a > b) std::swap(a, b);
    ++count[{a, b}];
  }
  SomborValue out;
  out.exact = true;
  for (auto& [pair, c] : count) {
    out.terms.push_back({pair.first, pair.second, c});
    long long rad = static_cast<long long>(pair.first) * pair.first +
                    static_cast<long long>(pair.second) * pair.second;
    out.radicals.add(rad, c);
    out.value += static_cast<double>(c) * std::sqrt(static_cast<double>(rad));
  }
  return out;
}

double sombor_value(const Graph& g) {
  double v = 0.0;
  for (auto [u, v2] : g.edges()) {
    double a = g.degree(u), b = g.degree(v2);
    v += std::sqrt(a * a + b * b);
  }
  return v;
}

double weight_drop(double r, double x, double y) {
  if (!(r > 0.0)) throw std::invalid_argument("weight_drop requires r > 0");
  return std::sqrt(x * x + y * y) - std::sqrt(x * x + (y - r) * (y - r));
}

double inv_weight_step(double x, double a) {
  if (!(a > 0.0)) throw std::invalid_argument("inv_weight_step requires a > 0");
  return 1.0 / std::sqrt(x * x + a * a) - 1.0 / std::sqrt((x - 1.0) * (x - 1.0) + a * a);
}

ComparisonOutcome compare(const RadicalSum& a, double va, const RadicalSum& b, double vb) {
  if (a == b) return {Ordering::Equal, 0.0, false};

  double diff = va - vb;
  if (std::abs(diff) >= precision::kEscalation)
    return {diff > 0 ? Ordering::Greater : Ordering::Less, diff, false};

  mpz_t ea, eb, bound;
  mpz_inits(ea, eb, bound, nullptr);
  extended_eval(a, ea);
  extended_eval(b, eb);
  mpz_sub(ea, ea, eb);
  hard_equality_bound(bound);

  ComparisonOutcome out;
  out.escalated = true;
  out.gap = mpz_to_double_scaled(ea);
  mpz_abs(eb, ea);
  if (mpz_cmp(eb, bound) < 0)
    out.ordering = Ordering::Equal;
  else
    out.ordering = mpz_sgn(ea) > 0 ? Ordering::Greater : Ordering::Less;
  mpz_clears(ea, eb, bound, nullptr);
  return out;
}

ComparisonOutcome compare(const SomborValue& a, const SomborValue& b) {
  if (a.exact && b.exact) return compare(a.radicals, a.value, b.radicals, b.value);
  // No term structure to escalate with; decide on doubles.
  double diff = a.value - b.value;
  if (diff == 0.0) return {Ordering::Equal, 0.0, false};
  return {diff > 0 ? Ordering::Greater : Ordering::Less, diff, false};
}

}  // namespace somborq
