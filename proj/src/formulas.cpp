#include "somborq/formulas.hpp"

#include <cmath>
#include <stdexcept>

namespace somborq {

namespace {

std::string range_msg(const char* name, int n, int k, const char* bound) {
  return std::string(name) + " requires " + bound + " (got n=" + std::to_string(n) +
         ", k=" + std::to_string(k) + ")";
}

ClosedFormValue build(const char* name, int n, int k, std::vector<RadTerm> terms) {
  ClosedFormValue out;
  out.name = name;
  out.n = n;
  out.k = k;
  std::erase_if(terms, [](const RadTerm& t) { return t.coeff == 0; });
  out.terms = std::move(terms);
  for (const RadTerm& t : out.terms) {
    out.value += static_cast<double>(t.coeff) * std::sqrt(static_cast<double>(t.radicand));
    out.radicals.add(t.radicand, t.coeff);
  }
  return out;
}

long long sq(long long x) { return x * x; }

}  // namespace

SomborValue ClosedFormValue::as_sombor() const {
  SomborValue s;
  s.value = value;
  s.exact = true;
  s.radicals = radicals;
  return s;
}

ClosedFormValue phi(int n, int k) {
  if (n < 3 || k < 1 || k > n - 1)
    throw std::invalid_argument(range_msg("phi", n, k, "n >= 3 and 1 <= k <= n-1"));
  return build("phi", n, k,
               {{n - k - 1, sq(n - 1) + 1},
                {k - 1, sq(k) + 4},
                {k - 1, sq(n - 1) + 4},
                {1, sq(k) + sq(n - 1)}});
}

ClosedFormValue phi_prime(int n, int k) {
  if (n < 5 || k < 1 || k > n - 1)
    throw std::invalid_argument(range_msg("phi_prime", n, k, "n >= 5 and 1 <= k <= n-1"));
  if (k == 1)
    return build("phi_prime", n, k, {{n - 3, sq(n - 2) + 1}, {1, sq(n - 2) + 4}, {1, 5}});
  if (k == 2)
    return build("phi_prime", n, k,
                 {{n - 4, sq(n - 2) + 1},
                  {1, sq(n - 2) + 4},
                  {1, sq(n - 2) + 9},
                  {1, 13},
                  {1, 10}});
  return build("phi_prime", n, k,
               {{k - 2, sq(k) + 4},
                {k - 3, sq(n - 2) + 4},
                {n - k - 1, sq(n - 2) + 1},
                {1, sq(k) + sq(n - 2)},
                {1, sq(n - 2) + 9},
                {1, sq(k) + 9},
                {1, 13}});
}

ClosedFormValue phi_star(int n, int k) {
  if (n < 4 || k < 1 || k > n - 2)
    throw std::invalid_argument(range_msg("phi_star", n, k, "n >= 4 and 1 <= k <= n-2"));
  return build("phi_star", n, k,
               {{k, sq(k) + 4}, {k, sq(n - 2) + 4}, {n - k - 2, sq(n - 2) + 1}});
}

ClosedFormValue phi_dprime(int n, int k) {
  if (k == 1 && n >= 6)
    return build("phi_dprime", n, k,
                 {{n - 4, sq(n - 3) + 1}, {1, sq(n - 3) + 9}, {2, 10}});
  if (k == 3 && n >= 6)
    return build("phi_dprime", n, k,
                 {{n - 5, sq(n - 2) + 1},
                  {1, sq(n - 2) + 4},
                  {2, sq(n - 2) + 9},
                  {1, 10},
                  {1, 13},
                  {1, 18}});
  if (k == n - 1 && n >= 7)
    return build("phi_dprime", n, k,
                 {{n - 3, sq(n - 1) + 4},
                  {1, sq(n - 1) + 16},
                  {1, sq(n - 1) + sq(n - 3)},
                  {1, sq(n - 3) + 16},
                  {n - 5, sq(n - 3) + 4},
                  {2, 20}});
  throw std::invalid_argument(range_msg(
      "phi_dprime", n, k,
      "k in {1, 3, n-1} with n >= 6 for k in {1,3} and n >= 7 for k = n-1"));
}

double f_diff(int n, int k) {
  if (k < 2 || k > n - 2 || n < 5)
    throw std::invalid_argument(range_msg("f_diff", n, k, "n >= 5 and 2 <= k <= n-2"));
  return phi_star(n, k).value - phi_prime(n, k).value;
}

ClosedFormValue formula_by_name(const std::string& name, int n, int k) {
  if (name == "phi") return phi(n, k);
  if (name == "phi_prime") return phi_prime(n, k);
  if (name == "phi_star") return phi_star(n, k);
  if (name == "phi_dprime") return phi_dprime(n, k);
  if (name == "f") {
    ClosedFormValue out;
    out.name = "f";
    out.n = n;
    out.k = k;
    out.value = f_diff(n, k);
    return out;
  }
  throw std::invalid_argument("unknown formula \"" + name +
                              "\" (valid: phi, phi_prime, phi_star, phi_dprime, f)");
}

}  // namespace somborq
