#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "somborq/families.hpp"
#include "somborq/formulas.hpp"
#include "somborq/sombor.hpp"

using namespace somborq;

namespace {

long double eval_l(std::initializer_list<std::pair<long long, long long>> terms) {
  long double v = 0.0L;
  for (auto [c, d] : terms) v += static_cast<long double>(c) * sqrtl(static_cast<long double>(d));
  return v;
}

bool same_term_multiset(std::vector<RadTerm> a, std::vector<RadTerm> b) {
  auto key = [](const RadTerm& t) { return std::pair{t.radicand, t.coeff}; };
  std::sort(a.begin(), a.end(), [&](auto& x, auto& y) { return key(x) < key(y); });
  std::sort(b.begin(), b.end(), [&](auto& x, auto& y) { return key(x) < key(y); });
  return a == b;
}

}  // namespace

TEST_CASE("phi at pinned points") {
  CHECK(phi(6, 1).value == doctest::Approx(static_cast<double>(eval_l({{5, 26}}))).epsilon(1e-12));
  CHECK(phi(5, 2).value ==
        doctest::Approx(static_cast<double>(eval_l({{2, 17}, {1, 8}, {2, 20}}))).epsilon(1e-12));
  CHECK(phi(5, 2).value == doctest::Approx(20.018910286).epsilon(1e-9));
  // k = n-1 collapses to sqrt(2)(n-1) + 2(n-2) sqrt((n-1)^2+4)
  CHECK(phi(7, 6).value ==
        doctest::Approx(static_cast<double>(eval_l({{6, 2}, {10, 40}}))).epsilon(1e-12));
  // degenerate order 3: path vs triangle
  CHECK(phi(3, 1).value == doctest::Approx(2.0 * std::sqrt(5.0)).epsilon(1e-12));
  CHECK(phi(3, 2).value == doctest::Approx(3.0 * std::sqrt(8.0)).epsilon(1e-12));
}

TEST_CASE("phi_prime branches at pinned points") {
  CHECK(phi_prime(6, 1).value ==
        doctest::Approx(static_cast<double>(eval_l({{3, 17}, {1, 20}, {1, 5}}))).epsilon(1e-12));
  CHECK(phi_prime(6, 2).value ==
        doctest::Approx(static_cast<double>(eval_l({{2, 17}, {1, 20}, {1, 25}, {1, 13}, {1, 10}})))
            .epsilon(1e-12));
  CHECK(phi_prime(6, 2).value == doctest::Approx(24.4861761419).epsilon(1e-9));
  // k >= 3 branch, spot value against an independent evaluation
  CHECK(phi_prime(7, 4).value ==
        doctest::Approx(static_cast<double>(
                            eval_l({{2, 20}, {1, 29}, {2, 26}, {1, 41}, {1, 34}, {1, 25}, {1, 13}})))
            .epsilon(1e-12));
}

TEST_CASE("phi_star at pinned points") {
  CHECK(phi_star(6, 2).value ==
        doctest::Approx(static_cast<double>(eval_l({{2, 8}, {2, 20}, {2, 17}}))).epsilon(1e-12));
  CHECK(phi_star(6, 2).value == doctest::Approx(22.8473374107).epsilon(1e-9));
}

TEST_CASE("phi_star(n,1) and phi_prime(n,1) are the same sum, term by term") {
  for (int n = 5; n <= 60; ++n) {
    CHECK(same_term_multiset(phi_star(n, 1).terms, phi_prime(n, 1).terms));
    CHECK(phi_star(n, 1).radicals == phi_prime(n, 1).radicals);
  }
}

TEST_CASE("phi_dprime branches at pinned points") {
  CHECK(phi_dprime(7, 1).value ==
        doctest::Approx(static_cast<double>(eval_l({{3, 17}, {1, 25}, {2, 10}}))).epsilon(1e-12));
  CHECK(phi_dprime(7, 1).value == doctest::Approx(23.6938721972).epsilon(1e-9));

  CHECK(phi_dprime(7, 3).value ==
        doctest::Approx(static_cast<double>(
                            eval_l({{2, 26}, {1, 29}, {2, 34}, {1, 10}, {1, 13}, {1, 18}})))
            .epsilon(1e-12));
  CHECK(phi_dprime(7, 3).value == doctest::Approx(38.2555772468).epsilon(1e-9));

  // k = n-1 cross-checked against the constructed graph
  CHECK(phi_dprime(7, 6).value ==
        doctest::Approx(sombor_index(construct({Family::Qdprime, 7, 6}).graph).value)
            .epsilon(1e-12));
}

TEST_CASE("f_diff reproduces the pinned crossover values") {
  CHECK(f_diff(23, 4) == doctest::Approx(0.0092).epsilon(0.06));
  CHECK(f_diff(23, 4) > 0);
  CHECK(f_diff(9, 5) == doctest::Approx(-0.1150).epsilon(0.005));
  CHECK(f_diff(9, 5) < 0);
  CHECK(f_diff(22, 5) == doctest::Approx(0.7688).epsilon(0.001));
  CHECK(f_diff(22, 5) > 0);
  // and the sign pattern at small k
  CHECK(f_diff(7, 2) < 0);
  CHECK(f_diff(7, 3) < 0);
}

TEST_CASE("formula domain errors name the violated bound") {
  CHECK_THROWS_WITH_AS(phi(5, 0), doctest::Contains("1 <= k <= n-1"), std::invalid_argument);
  CHECK_THROWS_AS(phi(5, 5), std::invalid_argument);
  CHECK_THROWS_AS(phi(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(phi_prime(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(phi_star(5, 4), std::invalid_argument);
  CHECK_THROWS_WITH_AS(phi_dprime(8, 2), doctest::Contains("k in {1, 3, n-1}"),
                       std::invalid_argument);
  CHECK_THROWS_AS(phi_dprime(5, 1), std::invalid_argument);
  CHECK_THROWS_AS(phi_dprime(6, 5), std::invalid_argument);  // k = n-1 needs n >= 7
  CHECK_THROWS_AS(f_diff(5, 1), std::invalid_argument);
  CHECK_THROWS_AS(f_diff(5, 4), std::invalid_argument);
}

TEST_CASE("formula_by_name dispatch") {
  CHECK(formula_by_name("phi", 5, 2).value == doctest::Approx(phi(5, 2).value));
  CHECK(formula_by_name("phi_prime", 6, 2).value == doctest::Approx(phi_prime(6, 2).value));
  CHECK(formula_by_name("phi_star", 6, 2).value == doctest::Approx(phi_star(6, 2).value));
  CHECK(formula_by_name("phi_dprime", 7, 3).value == doctest::Approx(phi_dprime(7, 3).value));
  CHECK(formula_by_name("f", 23, 4).value == doctest::Approx(f_diff(23, 4)));
  CHECK_THROWS_WITH_AS(formula_by_name("zeta", 5, 1), doctest::Contains("unknown formula"),
                       std::invalid_argument);
}

TEST_CASE("closed-form term lists reproduce their values within rounding") {
  for (int n : {5, 9, 23, 80}) {
    for (int k = 1; k <= n - 1; ++k) {
      ClosedFormValue v = phi(n, k);
      long double direct = 0.0L;
      for (const auto& t : v.terms)
        direct += static_cast<long double>(t.coeff) * sqrtl(static_cast<long double>(t.radicand));
      CHECK(v.value == doctest::Approx(static_cast<double>(direct)).epsilon(1e-13));
      for (const auto& t : v.terms) CHECK(t.radicand > 0);
    }
  }
}

TEST_CASE("strict orderings at small parameters") {
  // phi_prime beats phi_star at k = 2, 3 (small-k regime)
  for (int n : {5, 6, 7, 12, 30}) {
    CHECK(phi_prime(n, 2).value > phi_star(n, 2).value);
    if (n >= 5) CHECK(phi_prime(n, 3).value > phi_star(n, 3).value);
  }
  // chain at n = 5
  CHECK(phi(5, 1).value < phi(5, 2).value);
  CHECK(phi(5, 2).value < phi(5, 3).value);
  CHECK(phi(5, 3).value < phi(5, 4).value);
}
