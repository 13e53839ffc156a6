#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "fym/criteria.hpp"

using namespace fym;

namespace {
const Degree d0{0.0, false};
const Degree dinf{0.0, true};
}

TEST_CASE("convex hypersurface criterion") {
  CHECK(check_convex_hypersurface({1, 1, 1, 1, 1}, d0).satisfied);  // 3 > 2
  CHECK_FALSE(check_convex_hypersurface({1, 1, 1, 1}, d0).satisfied);  // 2 > 2 fails
  CHECK(check_convex_hypersurface({1, 1, 1, 1}, d0).margin == doctest::Approx(0.0));

  const CriterionReport rep = check_convex_hypersurface({1, 1, 1, 1, 1, 10}, d0);
  CHECK_FALSE(rep.satisfied);
  CHECK((rep.witness[0] == 6 || rep.witness[1] == 6));

  CHECK_THROWS_AS(check_convex_hypersurface({1.0, -1.0}, d0), std::invalid_argument);
  CHECK_THROWS_AS(check_convex_hypersurface({1.0}, d0), std::invalid_argument);
  CHECK_THROWS_AS(check_convex_hypersurface({1, 1, 1, 1, 1}, dinf), InapplicableCriterion);
}

TEST_CASE("sphere criterion") {
  CHECK(check_sphere(5, d0).satisfied);
  CHECK_FALSE(check_sphere(4, d0).satisfied);
  CHECK(check_sphere(10, Degree{1.0, false}).satisfied);       // p = 4: n > 8
  CHECK_FALSE(check_sphere(8, Degree{1.0, false}).satisfied);  // boundary
  CHECK_THROWS_AS(check_sphere(5, dinf), InapplicableCriterion);
  CHECK_THROWS_AS(check_sphere(1, d0), std::invalid_argument);
}

TEST_CASE("equal curvatures reduce to the sphere rule") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> cdist(1e-3, 10.0);
  std::uniform_real_distribution<double> ddist(0.0, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + (int)(rng() % 11);
    const double c = cdist(rng);
    const Degree d{ddist(rng), false};
    const std::vector<double> lambdas(n, c);
    CHECK(check_convex_hypersurface(lambdas, d).satisfied == check_sphere(n, d).satisfied);
  }
  for (int n = 2; n <= 12; ++n)
    for (double dv : {0.0, 0.5, 1.0, 2.0})
      CHECK(check_convex_hypersurface(std::vector<double>(n, 1.0), Degree{dv, false}).satisfied ==
            check_sphere(n, Degree{dv, false}).satisfied);
}

TEST_CASE("scale invariance and degree monotonicity") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> dist(0.1, 5.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + (int)(rng() % 6);
    std::vector<double> lam(n), lam2(n);
    const double c = dist(rng);
    for (int i = 0; i < n; ++i) {
      lam[i] = dist(rng);
      lam2[i] = c * lam[i];
    }
    const Degree d1{dist(rng) / 3.0, false};
    const Degree d2{d1.value + dist(rng), false};
    CHECK(check_convex_hypersurface(lam, d1).satisfied ==
          check_convex_hypersurface(lam2, d1).satisfied);
    if (check_convex_hypersurface(lam, d2).satisfied)
      CHECK(check_convex_hypersurface(lam, d1).satisfied);
  }
}

TEST_CASE("curvature norm bounds for infinite-degree profiles") {
  CHECK(born_infeld_negative_bound(5) == doctest::Approx(std::sqrt(1.0 / 3.0)));
  CHECK(born_infeld_negative_bound(6) == doctest::Approx(std::sqrt(0.5)));
  CHECK(exponential_bound(5) == doctest::Approx(std::sqrt(0.5)));
  CHECK(exponential_bound(6) == doctest::Approx(1.0));
  CHECK_THROWS_AS(born_infeld_negative_bound(4), std::invalid_argument);
  CHECK_THROWS_AS(exponential_bound(4), std::invalid_argument);

  for (int n = 5; n <= 12; ++n) {
    const double tb = double(n - 4) / double(n - 2);
    CHECK(std::abs(born_infeld_sign_factor(n, tb)) < 1e-12);
    CHECK(exponential_sign_factor(n, double(n - 4) / 2.0) == 0.0);
    // Below the bound both factors are negative (instability side).
    CHECK(born_infeld_sign_factor(n, 0.5 * tb) < 0.0);
    CHECK(exponential_sign_factor(n, 0.25 * (n - 4)) < 0.0);
  }
}
