#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fym/f_family.hpp"

using namespace fym;

TEST_CASE("profile values and derivatives") {
  const FFunction id = make_identity();
  CHECK(id(3.5) == 3.5);
  CHECK(id.F1(3.5) == 1.0);
  CHECK(id.F2(3.5) == 0.0);

  // p = 2 reduces to the identity.
  const FFunction p2 = make_p_power(2.0);
  CHECK(p2(0.7) == doctest::Approx(0.7));
  CHECK(p2.F1(0.7) == doctest::Approx(1.0));

  const FFunction p4 = make_p_power(4.0);
  CHECK(p4(0.5) == doctest::Approx(0.25));     // (2t)^2/4
  CHECK(p4.F1(0.5) == doctest::Approx(1.0));   // 2t
  CHECK(p4.F2(0.5) == doctest::Approx(2.0));

  const FFunction bi = make_born_infeld(1);
  CHECK(bi(0.0) == doctest::Approx(0.0));
  CHECK(bi(1.5) == doctest::Approx(1.0));      // sqrt(4) - 1
  CHECK(bi.F1(0.0) == doctest::Approx(1.0));

  const FFunction bin = make_born_infeld(-1);
  CHECK(bin.domain_bound == doctest::Approx(0.5));
  CHECK(bin(0.375) == doctest::Approx(0.5));   // 1 - sqrt(1/4)

  const FFunction ex = make_exponential();
  CHECK(ex(0.0) == doctest::Approx(1.0));
  CHECK(ex.F2(1.0) == doctest::Approx(std::exp(1.0)));
}

TEST_CASE("builtin resolution and parameter validation") {
  CHECK(make_builtin("p_power", 3.0).p == 3.0);
  CHECK_THROWS_AS(make_builtin("cubic"), std::invalid_argument);
  CHECK_THROWS_AS(make_p_power(1.5), std::invalid_argument);
  CHECK_THROWS_AS(make_born_infeld(0), std::invalid_argument);
}

TEST_CASE("custom profiles are derivative-checked") {
  auto ok = make_custom(
      "quadratic", [](double t) { return t + t * t; }, [](double t) { return 1.0 + 2.0 * t; },
      [](double) { return 2.0; }, std::numeric_limits<double>::infinity());
  CHECK(ok.F1(2.0) == doctest::Approx(5.0));
  CHECK_THROWS_AS(make_custom("broken", [](double t) { return t * t; },
                              [](double) { return 1.0; },  // wrong derivative
                              [](double) { return 0.0; },
                              std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
}

TEST_CASE("analytic degrees") {
  CHECK(degree_analytic(make_identity()).value == 0.0);
  for (double p : {2.0, 2.5, 3.0, 4.0, 6.0}) {
    const Degree d = degree_analytic(make_p_power(p));
    CHECK_FALSE(d.infinite);
    CHECK(d.value == doctest::Approx((p - 2.0) / 2.0));
  }
  CHECK_FALSE(degree_analytic(make_born_infeld(1)).infinite);
  CHECK(degree_analytic(make_born_infeld(1)).value == 0.0);
  CHECK(degree_analytic(make_born_infeld(-1)).infinite);
  CHECK(degree_analytic(make_exponential()).infinite);
  CHECK_THROWS_AS(degree_analytic(make_custom(
                      "c", [](double t) { return t; }, [](double) { return 1.0; },
                      [](double) { return 0.0; }, std::numeric_limits<double>::infinity())),
                  std::invalid_argument);
}

TEST_CASE("numeric degree estimation") {
  for (double p : {2.0, 2.5, 3.0, 4.0, 6.0}) {
    const Degree d = degree_numeric(make_p_power(p));
    REQUIRE_FALSE(d.infinite);
    CHECK(d.value == doctest::Approx((p - 2.0) / 2.0).epsilon(1e-6));
  }
  const Degree id = degree_numeric(make_identity());
  REQUIRE_FALSE(id.infinite);
  CHECK(std::abs(id.value) < 1e-6);
  const Degree bip = degree_numeric(make_born_infeld(1));
  REQUIRE_FALSE(bip.infinite);
  CHECK(std::abs(bip.value) < 1e-6);
  CHECK(degree_numeric(make_born_infeld(-1)).infinite);
  CHECK(degree_numeric(make_exponential()).infinite);
}

TEST_CASE("numeric degree rejects bad grids and non-increasing profiles") {
  DegreeGrid g;
  g.t_min = -1.0;
  CHECK_THROWS_AS(degree_numeric(make_identity(), g), std::invalid_argument);
  auto decreasing = FFunction{};
  decreasing.name = "bad";
  decreasing.F = [](double t) { return -t; };
  decreasing.F1 = [](double) { return -1.0; };
  decreasing.F2 = [](double) { return 0.0; };
  decreasing.domain_bound = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(degree_numeric(decreasing), std::invalid_argument);
}
