#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>

#include <Eigen/Dense>

#include "fym/hypersurface.hpp"
#include "fym/identities.hpp"

using namespace fym;

TEST_CASE("immersion constructors and validation") {
  const ImmersionData sph = ImmersionData::sphere(3, 2.0);
  CHECK(sph.n == 3);
  CHECK(sph.N == 4);
  CHECK(sph.hval(0, 1, 1) == doctest::Approx(0.5));
  CHECK(sph.hval(0, 0, 1) == 0.0);
  CHECK(sph.mean_curvature(0) == doctest::Approx(1.5));

  const ImmersionData hyp = ImmersionData::hypersurface({1.0, 2.0, 3.0});
  CHECK(hyp.mean_curvature(0) == doctest::Approx(6.0));

  ImmersionData bad = hyp;
  bad.at(0, 0, 1) = 0.3;  // symmetric partner untouched
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("gauss curvature") {
  const CurvatureTensorData C = gauss_curvature(ImmersionData::sphere(3, 2.0));
  C.validate();
  CHECK(C.R(0, 1, 0, 1) == doctest::Approx(0.25));  // 1/r^2

  for (int n : {2, 4, 6}) {
    const double r = 0.5;
    const CurvatureTensorData Cs = gauss_curvature(ImmersionData::sphere(n, r));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        CHECK(Cs.Ric(i, k) == doctest::Approx((i == k) ? (n - 1) / (r * r) : 0.0));
  }

  ImmersionData flat;
  flat.n = 3;
  flat.N = 4;
  flat.h.assign(9, 0.0);
  const CurvatureTensorData Cf = gauss_curvature(flat);
  for (double v : Cf.riemann) CHECK(v == 0.0);
  for (double v : Cf.ricci) CHECK(v == 0.0);

  // Random immersions produce tensors with all curvature symmetries.
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial)
    gauss_curvature(random_immersion(3 + (int)(rng() % 3), 2, rng)).validate();
}

TEST_CASE("scalar invariants on spheres") {
  const LieAlgebraSpec su2 = make_su2();
  std::mt19937_64 rng(17);
  for (int n = 2; n <= 8; ++n)
    for (double r : {0.5, 1.0, 2.0}) {
      const ImmersionData imm = ImmersionData::sphere(n, r);
      for (int trial = 0; trial < 5; ++trial) {
        const PointForm phi = random_point_form(2, n, su2, rng);
        const double norm2 = inner_forms(phi, phi, su2);
        const ScalarInvariants inv = scalar_invariants(imm, phi, su2, Degree{0.0, false});
        CHECK(inv.H_phi == doctest::Approx(2.0 * n / (r * r) * norm2).epsilon(1e-10));
        CHECK(inv.h1_norm2 == doctest::Approx(4.0 / (r * r) * norm2 * norm2).epsilon(1e-10));
        CHECK(inv.h2 == doctest::Approx(2.0 / (r * r) * norm2).epsilon(1e-10));
        CHECK(inv.h2p == doctest::Approx(2.0 / (r * r) * norm2).epsilon(1e-10));
      }
    }
}

TEST_CASE("scalar invariant identities on random immersions") {
  const LieAlgebraSpec su2 = make_su2();
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + (int)(rng() % 4);
    const ImmersionData imm = random_immersion(n, 1 + (int)(rng() % 2), rng);
    const PointForm phi = random_point_form(2, n, su2, rng);
    const ScalarInvariants inv = scalar_invariants(imm, phi, su2, Degree{0.5, false});
    CHECK(inv.h2 == doctest::Approx(0.5 * inv.R_phi).epsilon(1e-10));
    CHECK(inv.h2p == doctest::Approx(inv.H_phi - inv.Ric_phi).epsilon(1e-10));
    CHECK(inv.R_phi == doctest::Approx(oracle::R_phi(imm, phi, su2)).epsilon(1e-10));
    CHECK(inv.Ric_phi == doctest::Approx(oracle::Ric_phi(imm, phi, su2)).epsilon(1e-10));
    CHECK(inv.H_phi == doctest::Approx(oracle::H_phi(imm, phi, su2)).epsilon(1e-10));
    CHECK(inv.has_B);
  }
}

TEST_CASE("scalar invariants are frame invariant") {
  const LieAlgebraSpec su2 = make_su2();
  std::mt19937_64 rng(29);
  std::normal_distribution<double> dist(0.0, 1.0);
  const int n = 4, codim = 2;
  for (int trial = 0; trial < 10; ++trial) {
    const ImmersionData imm = random_immersion(n, codim, rng);
    const PointForm phi = random_point_form(2, n, su2, rng);
    const ScalarInvariants a = scalar_invariants(imm, phi, su2, Degree{1.0, false});

    // Rotate tangent frame by Q and normal frame by P.
    Eigen::MatrixXd Gq(n, n), Gp(codim, codim);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) Gq(i, j) = dist(rng);
    for (int i = 0; i < codim; ++i)
      for (int j = 0; j < codim; ++j) Gp(i, j) = dist(rng);
    const Eigen::MatrixXd Q = Eigen::HouseholderQR<Eigen::MatrixXd>(Gq).householderQ();
    const Eigen::MatrixXd P = Eigen::HouseholderQR<Eigen::MatrixXd>(Gp).householderQ();

    ImmersionData rimm = imm;
    for (int mu = 0; mu < codim; ++mu)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          double s = 0.0;
          for (int nu = 0; nu < codim; ++nu)
            for (int k = 0; k < n; ++k)
              for (int l = 0; l < n; ++l)
                s += P(nu, mu) * Q(k, i) * Q(l, j) * imm.hval(nu, k, l);
          rimm.at(mu, i, j) = s;
        }
    PointForm rphi = PointForm::zero(2, n, su2);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        AlgElement acc = zero_element(su2);
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) axpy(Q(k, i) * Q(l, j), phi.get(k, l), acc);
        rphi.set(i, j, acc);
      }

    const ScalarInvariants b = scalar_invariants(rimm, rphi, su2, Degree{1.0, false});
    CHECK(a.R_phi == doctest::Approx(b.R_phi).epsilon(1e-9));
    CHECK(a.Ric_phi == doctest::Approx(b.Ric_phi).epsilon(1e-9));
    CHECK(a.H_phi == doctest::Approx(b.H_phi).epsilon(1e-9));
    CHECK(a.h1_norm2 == doctest::Approx(b.h1_norm2).epsilon(1e-9));
    CHECK(a.h2 == doctest::Approx(b.h2).epsilon(1e-9));
    CHECK(a.h2p == doctest::Approx(b.h2p).epsilon(1e-9));
    CHECK(a.B == doctest::Approx(b.B).epsilon(1e-9));
  }
}

TEST_CASE("B handling") {
  const LieAlgebraSpec su2 = make_su2();
  std::mt19937_64 rng(31);
  const ImmersionData imm = ImmersionData::sphere(4, 1.0);
  const PointForm phi = random_point_form(2, 4, su2, rng);

  CHECK_THROWS_AS(scalar_invariants(imm, phi, su2, Degree{0.0, true}), std::invalid_argument);
  const ScalarInvariants inv = scalar_invariants(imm, phi, su2, Degree{0.0, true}, false);
  CHECK_FALSE(inv.has_B);

  // Per-triple coefficient at equal curvatures.
  CHECK(B_sphere_reduction(5, 1.0, 0.0) == doctest::Approx(-0.25));
  CHECK(B_sphere_reduction(4, 1.0, 0.0) == doctest::Approx(0.0));
  CHECK(B_sphere_reduction(9, 2.0, 1.0) == doctest::Approx(-1.0));
  CHECK_THROWS_AS(B_sphere_reduction(1, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("immersion file loading") {
  const char* path = "imm_test.json";
  {
    std::ofstream out(path);
    out << R"({"lambdas": [1.0, 2.0]})";
  }
  const ImmersionData a = load_immersion(path);
  CHECK(a.n == 2);
  CHECK(a.hval(0, 1, 1) == 2.0);
  {
    std::ofstream out(path);
    out << R"({"n": 2, "N": 3, "h": [[[0.5, 0.1], [0.1, 0.5]]]})";
  }
  const ImmersionData b = load_immersion(path);
  CHECK(b.hval(0, 0, 1) == 0.1);
  std::remove(path);
  CHECK_THROWS_AS(load_immersion("missing_imm.json"), std::invalid_argument);
}
