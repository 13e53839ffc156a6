#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "fym/lie_algebra.hpp"

using namespace fym;

TEST_CASE("builtin algebras validate") {
  make_u1().validate();
  make_su2().validate();
}

TEST_CASE("su(2) cyclic brackets and orthonormal metric") {
  const LieAlgebraSpec alg = make_su2();
  const AlgElement b1{1, 0, 0}, b2{0, 1, 0}, b3{0, 0, 1};
  CHECK(bracket(b1, b2, alg) == b3);
  CHECK(bracket(b2, b3, alg) == b1);
  CHECK(bracket(b3, b1, alg) == b2);
  CHECK(bracket(b2, b1, alg) == scaled(b3, -1.0));
  CHECK(inner(b1, b1, alg) == 1.0);
  CHECK(inner(b1, b2, alg) == 0.0);
}

TEST_CASE("u(1) is abelian") {
  const LieAlgebraSpec alg = make_u1();
  CHECK(bracket(AlgElement{2.0}, AlgElement{3.0}, alg) == AlgElement{0.0});
  CHECK(inner(AlgElement{2.0}, AlgElement{3.0}, alg) == 6.0);
}

TEST_CASE("validation rejects broken specs") {
  LieAlgebraSpec bad = make_su2();
  bad.structure[0] = 0.25;  // breaks antisymmetry c(0,0,0) = -c(0,0,0)
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  LieAlgebraSpec nonpd = make_u1();
  nonpd.metric[0] = -1.0;
  CHECK_THROWS_AS(nonpd.validate(), std::invalid_argument);

  LieAlgebraSpec nonjac = make_su2();
  // Scale a single bracket: antisymmetry survives, Jacobi does not.
  nonjac.structure[(2 * 3 + 0) * 3 + 1] = 2.0;
  nonjac.structure[(2 * 3 + 1) * 3 + 0] = -2.0;
  CHECK_THROWS_AS(nonjac.validate(), std::invalid_argument);

  LieAlgebraSpec noninv = make_su2();
  noninv.metric[0] = 4.0;  // no longer Ad-invariant
  CHECK_THROWS_AS(noninv.validate(), std::invalid_argument);
}

TEST_CASE("element arithmetic") {
  AlgElement y{1.0, 2.0, 3.0};
  axpy(2.0, AlgElement{1.0, 1.0, 1.0}, y);
  CHECK(y == AlgElement{3.0, 4.0, 5.0});
  CHECK(scaled(y, 0.5) == AlgElement{1.5, 2.0, 2.5});
  CHECK(zero_element(make_su2()) == AlgElement{0.0, 0.0, 0.0});
}

TEST_CASE("algebra lookup and file round-trip") {
  CHECK(algebra_by_name("u1").dim == 1);
  CHECK(algebra_by_name("su2").dim == 3);

  const char* path = "su2_roundtrip.json";
  {
    const LieAlgebraSpec alg = make_su2();
    std::ofstream out(path);
    out << "{\"dim\":3,\"structure\":[";
    for (int k = 0; k < 3; ++k) {
      out << (k ? ",[" : "[");
      for (int i = 0; i < 3; ++i) {
        out << (i ? ",[" : "[");
        for (int j = 0; j < 3; ++j) out << (j ? "," : "") << alg.c(k, i, j);
        out << "]";
      }
      out << "]";
    }
    out << "],\"metric\":[[1,0,0],[0,1,0],[0,0,1]]}";
  }
  const LieAlgebraSpec loaded = algebra_by_name(path);
  CHECK(loaded.structure == make_su2().structure);
  CHECK(loaded.metric == make_su2().metric);
  std::remove(path);
  CHECK_THROWS_AS(algebra_by_name("no_such_file.json"), std::invalid_argument);
}
