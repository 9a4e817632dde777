#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "su2cp/algebra.hpp"

using namespace su2cp;
using namespace su2cp::algebra;

TEST_CASE("labels and states") {
  CHECK(RepLabel(0).dimension() == 1);
  CHECK(RepLabel(3).dimension() == 7);
  CHECK_THROWS_AS(RepLabel(-1), std::domain_error);

  CHECK(RepLabel::from_two_j(6).j() == 3);
  CHECK_THROWS_AS(RepLabel::from_two_j(3), std::domain_error); // half-integer j = 3/2
  CHECK_THROWS_AS(RepLabel::from_two_j(-2), std::domain_error);

  CHECK_NOTHROW(BasisState(2, -2));
  CHECK_THROWS_AS(BasisState(2, 3), std::domain_error);
  CHECK_THROWS_AS(BasisState(2, -3), std::domain_error);
}

TEST_CASE("generator actions on single states") {
  // highest weight annihilated: coefficient sqrt(0*(-1)) with j+m even
  CHECK(act(GeneratorKind::Jplus, BasisState(1, 1)).empty());

  const auto down = act(GeneratorKind::Jminus, BasisState(1, 0));
  REQUIRE(down.size() == 1);
  CHECK(down[0].coefficient == Radical(1, Rational(2))); // sqrt((j-m)(j-m+1)) = sqrt(2)
  CHECK(down[0].target.m == -1);

  const auto parity = act(GeneratorKind::P, BasisState(1, 0));
  REQUIRE(parity.size() == 1);
  CHECK(parity[0].coefficient == Radical(-1, Rational(1))); // (-1)^(j+m), j+m = 1

  const auto central = act(GeneratorKind::C, BasisState(3, -2));
  REQUIRE(central.size() == 1);
  CHECK(central[0].coefficient == Radical(1, Rational(36))); // 2j = 6
  CHECK(central[0].target.m == -2);

  CHECK(act(GeneratorKind::J0, BasisState(4, 0)).empty()); // zero coefficient normalized away
}

TEST_CASE("band edges annihilated for all j up to 20") {
  for (int j = 0; j <= 20; ++j) {
    CHECK(act(GeneratorKind::Jplus, BasisState(j, j)).empty());
    CHECK(act(GeneratorKind::Jminus, BasisState(j, -j)).empty());
  }
}

TEST_CASE("generator matrices") {
  const auto j0 = generator_matrix_d(GeneratorKind::J0, RepLabel(1));
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) CHECK(j0(r, c) == (r == c ? r - 1.0 : 0.0));

  const auto p = generator_matrix_d(GeneratorKind::P, RepLabel(1));
  CHECK(p(0, 0) == 1.0);
  CHECK(p(1, 1) == -1.0);
  CHECK(p(2, 2) == 1.0);

  const auto c2 = generator_matrix_d(GeneratorKind::C, RepLabel(2));
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 5; ++c) CHECK(c2(r, c) == (r == c ? 4.0 : 0.0));
}

TEST_CASE("lowering matrix is the transpose of the raising matrix") {
  for (int j = 0; j <= 20; ++j) {
    const auto up = generator_matrix(GeneratorKind::Jplus, RepLabel(j));
    const auto dn = generator_matrix(GeneratorKind::Jminus, RepLabel(j));
    for (int r = 0; r < up.rows(); ++r)
      for (int c = 0; c < up.cols(); ++c) CHECK(up(r, c) == dn(c, r));
  }
}

TEST_CASE("defining relations hold for j up to 20 at 1e-12") {
  for (int j = 0; j <= 20; ++j) {
    const auto report = verify_defining_relations(RepLabel(j), 1e-12);
    for (const auto& check : report.checks) {
      INFO("j=", j, " relation ", check.relation, " residual ", check.max_residual);
      CHECK(check.pass);
    }
    CHECK(report.all_pass());
  }
}

TEST_CASE("exact diagonal commutator identity for j up to 20") {
  for (int j = 0; j <= 20; ++j) CHECK(exact_diagonal_identity(RepLabel(j)));
}

TEST_CASE("hand-computed commutator on the j=1 module") {
  // [J+,J-]|1,1> = 2|1,1>, matching 2m(2j(-1)^(j+m) - 1) = 2*1*(2*1-1)... with
  // parity +1: 2(2-1) = 2
  const auto jp = generator_matrix_d(GeneratorKind::Jplus, RepLabel(1));
  const auto jm = generator_matrix_d(GeneratorKind::Jminus, RepLabel(1));
  const auto comm = numerics::matmul(jp, jm) - numerics::matmul(jm, jp);
  CHECK(comm(2, 2) == doctest::Approx(2.0));
  CHECK(comm(1, 1) == doctest::Approx(0.0)); // m = 0 kills the right-hand side
  CHECK(comm(0, 0) == doctest::Approx(-2.0));
}

TEST_CASE("trivial representation j=0") {
  const auto report = verify_defining_relations(RepLabel(0), 1e-15);
  CHECK(report.all_pass());
}
