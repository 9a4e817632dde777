#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "su2cp/numerics.hpp"

#include <cmath>
#include <random>

using namespace su2cp::numerics;

namespace {

double eig_residual(const SymTridiag& t, const EigenResult& r) {
  const int n = t.size();
  double worst = 0.0;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      double av = t.diagonal[i] * r.vectors(i, k);
      if (i > 0) av += t.offdiagonal[i - 1] * r.vectors(i - 1, k);
      if (i + 1 < n) av += t.offdiagonal[i] * r.vectors(i + 1, k);
      worst = std::max(worst, std::abs(av - r.eigenvalues[k] * r.vectors(i, k)));
    }
  return worst;
}

double ortho_residual(const EigenResult& r) {
  return max_abs(matmul(transpose(r.vectors), r.vectors) - Matrix::identity(r.vectors.rows()));
}

} // namespace

TEST_CASE("matrix helpers") {
  Matrix a(2, 3);
  a(0, 0) = 1;
  a(0, 2) = 2;
  a(1, 1) = -3;
  const auto at = transpose(a);
  CHECK(at.rows() == 3);
  CHECK(at(2, 0) == 2);
  const auto att = transpose(at);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) CHECK(att(i, j) == a(i, j));

  const auto id = Matrix::identity(3);
  const auto prod = matmul(a, id);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) CHECK(prod(i, j) == a(i, j));

  CHECK(max_abs(Matrix(4, 4)) == 0.0);
  CHECK(max_abs(a) == 3.0);
  CHECK_THROWS_AS(matmul(a, a), std::domain_error);
  CHECK_THROWS_AS(a + transpose(a), std::domain_error);
}

TEST_CASE("tridiagonal construction") {
  CHECK_THROWS_AS(SymTridiag({1.0, 2.0}, {}), std::invalid_argument);
  CHECK_THROWS_AS(SymTridiag({}, {}), std::invalid_argument);
  CHECK_NOTHROW(SymTridiag({5.0}, {}));

  const SymTridiag t({1.0, 2.0, 3.0}, {0.5, -0.5});
  const auto dense = t.to_dense();
  CHECK(dense(0, 1) == 0.5);
  CHECK(dense(1, 0) == 0.5);
  CHECK(dense(2, 1) == -0.5);
  CHECK(dense(2, 2) == 3.0);
}

TEST_CASE("one-by-one matrix") {
  const auto r = eigh_tridiagonal(SymTridiag({5.0}, {}), 1e-12);
  REQUIRE(r.has_value());
  CHECK(r->eigenvalues == std::vector<double>{5.0});
  CHECK(r->vectors(0, 0) == 1.0);
}

TEST_CASE("known spectra") {
  const double s2 = std::sqrt(2.0);
  const auto r3 = eigh_tridiagonal(SymTridiag({0, 0, 0}, {s2, s2}), 1e-13);
  REQUIRE(r3.has_value());
  CHECK(r3->eigenvalues[0] == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(r3->eigenvalues[1] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(r3->eigenvalues[2] == doctest::Approx(2.0).epsilon(1e-12));

  const double s12 = std::sqrt(12.0);
  const auto r5 = eigh_tridiagonal(SymTridiag({0, 0, 0, 0, 0}, {s12, s2, s2, s12}), 1e-13);
  REQUIRE(r5.has_value());
  const double s3 = std::sqrt(3.0);
  const std::vector<double> expected{-4.0, -2.0 * s3, 0.0, 2.0 * s3, 4.0};
  for (int k = 0; k < 5; ++k)
    CHECK(r5->eigenvalues[k] == doctest::Approx(expected[k]).epsilon(1e-12));
  CHECK(eig_residual(SymTridiag({0, 0, 0, 0, 0}, {s12, s2, s2, s12}), *r5) < 1e-11);
  CHECK(ortho_residual(*r5) < 1e-11);
}

TEST_CASE("random symmetric tridiagonal matrices, fixed seed") {
  std::mt19937 gen(20240911u);
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  for (int n : {2, 3, 5, 17, 60, 200}) {
    std::vector<double> d(n), e(n - 1);
    for (auto& v : d) v = dist(gen);
    for (auto& v : e) v = dist(gen);
    const SymTridiag t(d, e);
    const auto r = eigh_tridiagonal(t, 1e-12);
    REQUIRE(r.has_value());
    for (int k = 0; k + 1 < n; ++k) CHECK(r->eigenvalues[k] <= r->eigenvalues[k + 1]);
    CHECK(eig_residual(t, *r) < 1e-9);
    CHECK(ortho_residual(*r) < 1e-9);
  }
}

TEST_CASE("Sturm counts agree with the computed spectrum") {
  std::mt19937 gen(7u);
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  for (int n : {3, 11, 40}) {
    std::vector<double> d(n), e(n - 1);
    for (auto& v : d) v = dist(gen);
    for (auto& v : e) v = dist(gen);
    const SymTridiag t(d, e);
    const auto r = eigh_tridiagonal(t, 1e-12);
    REQUIRE(r.has_value());
    for (double shift : {-25.0, -5.0, -1.0, 0.0, 0.31, 2.7, 5.0, 25.0}) {
      int expected = 0;
      for (double ev : r->eigenvalues)
        if (ev < shift) ++expected;
      CHECK(sturm_count_below(t, shift) == expected);
    }
  }
}

TEST_CASE("near-degenerate cluster stays orthonormal") {
  // three eigenvalues within 1e-12 of each other
  const SymTridiag t({1.0, 1.0, 1.0, 4.0}, {1e-13, 1e-13, 1e-13});
  const auto r = eigh_tridiagonal(t, 1e-13);
  REQUIRE(r.has_value());
  CHECK(ortho_residual(*r) < 1e-9);
  CHECK(eig_residual(t, *r) < 1e-9);
}

TEST_CASE("decoupled blocks (zero off-diagonal)") {
  const SymTridiag t({2.0, -1.0, 3.0}, {0.0, 0.0});
  const auto r = eigh_tridiagonal(t, 1e-13);
  REQUIRE(r.has_value());
  CHECK(r->eigenvalues[0] == doctest::Approx(-1.0));
  CHECK(r->eigenvalues[1] == doctest::Approx(2.0));
  CHECK(r->eigenvalues[2] == doctest::Approx(3.0));
  CHECK(ortho_residual(*r) < 1e-10);
}

TEST_CASE("tolerance validation") {
  CHECK_THROWS_AS(eigh_tridiagonal(SymTridiag({1.0}, {}), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(eigh_tridiagonal(SymTridiag({1.0}, {}), -1.0), std::invalid_argument);
}
