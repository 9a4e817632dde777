#include "su2cp/algebra.hpp"

#include <cmath>

namespace su2cp::algebra {

namespace {

using numerics::Matrix;

std::vector<ActionTerm> single(const Radical& coeff, int j, int m) {
  if (coeff.is_zero() || m < -j || m > j) return {};
  return {ActionTerm{coeff, BasisState(j, m)}};
}

// sqrt(a*b) for integer a, b with a*b >= 0.
Radical root_of_product(long a, long b) {
  return Radical::sqrt_of(Rational(a) * Rational(b));
}

} // namespace

std::vector<ActionTerm> act(GeneratorKind g, const BasisState& s) {
  const int j = s.j;
  const int m = s.m;
  const bool even = ((j + m) % 2 == 0);
  switch (g) {
    case GeneratorKind::J0:
      return single(Radical::of_rational(Rational(m)), j, m);
    case GeneratorKind::Jplus:
      return single(even ? root_of_product(j - m, j - m - 1)
                         : root_of_product(j + m, j + m + 1),
                    j, m + 1);
    case GeneratorKind::Jminus:
      return single(even ? root_of_product(j + m, j + m - 1)
                         : root_of_product(j - m, j - m + 1),
                    j, m - 1);
    case GeneratorKind::C:
      return single(Radical::of_rational(Rational(2 * j)), j, m);
    case GeneratorKind::P:
      return single(Radical(even ? 1 : -1, Rational(1)), j, m);
  }
  throw std::domain_error("act: unknown generator");
}

numerics::MatrixT<Radical> generator_matrix(GeneratorKind g, const RepLabel& rep) {
  const int j = rep.j();
  const int dim = rep.dimension();
  numerics::MatrixT<Radical> mat(dim, dim);
  for (int m = -j; m <= j; ++m)
    for (const auto& term : act(g, BasisState(j, m)))
      mat(term.target.m + j, m + j) = term.coefficient;
  return mat;
}

numerics::Matrix generator_matrix_d(GeneratorKind g, const RepLabel& rep) {
  const auto exact = generator_matrix(g, rep);
  Matrix mat(exact.rows(), exact.cols());
  for (int r = 0; r < exact.rows(); ++r)
    for (int c = 0; c < exact.cols(); ++c) mat(r, c) = exact(r, c).to_double();
  return mat;
}

bool exact_diagonal_identity(const RepLabel& rep) {
  const int j = rep.j();
  for (int m = -j; m <= j; ++m) {
    // [J+,J-]|j,m> is diagonal; each composed coefficient is a product of
    // two radicals with the same radicand, hence an exact rational.
    Rational lhs = 0;
    for (const auto& down : act(GeneratorKind::Jminus, BasisState(j, m)))
      for (const auto& up : act(GeneratorKind::Jplus, down.target)) {
        auto v = (down.coefficient * up.coefficient).to_rational();
        if (!v) return false;
        lhs += *v;
      }
    for (const auto& up : act(GeneratorKind::Jplus, BasisState(j, m)))
      for (const auto& down : act(GeneratorKind::Jminus, up.target)) {
        auto v = (up.coefficient * down.coefficient).to_rational();
        if (!v) return false;
        lhs -= *v;
      }
    const long parity = ((j + m) % 2 == 0) ? 1 : -1;
    const Rational rhs = Rational(2 * m) * (Rational(2 * j) * parity - Rational(1));
    if (lhs != rhs) return false;
  }
  return true;
}

VerificationReport verify_defining_relations(const RepLabel& rep, double tol) {
  using numerics::matmul;
  using numerics::max_abs;

  const Matrix j0 = generator_matrix_d(GeneratorKind::J0, rep);
  const Matrix jp = generator_matrix_d(GeneratorKind::Jplus, rep);
  const Matrix jm = generator_matrix_d(GeneratorKind::Jminus, rep);
  const Matrix c = generator_matrix_d(GeneratorKind::C, rep);
  const Matrix p = generator_matrix_d(GeneratorKind::P, rep);
  const Matrix id = Matrix::identity(rep.dimension());

  auto comm = [](const Matrix& a, const Matrix& b) { return matmul(a, b) - matmul(b, a); };
  auto anti = [](const Matrix& a, const Matrix& b) { return matmul(a, b) + matmul(b, a); };

  VerificationReport report;
  auto add = [&](const std::string& name, double residual) {
    report.checks.push_back({name, residual, residual <= tol});
  };

  add("[J0,J+] = J+", max_abs(comm(j0, jp) - jp));
  add("[J0,J-] = -J-", max_abs(comm(j0, jm) + jm));
  const Matrix cp_minus_1 = matmul(c, p) - id;
  add("[J+,J-] = 2J0(CP-1)", max_abs(comm(jp, jm) - 2.0 * matmul(j0, cp_minus_1)));
  add("{P,J+} = 0", max_abs(anti(p, jp)));
  add("{P,J-} = 0", max_abs(anti(p, jm)));
  add("[P,J0] = 0", max_abs(comm(p, j0)));
  add("P^2 = I", max_abs(matmul(p, p) - id));
  add("[C,J0] = 0", max_abs(comm(c, j0)));
  add("[C,J+] = 0", max_abs(comm(c, jp)));
  add("[C,J-] = 0", max_abs(comm(c, jm)));
  add("[C,P] = 0", max_abs(comm(c, p)));

  const bool exact = exact_diagonal_identity(rep);
  report.checks.push_back({"[J+,J-] = 2J0(CP-1) exact diagonal", exact ? 0.0 : 1.0, exact});
  return report;
}

} // namespace su2cp::algebra
