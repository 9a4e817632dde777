#include "su2cp/checks.hpp"

#include "su2cp/algebra.hpp"
#include "su2cp/hyper.hpp"
#include "su2cp/numerics.hpp"
#include "su2cp/oscillator.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

namespace su2cp::checks {

namespace {

using hyper::krawtchouk;
using numerics::ComplexMatrix;
using numerics::matmul;
using numerics::Matrix;
using numerics::max_abs;
using numerics::transpose;

const Rational kHalf(1, 2);

/// 3F2(-n, n, x_param; 1/2, lower2; 1), summed to the earliest terminating
/// upper parameter (min of |n| and |x_param|).
Rational f32(long n, long x_param, long lower2) {
  const long kmax = std::min(std::abs(n), -x_param);
  return hyper::detail::terminating_series({Rational(-n), Rational(n), Rational(x_param)},
                                           {kHalf, Rational(lower2)}, Rational(1), kmax);
}

void record_failure(CheckResult& r, const std::string& what) {
  ++r.failures;
  if (r.detail.empty()) r.detail = what;
}

std::string case_tag(long j, long n, long x) {
  std::ostringstream os;
  os << "j=" << j << " n=" << n << " x=" << x;
  return os.str();
}

std::string pair_tag(long size, long n, long np) {
  std::ostringstream os;
  os << "N=" << size << " n=" << n << " n'=" << np;
  return os.str();
}

void finish(CheckResult& r) { r.pass = (r.failures == 0); }

void finish_float(CheckResult& r, double tol) {
  if (r.max_residual > tol) {
    ++r.failures;
    if (r.detail.empty()) {
      std::ostringstream os;
      os << "max residual " << r.max_residual << " exceeds tolerance " << tol;
      r.detail = os.str();
    }
  }
  r.pass = (r.failures == 0);
}

} // namespace

CheckResult check_symmetry(int max_size) {
  CheckResult r{"symmetric Krawtchouk reflection", 0, 0, 0.0, false, ""};
  for (long N = 0; N <= max_size; ++N)
    for (long n = 0; n <= N; ++n)
      for (long x = 0; x <= N; ++x) {
        ++r.cases;
        const Rational lhs = krawtchouk(n, x, kHalf, N);
        const Rational rhs = krawtchouk(n, N - x, kHalf, N);
        if (lhs != (n % 2 == 0 ? rhs : -rhs))
          record_failure(r, "N=" + std::to_string(N) + " n=" + std::to_string(n) +
                                " x=" + std::to_string(x));
      }
  finish(r);
  return r;
}

CheckResult check_standard_orthogonality(int max_size, const std::vector<Rational>& ps) {
  CheckResult r{"standard-weight orthogonality", 0, 0, 0.0, false, ""};
  for (const auto& p : ps)
    for (long N = 0; N <= max_size; ++N) {
      // table of polynomial values, then the quadratic sums
      std::vector<std::vector<Rational>> K(N + 1, std::vector<Rational>(N + 1));
      std::vector<Rational> w(N + 1);
      for (long x = 0; x <= N; ++x) {
        w[x] = hyper::weight_standard(x, p, N);
        for (long n = 0; n <= N; ++n) K[n][x] = krawtchouk(n, x, p, N);
      }
      for (long n = 0; n <= N; ++n)
        for (long np = n; np <= N; ++np) {
          ++r.cases;
          Rational sum = 0;
          for (long x = 0; x <= N; ++x) sum += w[x] * K[n][x] * K[np][x];
          const Rational expected = (n == np) ? hyper::norm_h(n, p, N) : Rational(0);
          if (sum != expected) record_failure(r, pair_tag(N, n, np) + " p=" + p.str());
        }
    }
  finish(r);
  return r;
}

CheckResult check_printed_weight_counterexample() {
  CheckResult r{"printed-weight orthogonality counterexample", 1, 0, 0.0, false, ""};
  // With the printed weight the orthogonality relation must NOT hold at
  // N=2, n=0, n'=1, p=1/2; asserting the inequality documents the reading.
  Rational sum = 0;
  for (long x = 0; x <= 2; ++x)
    sum += hyper::weight_printed(x, kHalf, 2) * krawtchouk(0, x, kHalf, 2) *
           krawtchouk(1, x, kHalf, 2);
  if (sum == Rational(0))
    record_failure(r, "printed weight unexpectedly satisfies orthogonality at N=2, n=0, n'=1");
  finish(r);
  return r;
}

CheckResult check_difference_equation_first(int max_j) {
  CheckResult r{"Krawtchouk difference equation (first form)", 0, 0, 0.0, false, ""};
  for (long j = 1; j <= max_j; ++j)
    for (long x = 0; x <= j - 1; ++x)
      for (long n = 1 - j; n <= j - 1; ++n) {
        ++r.cases;
        const Rational lhs =
            Rational(j * (2 * j - 1)) * krawtchouk(j + n, 2 * (x + 1), kHalf, 2 * j);
        Rational rhs = Rational(-(x + 1) * (2 * x + 1)) *
                       krawtchouk(j + n - 1, 2 * x, kHalf, 2 * (j - 1));
        const Rational c2((j - x - 1) * (2 * j - 2 * x - 3));
        if (!c2.is_zero())
          rhs += c2 * krawtchouk(j + n - 1, 2 * (x + 1), kHalf, 2 * (j - 1));
        if (lhs != rhs) record_failure(r, case_tag(j, n, x));
      }
  finish(r);
  return r;
}

CheckResult check_difference_equation_second(int max_j) {
  CheckResult r{"Krawtchouk difference equation (second form)", 0, 0, 0.0, false, ""};
  for (long j = 1; j <= max_j; ++j)
    for (long x = 0; x <= j - 1; ++x)
      for (long n = 1 - j; n <= j - 1; ++n) {
        ++r.cases;
        const Rational lhs = Rational(2 * (j + n) * (j - n)) *
                             krawtchouk(j + n - 1, 2 * x, kHalf, 2 * (j - 1));
        const Rational rhs =
            Rational(j * (2 * j - 1)) * (krawtchouk(j + n, 2 * x, kHalf, 2 * j) -
                                         krawtchouk(j + n, 2 * (x + 1), kHalf, 2 * j));
        if (lhs != rhs) record_failure(r, case_tag(j, n, x));
      }
  finish(r);
  return r;
}

CheckResult check_2f1_3f2_reduction(int max_j) {
  CheckResult r{"2F1-to-3F2 reduction", 0, 0, 0.0, false, ""};
  for (long j = 0; j <= max_j; ++j)
    for (long x = 0; x <= j; ++x)
      for (long n = -j; n <= j; ++n) {
        ++r.cases;
        const Rational lhs =
            hyper::hyp2f1_terminating(-2 * x, Rational(-(j + n)), Rational(-2 * j), Rational(2));
        const Rational sign = (x % 2 == 0) ? 1 : -1;
        const Rational rhs =
            sign * hyper::binomial(j, x) / hyper::binomial(2 * j, 2 * x) * f32(n, -x, -j);
        if (lhs != rhs) record_failure(r, case_tag(j, n, x));
      }
  finish(r);
  return r;
}

CheckResult check_3f2_contiguous_first(int max_j) {
  CheckResult r{"3F2 contiguous identity (first form)", 0, 0, 0.0, false, ""};
  for (long j = 1; j <= max_j; ++j)
    for (long n = -j; n <= j; ++n)
      for (long x = 0; x <= j - 1; ++x) {
        ++r.cases;
        const Rational lhs = Rational(j) * f32(n, -x - 1, -j);
        Rational rhs = Rational(x + 1) * f32(n, -x, -j + 1);
        const Rational c2(x - j + 1);
        if (!c2.is_zero()) {
          rhs -= c2 * f32(n, -x - 1, -j + 1);
        } else if (std::abs(n) == j) {
          // At x = j-1, |n| = j the vanishing coefficient multiplies a series
          // with a simple pole (its k = j term divides by (1-j)_j = 0); the
          // product has a finite limit along continuous j, and only that
          // reading makes the identity hold over the whole box. Limit term:
          // (-1)^j/(j-1)! * (-n)_j (n)_j (-x-1)_j / ((1/2)_j j!).
          const Rational sign = (j % 2 == 0) ? 1 : -1;
          rhs += sign / hyper::pochhammer(1, j - 1) * hyper::pochhammer(Rational(-n), j) *
                 hyper::pochhammer(Rational(n), j) * hyper::pochhammer(Rational(-x - 1), j) /
                 (hyper::pochhammer(kHalf, j) * hyper::pochhammer(1, j));
        }
        if (lhs != rhs) record_failure(r, case_tag(j, n, x));
      }
  finish(r);
  return r;
}

CheckResult check_3f2_contiguous_second(int max_j) {
  CheckResult r{"3F2 contiguous identity (second form)", 0, 0, 0.0, false, ""};
  for (long j = 1; j <= max_j; ++j)
    for (long n = -j; n <= j; ++n)
      for (long x = 0; x <= j - 1; ++x) {
        ++r.cases;
        const Rational c_lhs = Rational(j * j - n * n) / Rational(j);
        const Rational lhs = c_lhs.is_zero() ? Rational(0) : c_lhs * f32(n, -x, -j + 1);
        const Rational rhs = (Rational(x) + kHalf) * f32(n, -x - 1, -j) -
                             (Rational(x - j) + kHalf) * f32(n, -x, -j);
        if (lhs != rhs) record_failure(r, case_tag(j, n, x));
      }
  finish(r);
  return r;
}

CheckResult check_even_point_orthogonality(int max_size) {
  CheckResult r{"even-point Krawtchouk orthogonality", 0, 0, 0.0, false, ""};
  for (long N = 0; N <= max_size; ++N) {
    std::vector<std::vector<Rational>> K(N + 1, std::vector<Rational>(N + 1));
    for (long n = 0; n <= N; ++n)
      for (long x = 0; x <= N; ++x) K[n][x] = krawtchouk(n, 2 * x, kHalf, 2 * N);
    const Rational scale = Rational(2).pow(1 - 2 * N);
    for (long n = 0; n <= N; ++n)
      for (long np = n; np <= N; ++np) {
        ++r.cases;
        Rational sum = 0;
        for (long x = 0; x <= N; ++x)
          sum += scale * hyper::binomial(2 * N, n) * hyper::binomial(2 * N, 2 * x) * K[n][x] *
                 K[np][x];
        Rational expected = 0;
        if (n == np) expected = (n == N) ? Rational(2) : Rational(1);
        if (sum != expected) record_failure(r, pair_tag(N, n, np));
      }
  }
  finish(r);
  return r;
}

CheckResult check_algebra_relations(int max_j, double tol) {
  CheckResult r{"algebra defining relations", 0, 0, 0.0, false, ""};
  for (int j = 0; j <= max_j; ++j) {
    const auto report = algebra::verify_defining_relations(algebra::RepLabel(j), tol);
    for (const auto& c : report.checks) {
      ++r.cases;
      r.max_residual = std::max(r.max_residual, c.max_residual);
      if (!c.pass) record_failure(r, c.relation + " at j=" + std::to_string(j));
    }
  }
  finish(r);
  return r;
}

CheckResult check_algebra_exact_diagonal(int max_j) {
  CheckResult r{"commutator diagonal identity (exact integers)", 0, 0, 0.0, false, ""};
  for (int j = 0; j <= max_j; ++j) {
    ++r.cases;
    if (!algebra::exact_diagonal_identity(algebra::RepLabel(j)))
      record_failure(r, "j=" + std::to_string(j));
  }
  finish(r);
  return r;
}

CheckResult check_u_orthogonality(int max_j, double tol) {
  CheckResult r{"U orthogonality (U^T U - I)", 0, 0, 0.0, false, ""};
  for (int j = 0; j <= max_j; ++j) {
    ++r.cases;
    const auto s = oscillator::OscillatorModel(algebra::RepLabel(j)).build_U();
    const double res =
        max_abs(matmul(transpose(s.U), s.U) - Matrix::identity(s.U.rows()));
    r.max_residual = std::max(r.max_residual, res);
  }
  finish_float(r, tol);
  return r;
}

CheckResult check_eigenvector_residual(int max_j, double tol, double corrupt_mk) {
  CheckResult r{"position eigenvector residual (M^q U - U D^q)", 0, 0, 0.0, false, ""};
  for (int j = 0; j <= max_j; ++j) {
    ++r.cases;
    const oscillator::OscillatorModel model{algebra::RepLabel(j)};
    const auto s = model.build_U();
    Matrix mq = model.position_matrix();
    if (corrupt_mk != 0.0 && mq.rows() >= 2) {
      mq(0, 1) += corrupt_mk;
      mq(1, 0) += corrupt_mk;
    }
    Matrix ud(s.U.rows(), s.U.cols());
    for (int a = 0; a < s.U.rows(); ++a)
      for (int b = 0; b < s.U.cols(); ++b) ud(a, b) = s.U(a, b) * s.eigenvalues[b];
    r.max_residual = std::max(r.max_residual, max_abs(matmul(mq, s.U) - ud));
  }
  finish_float(r, tol);
  return r;
}

CheckResult check_eigenvalues_against_oracle(int max_j, double tol) {
  CheckResult r{"position spectrum vs oracle eigensolver", 0, 0, 0.0, false, ""};
  const double oracle_tol = std::max(1e-15, tol / 16.0);
  for (int j = 1; j <= max_j; ++j) {
    ++r.cases;
    const oscillator::OscillatorModel model{algebra::RepLabel(j)};
    const numerics::SymTridiag t(std::vector<double>(model.dimension(), 0.0),
                                 model.offdiagonal());
    const auto oracle = numerics::eigh_tridiagonal(t, oracle_tol);
    if (!oracle) {
      record_failure(r, "oracle eigensolver failed to converge at j=" + std::to_string(j));
      continue;
    }
    const auto s = model.build_U();
    for (int l = 0; l < model.dimension(); ++l)
      r.max_residual =
          std::max(r.max_residual, std::abs(oracle->eigenvalues[l] - s.eigenvalues[l]));
  }
  finish_float(r, tol);
  return r;
}

CheckResult check_eigenvectors_against_oracle(int max_j, double per_entry_tol) {
  CheckResult r{"position eigenvectors vs oracle eigensolver", 0, 0, 0.0, false, ""};
  for (int j = 1; j <= max_j; ++j) {
    ++r.cases;
    const oscillator::OscillatorModel model{algebra::RepLabel(j)};
    const numerics::SymTridiag t(std::vector<double>(model.dimension(), 0.0),
                                 model.offdiagonal());
    const auto oracle = numerics::eigh_tridiagonal(t, 1e-12);
    if (!oracle) {
      record_failure(r, "oracle eigensolver failed to converge at j=" + std::to_string(j));
      continue;
    }
    const auto s = model.build_U();
    const int dim = model.dimension();
    for (int l = 0; l < dim; ++l) {
      // eigenvectors are defined up to sign: align on the first solid entry
      double colmax = 0.0;
      for (int i = 0; i < dim; ++i) colmax = std::max(colmax, std::abs(s.U(i, l)));
      int anchor = 0;
      while (anchor < dim && std::abs(s.U(anchor, l)) <= 0.1 * colmax) ++anchor;
      const double flip =
          (s.U(anchor, l) * oracle->vectors(anchor, l) < 0.0) ? -1.0 : 1.0;
      for (int i = 0; i < dim; ++i)
        r.max_residual = std::max(r.max_residual,
                                  std::abs(s.U(i, l) - flip * oracle->vectors(i, l)));
    }
  }
  finish_float(r, per_entry_tol);
  return r;
}

CheckResult check_heisenberg(int max_j, double tol) {
  CheckResult r{"Heisenberg equations residual", 0, 0, 0.0, false, ""};
  for (int j = 0; j <= max_j; ++j) {
    ++r.cases;
    const auto [r1, r2] =
        oscillator::OscillatorModel(algebra::RepLabel(j)).heisenberg_residuals();
    r.max_residual = std::max({r.max_residual, r1, r2});
  }
  finish_float(r, tol);
  return r;
}

CheckResult check_momentum_eigenrelation(int max_j, double tol) {
  CheckResult r{"momentum eigen-relation (p_hat V = V diag(q))", 0, 0, 0.0, false, ""};
  constexpr std::complex<double> minus_i_over_2(0.0, -0.5);
  for (int j = 0; j <= max_j; ++j) {
    ++r.cases;
    const oscillator::OscillatorModel model{algebra::RepLabel(j)};
    const auto v = model.build_V();
    const auto grid = model.position_eigenvalues();
    const ComplexMatrix phat = minus_i_over_2 * numerics::to_complex(model.momentum_matrix());
    ComplexMatrix vq(v.rows(), v.cols());
    for (int a = 0; a < v.rows(); ++a)
      for (int b = 0; b < v.cols(); ++b) vq(a, b) = v(a, b) * grid.values[b];
    r.max_residual = std::max(r.max_residual, max_abs(matmul(phat, v) - vq));
  }
  finish_float(r, tol);
  return r;
}

CheckResult check_wavefunction_norms_and_parity(int max_j, double tol) {
  CheckResult r{"wavefunction normalization and parity", 0, 0, 0.0, false, ""};
  for (int j = 0; j <= max_j; ++j) {
    const oscillator::OscillatorModel model{algebra::RepLabel(j)};
    const int dim = model.dimension();
    for (const auto& tables : {model.position_wavefunctions(), model.momentum_wavefunctions()}) {
      for (const auto& t : tables) {
        ++r.cases;
        double norm = 0.0;
        for (const auto& [q, amp] : t.entries) norm += std::norm(amp);
        r.max_residual = std::max(r.max_residual, std::abs(norm - 1.0));
        // parity: amplitude at -q is (-1)^n times the one at +q
        const double sign = (t.n % 2 == 0) ? 1.0 : -1.0;
        for (int l = 0; l < dim; ++l) {
          const auto diff = t.entries[l].second - sign * t.entries[dim - 1 - l].second;
          r.max_residual = std::max(r.max_residual, std::abs(diff));
        }
      }
    }
  }
  finish_float(r, tol);
  return r;
}

CheckResult check_transform(int max_j, double tol) {
  CheckResult r{"CP Krawtchouk transform unitarity and application", 0, 0, 0.0, false, ""};
  for (int j = 0; j <= max_j; ++j) {
    ++r.cases;
    const oscillator::OscillatorModel model{algebra::RepLabel(j)};
    const auto k = model.cp_transform();
    const int dim = model.dimension();
    const auto id = numerics::to_complex(Matrix::identity(dim));
    r.max_residual =
        std::max(r.max_residual, max_abs(matmul(numerics::conjugate_transpose(k), k) - id));
    // applying the transform to every position wavefunction must reproduce
    // the momentum one: U K = V entrywise
    const auto s = model.build_U();
    r.max_residual = std::max(
        r.max_residual, max_abs(matmul(numerics::to_complex(s.U), k) - model.build_V()));
  }
  finish_float(r, tol);
  return r;
}

VerifySummary run_all(int j_max, int exact_j_max, double tol, double corrupt_mk) {
  VerifySummary summary;
  auto& out = summary.results;

  out.push_back(check_algebra_relations(j_max, tol));
  out.push_back(check_algebra_exact_diagonal(j_max));
  out.push_back(check_u_orthogonality(j_max, tol));
  out.push_back(check_eigenvector_residual(j_max, tol, corrupt_mk));
  out.push_back(check_eigenvalues_against_oracle(j_max, tol));
  out.push_back(check_eigenvectors_against_oracle(j_max, 1e-8));
  out.push_back(check_heisenberg(j_max, tol));
  out.push_back(check_momentum_eigenrelation(j_max, tol));
  out.push_back(check_wavefunction_norms_and_parity(j_max, std::max(tol, 1e-12)));
  out.push_back(check_transform(j_max, std::max(tol, 1e-12)));

  out.push_back(check_difference_equation_first(exact_j_max));
  out.push_back(check_difference_equation_second(exact_j_max));
  out.push_back(check_2f1_3f2_reduction(exact_j_max));
  out.push_back(check_3f2_contiguous_first(exact_j_max));
  out.push_back(check_3f2_contiguous_second(exact_j_max));
  out.push_back(check_even_point_orthogonality(exact_j_max));
  out.push_back(check_symmetry(2 * exact_j_max));
  out.push_back(check_standard_orthogonality(2 * exact_j_max,
                                             {Rational(1, 2), Rational(1, 3), Rational(3, 4)}));
  out.push_back(check_printed_weight_counterexample());

  summary.all_pass = true;
  for (const auto& c : out) summary.all_pass = summary.all_pass && c.pass;
  return summary;
}

} // namespace su2cp::checks
