#pragma once

#include "su2cp/rational.hpp"

#include <string>
#include <vector>

namespace su2cp::checks {

/// Outcome of one verification suite. Exact suites count mismatches in
/// `failures`; floating-point suites additionally record the worst residual
/// seen across the sweep.
struct CheckResult {
  std::string name;
  long cases = 0;
  long failures = 0;
  double max_residual = 0.0;
  bool pass = false;
  std::string detail; ///< description of the first failure, empty when clean
};

// Exact-arithmetic suites over the Krawtchouk kernel. All equalities are
// checked as rationals; a single mismatch is a failure.
CheckResult check_symmetry(int max_size);
CheckResult check_standard_orthogonality(int max_size, const std::vector<Rational>& ps);
CheckResult check_printed_weight_counterexample();
CheckResult check_difference_equation_first(int max_j);
CheckResult check_difference_equation_second(int max_j);
CheckResult check_2f1_3f2_reduction(int max_j);
CheckResult check_3f2_contiguous_first(int max_j);
CheckResult check_3f2_contiguous_second(int max_j);
CheckResult check_even_point_orthogonality(int max_size);

// Floating-point suites over the algebra and the oscillator.
CheckResult check_algebra_relations(int max_j, double tol);
CheckResult check_algebra_exact_diagonal(int max_j);
CheckResult check_u_orthogonality(int max_j, double tol);
/// Residual of M^q U = U D^q. corrupt_mk, when nonzero, is added to the
/// first off-diagonal entry of M^q before the check (debug hook for
/// exercising the failure path).
CheckResult check_eigenvector_residual(int max_j, double tol, double corrupt_mk = 0.0);
CheckResult check_eigenvalues_against_oracle(int max_j, double tol);
CheckResult check_eigenvectors_against_oracle(int max_j, double per_entry_tol);
CheckResult check_heisenberg(int max_j, double tol);
CheckResult check_momentum_eigenrelation(int max_j, double tol);
CheckResult check_wavefunction_norms_and_parity(int max_j, double tol);
CheckResult check_transform(int max_j, double tol);

struct VerifySummary {
  std::vector<CheckResult> results;
  bool all_pass = false;
};

/// Runs every suite: float checks for j <= j_max at the given tolerance,
/// exact identity checks for j <= exact_j_max.
VerifySummary run_all(int j_max, int exact_j_max, double tol, double corrupt_mk = 0.0);

} // namespace su2cp::checks
