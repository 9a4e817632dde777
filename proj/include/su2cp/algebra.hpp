#pragma once

#include "su2cp/numerics.hpp"
#include "su2cp/radical.hpp"

#include <string>
#include <vector>

namespace su2cp::algebra {

/// Label of an irreducible module: j must be a nonnegative integer
/// (half-integer labels do not carry a representation of this algebra).
class RepLabel {
public:
  explicit RepLabel(int j) : j_(j) {
    if (j < 0) throw std::domain_error("RepLabel: j must be nonnegative");
  }

  /// Builds from 2j, rejecting half-integer labels (odd two_j).
  static RepLabel from_two_j(int two_j) {
    if (two_j < 0 || two_j % 2 != 0)
      throw std::domain_error("RepLabel: j must be a nonnegative integer, not a half-integer");
    return RepLabel(two_j / 2);
  }

  int j() const { return j_; }
  int dimension() const { return 2 * j_ + 1; }

private:
  int j_;
};

/// Basis vector |j,m>, with -j <= m <= j.
struct BasisState {
  int j;
  int m;

  BasisState(int j_, int m_) : j(j_), m(m_) {
    if (j < 0 || m < -j || m > j) throw std::domain_error("BasisState: require -j <= m <= j");
  }
};

enum class GeneratorKind { J0, Jplus, Jminus, C, P };

/// One summand of a generator action: coefficient * |target>.
struct ActionTerm {
  Radical coefficient;
  BasisState target;
};

/// Action of a generator on a basis state. The result has at most one term;
/// vanishing coefficients and steps outside the band -j..j give the empty
/// action.
std::vector<ActionTerm> act(GeneratorKind g, const BasisState& s);

/// (2j+1)x(2j+1) matrix of a generator, rows and columns indexed by
/// m = -j..+j (row r corresponds to m = r - j).
numerics::MatrixT<Radical> generator_matrix(GeneratorKind g, const RepLabel& rep);

/// Same matrix converted entrywise to double.
numerics::Matrix generator_matrix_d(GeneratorKind g, const RepLabel& rep);

struct RelationCheck {
  std::string relation;
  double max_residual;
  bool pass;
};

struct VerificationReport {
  std::vector<RelationCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Checks the defining relations as matrix identities on the given module:
/// [J0,J+-] = +-J+-, [J+,J-] = 2J0(CP-1), {P,J+-} = 0, [P,J0] = 0, P^2 = I
/// and [C,X] = 0 for every generator X. Residuals are max-absolute-entry
/// norms in double precision; the diagonal identity [J+,J-] = 2J0(CP-1) is
/// additionally verified in exact integer arithmetic. Failures are reported,
/// never thrown.
VerificationReport verify_defining_relations(const RepLabel& rep, double tol);

/// Exact entrywise check of [J+,J-]|j,m> = 2m(2j(-1)^(j+m) - 1)|j,m>.
bool exact_diagonal_identity(const RepLabel& rep);

} // namespace su2cp::algebra
