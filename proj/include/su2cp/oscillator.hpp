#pragma once

#include "su2cp/algebra.hpp"
#include "su2cp/numerics.hpp"
#include "su2cp/radical.hpp"

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace su2cp::oscillator {

using algebra::RepLabel;

enum class ModelKind { su2, sl21, su2cp };
enum class Picture { position, momentum };

ModelKind model_from_string(const std::string& name);
std::string to_string(ModelKind kind);
std::string to_string(Picture picture);

/// The 2j+1 position eigenvalues q_k = sign(k) sqrt(|k| (2j - |k|)),
/// k = -j..+j, stored ascending.
struct PositionGrid {
  int j;
  std::vector<double> values;

  double q(int k) const {
    if (k < -j || k > j) throw std::domain_error("PositionGrid: index out of range");
    return values[static_cast<std::size_t>(k + j)];
  }
};

/// Spectral decomposition of the doubled position operator M^q: eigenvalues
/// ascending (the diagonal of D^q, equal to twice the position grid) and the
/// orthogonal eigenvector matrix U.
struct SpectralData {
  std::vector<double> eigenvalues;
  numerics::Matrix U;
};

struct WavefunctionTable {
  int n;
  Picture picture;
  std::vector<std::pair<double, std::complex<double>>> entries; ///< (grid value, amplitude)
};

/// The finite oscillator model on the module labelled by rep. All builders
/// are pure; matrices have size 2j+1.
class OscillatorModel {
public:
  explicit OscillatorModel(RepLabel rep) : rep_(rep) {}

  int j() const { return rep_.j(); }
  int dimension() const { return rep_.dimension(); }
  const RepLabel& rep() const { return rep_; }

  /// Off-diagonal entry of M^q: sqrt(k(k+1)) for odd k,
  /// sqrt((2j-k)(2j-k-1)) for even k; 0 <= k <= 2j-1.
  double m_k(int k) const;

  /// All off-diagonal entries M_0 .. M_{2j-1}.
  std::vector<double> offdiagonal() const;

  /// M^q = 2 q_hat: symmetric tridiagonal, zero diagonal.
  numerics::Matrix position_matrix() const;

  /// M^p = 2i p_hat: superdiagonal M_k, subdiagonal -M_k (real matrix).
  numerics::Matrix momentum_matrix() const;

  /// diag(n + 1/2), n = 0..2j.
  numerics::Matrix hamiltonian_matrix() const;

  PositionGrid position_eigenvalues() const;

  /// Builds U from the orthonormal symmetric Krawtchouk functions, exactly;
  /// entries are radicals until the final conversion.
  numerics::MatrixT<Radical> build_U_exact() const;

  /// build_U_exact converted to double, with eigenvalues ascending. Checks
  /// ||U^T U - I|| < 1e-10 and ||M^q U - U D^q|| < 1e-10 before returning
  /// and throws std::runtime_error if either fails.
  SpectralData build_U() const;

  /// V_{k,l} = i^(k+1) U_{k,l}; the eigenvector matrix of the momentum
  /// operator on the same grid.
  numerics::ComplexMatrix build_V() const;

  std::vector<WavefunctionTable> position_wavefunctions() const;
  std::vector<WavefunctionTable> momentum_wavefunctions() const;

  /// The CP Krawtchouk transform K = U^T V, a unitary matrix mapping
  /// position wavefunctions to momentum wavefunctions.
  numerics::ComplexMatrix cp_transform() const;

  /// Max-entry residuals of [H, q_hat] + i p_hat and [H, p_hat] - i q_hat.
  std::pair<double, double> heisenberg_residuals() const;

private:
  RepLabel rep_;
};

/// Position spectra of the three finite oscillator models, ascending:
/// su2 -> integers -j..j, sl21 -> 0, +-sqrt(1) .. +-sqrt(j),
/// su2cp -> position_eigenvalues.
std::vector<double> comparison_spectra(ModelKind kind, const RepLabel& rep);

} // namespace su2cp::oscillator
