#include "su2cp/oscillator.hpp"

#include "su2cp/hyper.hpp"

#include <cmath>
#include <stdexcept>

namespace su2cp::oscillator {

using numerics::ComplexMatrix;
using numerics::Matrix;
using numerics::matmul;
using numerics::max_abs;
using numerics::transpose;

ModelKind model_from_string(const std::string& name) {
  if (name == "su2") return ModelKind::su2;
  if (name == "sl21") return ModelKind::sl21;
  if (name == "su2cp") return ModelKind::su2cp;
  throw std::domain_error("unknown model '" + name + "' (expected su2, sl21 or su2cp)");
}

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::su2: return "su2";
    case ModelKind::sl21: return "sl21";
    case ModelKind::su2cp: return "su2cp";
  }
  return "?";
}

std::string to_string(Picture picture) {
  return picture == Picture::position ? "position" : "momentum";
}

double OscillatorModel::m_k(int k) const {
  const int j = rep_.j();
  if (k < 0 || k > 2 * j - 1) throw std::domain_error("m_k: require 0 <= k <= 2j-1");
  if (k % 2 != 0) return std::sqrt(static_cast<double>(k) * (k + 1));
  return std::sqrt(static_cast<double>(2 * j - k) * (2 * j - k - 1));
}

std::vector<double> OscillatorModel::offdiagonal() const {
  std::vector<double> off;
  off.reserve(static_cast<std::size_t>(2 * rep_.j()));
  for (int k = 0; k < 2 * rep_.j(); ++k) off.push_back(m_k(k));
  return off;
}

Matrix OscillatorModel::position_matrix() const {
  const int dim = dimension();
  Matrix m(dim, dim);
  for (int k = 0; k + 1 < dim; ++k) {
    m(k, k + 1) = m_k(k);
    m(k + 1, k) = m_k(k);
  }
  return m;
}

Matrix OscillatorModel::momentum_matrix() const {
  const int dim = dimension();
  Matrix m(dim, dim);
  for (int k = 0; k + 1 < dim; ++k) {
    m(k, k + 1) = m_k(k);
    m(k + 1, k) = -m_k(k);
  }
  return m;
}

Matrix OscillatorModel::hamiltonian_matrix() const {
  const int dim = dimension();
  Matrix m(dim, dim);
  for (int n = 0; n < dim; ++n) m(n, n) = n + 0.5;
  return m;
}

PositionGrid OscillatorModel::position_eigenvalues() const {
  const int j = rep_.j();
  std::vector<double> q(static_cast<std::size_t>(dimension()));
  for (int k = -j; k <= j; ++k) {
    const double mag = std::sqrt(static_cast<double>(std::abs(k)) * (2 * j - std::abs(k)));
    q[static_cast<std::size_t>(k + j)] = (k < 0) ? -mag : mag;
  }
  return PositionGrid{j, std::move(q)};
}

numerics::MatrixT<Radical> OscillatorModel::build_U_exact() const {
  const int j = rep_.j();
  const int dim = dimension();
  numerics::MatrixT<Radical> u(dim, dim);
  if (j == 0) {
    u(0, 0) = Radical(1, Rational(1));
    return u;
  }

  // Even rows 2i: built from K~_{2i}(.;1/2,2j). The middle column and the
  // two boundary columns carry their own normalization.
  for (int i = 0; i <= j; ++i) {
    const int row = 2 * i;
    const Radical row_sign(i % 2 == 0 ? 1 : -1, Rational(1));
    for (int k = 1; k <= j - 1; ++k) {
      const Radical v = row_sign * Radical::half_power_of_two(2L * (k - j)) *
                        hyper::tilde_krawtchouk(2 * i, k, 2 * j);
      u(row, j - k) = v;
      u(row, j + k) = v;
    }
    const Radical edge =
        row_sign * Radical::half_power_of_two(-1) * hyper::tilde_krawtchouk(2 * i, j, 2 * j);
    u(row, 0) = edge;
    u(row, 2 * j) = edge;
    u(row, j) = row_sign * Radical::half_power_of_two(-2L * j + 1) *
                hyper::tilde_krawtchouk(2 * i, 0, 2 * j);
  }

  // Odd rows 2i+1: built from K~_{2i}(.;1/2,2j-2), antisymmetric across the
  // middle column, which is zero.
  for (int i = 0; i <= j - 1; ++i) {
    const int row = 2 * i + 1;
    const Radical row_sign(i % 2 == 0 ? -1 : 1, Rational(1)); // (-1)^(i+1)
    for (int k = 1; k <= j - 1; ++k) {
      const Radical v = row_sign * Radical::half_power_of_two(2L * (k - j)) *
                        hyper::tilde_krawtchouk(2 * i, k - 1, 2 * j - 2);
      u(row, j - k) = v;
      u(row, j + k) = -v;
    }
    const Radical edge = row_sign * Radical::half_power_of_two(-1) *
                         hyper::tilde_krawtchouk(2 * i, j - 1, 2 * j - 2);
    u(row, 0) = edge;
    u(row, 2 * j) = -edge;
    // u(row, j) stays zero
  }
  return u;
}

SpectralData OscillatorModel::build_U() const {
  const int dim = dimension();
  const auto exact = build_U_exact();
  Matrix u(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) u(r, c) = exact(r, c).to_double();

  const auto grid = position_eigenvalues();
  std::vector<double> eps(grid.values);
  for (double& e : eps) e *= 2.0;

  const double ortho = max_abs(matmul(transpose(u), u) - Matrix::identity(dim));
  Matrix ud(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) ud(r, c) = u(r, c) * eps[static_cast<std::size_t>(c)];
  const double eigres = max_abs(matmul(position_matrix(), u) - ud);
  if (ortho >= 1e-10 || eigres >= 1e-10)
    throw std::runtime_error("build_U: verification contract violated");

  return SpectralData{std::move(eps), std::move(u)};
}

ComplexMatrix OscillatorModel::build_V() const {
  const auto spectral = build_U();
  const int dim = dimension();
  ComplexMatrix v(dim, dim);
  constexpr std::complex<double> iu(0.0, 1.0);
  const std::complex<double> phases[4] = {1.0, iu, -1.0, -iu};
  for (int k = 0; k < dim; ++k)
    for (int l = 0; l < dim; ++l) v(k, l) = phases[(k + 1) % 4] * spectral.U(k, l);
  return v;
}

std::vector<WavefunctionTable> OscillatorModel::position_wavefunctions() const {
  const auto spectral = build_U();
  const auto grid = position_eigenvalues();
  const int dim = dimension();
  std::vector<WavefunctionTable> tables;
  tables.reserve(static_cast<std::size_t>(dim));
  for (int n = 0; n < dim; ++n) {
    WavefunctionTable t{n, Picture::position, {}};
    t.entries.reserve(static_cast<std::size_t>(dim));
    for (int l = 0; l < dim; ++l)
      t.entries.emplace_back(grid.values[static_cast<std::size_t>(l)],
                             std::complex<double>(spectral.U(n, l), 0.0));
    tables.push_back(std::move(t));
  }
  return tables;
}

std::vector<WavefunctionTable> OscillatorModel::momentum_wavefunctions() const {
  const auto v = build_V();
  const auto grid = position_eigenvalues(); // p_k coincides with q_k
  const int dim = dimension();
  std::vector<WavefunctionTable> tables;
  tables.reserve(static_cast<std::size_t>(dim));
  for (int n = 0; n < dim; ++n) {
    WavefunctionTable t{n, Picture::momentum, {}};
    t.entries.reserve(static_cast<std::size_t>(dim));
    for (int l = 0; l < dim; ++l)
      t.entries.emplace_back(grid.values[static_cast<std::size_t>(l)], v(n, l));
    tables.push_back(std::move(t));
  }
  return tables;
}

ComplexMatrix OscillatorModel::cp_transform() const {
  const auto spectral = build_U();
  return matmul(numerics::to_complex(transpose(spectral.U)), build_V());
}

std::pair<double, double> OscillatorModel::heisenberg_residuals() const {
  // With H diagonal and real M^q, M^p, both complex residuals reduce to
  // real matrices: [H,q]+ip = ([H,M^q]+M^p)/2 and [H,p]-iq has the same
  // max-entry norm as ([H,M^p]+M^q)/2.
  const Matrix h = hamiltonian_matrix();
  const Matrix mq = position_matrix();
  const Matrix mp = momentum_matrix();
  auto comm = [](const Matrix& a, const Matrix& b) { return matmul(a, b) - matmul(b, a); };
  const double r1 = 0.5 * max_abs(comm(h, mq) + mp);
  const double r2 = 0.5 * max_abs(comm(h, mp) + mq);
  return {r1, r2};
}

std::vector<double> comparison_spectra(ModelKind kind, const RepLabel& rep) {
  const int j = rep.j();
  std::vector<double> q;
  q.reserve(static_cast<std::size_t>(2 * j + 1));
  switch (kind) {
    case ModelKind::su2:
      for (int k = -j; k <= j; ++k) q.push_back(k);
      return q;
    case ModelKind::sl21:
      for (int k = -j; k <= j; ++k) {
        const double mag = std::sqrt(static_cast<double>(std::abs(k)));
        q.push_back(k < 0 ? -mag : mag);
      }
      return q;
    case ModelKind::su2cp:
      return OscillatorModel(rep).position_eigenvalues().values;
  }
  throw std::domain_error("comparison_spectra: unknown model");
}

} // namespace su2cp::oscillator
