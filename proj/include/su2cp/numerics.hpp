#pragma once

#include <algorithm>
#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

namespace su2cp::numerics {

/// Dense row-major matrix over an arbitrary value type.
template <typename T>
class MatrixT {
public:
  MatrixT() : rows_(0), cols_(0) {}
  MatrixT(int rows, int cols, T init = T{})
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, init) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("MatrixT: negative dimension");
  }

  static MatrixT identity(int n) {
    MatrixT m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const T& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

private:
  int rows_, cols_;
  std::vector<T> a_;
};

using Matrix = MatrixT<double>;
using ComplexMatrix = MatrixT<std::complex<double>>;

template <typename T>
MatrixT<T> matmul(const MatrixT<T>& a, const MatrixT<T>& b) {
  if (a.cols() != b.rows()) throw std::domain_error("matmul: shape mismatch");
  MatrixT<T> c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const T aik = a(i, k);
      for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

template <typename T>
MatrixT<T> transpose(const MatrixT<T>& a) {
  MatrixT<T> t(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

template <typename T>
MatrixT<T> operator+(const MatrixT<T>& a, const MatrixT<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::domain_error("matrix sum: shape mismatch");
  MatrixT<T> c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

template <typename T>
MatrixT<T> operator-(const MatrixT<T>& a, const MatrixT<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::domain_error("matrix difference: shape mismatch");
  MatrixT<T> c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

template <typename T>
MatrixT<T> operator*(const T& s, const MatrixT<T>& a) {
  MatrixT<T> c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
  return c;
}

inline double max_abs(const Matrix& a) {
  double m = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j)));
  return m;
}

inline double max_abs(const ComplexMatrix& a) {
  double m = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j)));
  return m;
}

inline ComplexMatrix to_complex(const Matrix& a) {
  ComplexMatrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  return c;
}

inline ComplexMatrix conjugate_transpose(const ComplexMatrix& a) {
  ComplexMatrix t(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) t(j, i) = std::conj(a(i, j));
  return t;
}

/// Real symmetric tridiagonal matrix given by its diagonal and off-diagonal.
struct SymTridiag {
  std::vector<double> diagonal;
  std::vector<double> offdiagonal;

  SymTridiag(std::vector<double> diag, std::vector<double> off)
      : diagonal(std::move(diag)), offdiagonal(std::move(off)) {
    if (diagonal.empty()) throw std::invalid_argument("SymTridiag: empty diagonal");
    if (offdiagonal.size() + 1 != diagonal.size())
      throw std::invalid_argument("SymTridiag: size mismatch between diagonal and offdiagonal");
  }

  int size() const { return static_cast<int>(diagonal.size()); }

  Matrix to_dense() const {
    Matrix m(size(), size());
    for (int i = 0; i < size(); ++i) m(i, i) = diagonal[i];
    for (int i = 0; i + 1 < size(); ++i) {
      m(i, i + 1) = offdiagonal[i];
      m(i + 1, i) = offdiagonal[i];
    }
    return m;
  }
};

struct EigenResult {
  std::vector<double> eigenvalues; ///< ascending
  Matrix vectors;                  ///< orthonormal columns, vectors(:,k) <-> eigenvalues[k]
};

/// Number of eigenvalues of t strictly below sigma, from the Sturm sequence
/// sign count of the shifted LDL^T recurrence.
int sturm_count_below(const SymTridiag& t, double sigma);

/// Eigendecomposition by Sturm-sequence bisection (eigenvalues) and inverse
/// iteration with reorthogonalization of near-degenerate clusters
/// (eigenvectors). Deliberately independent of any closed-form knowledge of
/// the matrices it is applied to. Returns nullopt if inverse iteration fails
/// to converge within its iteration cap.
std::optional<EigenResult> eigh_tridiagonal(const SymTridiag& t, double tol);

} // namespace su2cp::numerics
