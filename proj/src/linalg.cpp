#include "groupent/linalg.hpp"

#include <cmath>

#include "groupent/error.hpp"

namespace groupent {

HermitianSpectrum hermitian_spectrum(const Matrix& a) {
  if (a.rows() != a.cols()) throw ShapeMismatch("hermitian_spectrum: matrix is not square");
  if (a.rows() == 0) return {};
  const Matrix h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success) throw Error("hermitian_spectrum: eigensolver failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

double min_hermitian_eigenvalue(const Matrix& a) {
  if (a.rows() == 0) return 0.0;
  if (a.rows() == 1) return a(0, 0).real();
  const Matrix h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error("min_hermitian_eigenvalue: eigensolver failed");
  return solver.eigenvalues()(0);
}

double antihermitian_norm(const Matrix& a) { return (0.5 * (a - a.adjoint())).norm(); }

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix partial_transpose(const Matrix& x, int n, int m) {
  if (x.rows() != n * m || x.cols() != n * m) {
    throw ShapeMismatch("partial_transpose: matrix shape does not match n*m");
  }
  Matrix out(x.rows(), x.cols());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) out(i * m + k, j * m + l) = x(i * m + l, j * m + k);
  return out;
}

Vector vec_row_major(const Matrix& x) {
  Vector v(x.size());
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j) v(i * x.cols() + j) = x(i, j);
  return v;
}

Matrix unvec_row_major(const Vector& v, int rows, int cols) {
  if (v.size() != static_cast<Eigen::Index>(rows) * cols) {
    throw ShapeMismatch("unvec_row_major: length does not match shape");
  }
  Matrix x(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) x(i, j) = v(i * cols + j);
  return x;
}

int exact_sqrt(std::ptrdiff_t n) {
  const auto r = static_cast<std::ptrdiff_t>(std::llround(std::sqrt(static_cast<double>(n))));
  if (r * r != n) throw ShapeMismatch("super-operator side is not a perfect square");
  return static_cast<int>(r);
}

Matrix apply_superoperator(const Matrix& superop, const Matrix& x) {
  const int n_out = exact_sqrt(superop.rows());
  const int n_in = exact_sqrt(superop.cols());
  if (x.rows() != n_in || x.cols() != n_in) {
    throw ShapeMismatch("apply_superoperator: operand does not match super-operator input dimension");
  }
  return unvec_row_major(superop * vec_row_major(x), n_out, n_out);
}

Matrix apply_superoperator_extended(const Matrix& superop, const Matrix& x, int b_dim) {
  const int n_out = exact_sqrt(superop.rows());
  const int n_in = exact_sqrt(superop.cols());
  if (x.rows() != b_dim * n_in || x.cols() != b_dim * n_in) {
    throw ShapeMismatch("apply_superoperator_extended: operand shape mismatch");
  }
  Matrix out = Matrix::Zero(b_dim * n_out, b_dim * n_out);
  for (int a = 0; a < b_dim; ++a) {
    for (int c = 0; c < b_dim; ++c) {
      const Matrix sub = x.block(a * n_in, c * n_in, n_in, n_in);
      out.block(a * n_out, c * n_out, n_out, n_out) = apply_superoperator(superop, sub);
    }
  }
  return out;
}

Matrix choi_matrix(const Matrix& superop) {
  const int n_out = exact_sqrt(superop.rows());
  const int n_in = exact_sqrt(superop.cols());
  Matrix choi = Matrix::Zero(n_in * n_out, n_in * n_out);
  for (int k = 0; k < n_in; ++k) {
    for (int l = 0; l < n_in; ++l) {
      const Matrix image = unvec_row_major(superop.col(k * n_in + l), n_out, n_out);
      choi.block(k * n_out, l * n_out, n_out, n_out) = image;
    }
  }
  return choi;
}

int numerical_rank(const Matrix& a, double relative_cutoff) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(a);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > relative_cutoff * s(0)) ++rank;
  return rank;
}

}  // namespace groupent
