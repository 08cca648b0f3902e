#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace groupent {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Eigen-decomposition of the Hermitian part (A + A†)/2, eigenvalues ascending.
struct HermitianSpectrum {
  RealVector values;
  Matrix vectors;
};

HermitianSpectrum hermitian_spectrum(const Matrix& a);

/// Smallest eigenvalue of the Hermitian part of a square matrix.
double min_hermitian_eigenvalue(const Matrix& a);

/// Frobenius norm of the anti-Hermitian part, ‖(A − A†)/2‖_F.
double antihermitian_norm(const Matrix& a);

Matrix kron(const Matrix& a, const Matrix& b);

/// Partial transpose on the second tensor factor of an (n·m)×(n·m) matrix
/// laid out as rows (i,k) ↦ i·m + k.
Matrix partial_transpose(const Matrix& x, int n, int m);

/// Row-major vectorization of a square matrix, entry (i,j) at i·cols + j.
Vector vec_row_major(const Matrix& x);
Matrix unvec_row_major(const Vector& v, int rows, int cols);

/// Apply a super-operator stored as a (n_out²)×(n_in²) matrix in the
/// row-major operator basis.
Matrix apply_superoperator(const Matrix& superop, const Matrix& x);

/// (1_b ⊗ Φ)(X) for X acting on C^b ⊗ C^{n_in}; result acts on C^b ⊗ C^{n_out}.
Matrix apply_superoperator_extended(const Matrix& superop, const Matrix& x, int b_dim);

/// Choi matrix Σ_kl E_kl ⊗ Φ(E_kl) of a super-operator with input dimension n_in.
Matrix choi_matrix(const Matrix& superop);

/// Integer square root of a perfect square; throws when not a square.
int exact_sqrt(std::ptrdiff_t n);

/// Numerical rank: number of singular values above cutoff·σ_max.
int numerical_rank(const Matrix& a, double relative_cutoff);

}  // namespace groupent
