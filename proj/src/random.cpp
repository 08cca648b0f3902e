#include "groupent/random.hpp"

#include <cmath>

namespace groupent {

Vector Rng::gaussian_vector(int n) {
  Vector v(n);
  for (int i = 0; i < n; ++i) v(i) = complex_normal();
  return v;
}

Vector Rng::unit_vector(int n) {
  Vector v = gaussian_vector(n);
  while (v.norm() == 0.0) v = gaussian_vector(n);
  return v.normalized();
}

Matrix Rng::ginibre(int rows, int cols) {
  Matrix g(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) g(i, j) = complex_normal();
  return g;
}

Matrix Rng::density_matrix(int n) {
  const Matrix g = ginibre(n, n);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return 0.5 * (rho + rho.adjoint());
}

Matrix Rng::psd_matrix(int n, double scale) {
  const Matrix g = ginibre(n, n);
  const Matrix p = g * g.adjoint();
  return scale * 0.5 * (p + p.adjoint());
}

Matrix Rng::hermitian_matrix(int n) {
  const Matrix g = ginibre(n, n);
  return 0.5 * (g + g.adjoint());
}

std::vector<double> Rng::simplex(int k) {
  std::vector<double> w(k);
  double total = 0.0;
  for (auto& x : w) {
    x = -std::log(1.0 - uniform());
    total += x;
  }
  for (auto& x : w) x /= total;
  return w;
}

}  // namespace groupent
