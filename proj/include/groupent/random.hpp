#pragma once

#include <cstdint>
#include <random>

#include "groupent/linalg.hpp"

namespace groupent {

/// Seeded generator shared by every sampling routine; identical seeds give
/// identical draws on a given standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

  double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }
  double normal() { return normal_(engine_); }
  int index(int n) { return std::uniform_int_distribution<int>(0, n - 1)(engine_); }
  Complex complex_normal() { return {normal(), normal()}; }

  Vector gaussian_vector(int n);
  Vector unit_vector(int n);
  Matrix ginibre(int rows, int cols);
  /// ρ = GG†/tr(GG†) with G square complex Gaussian.
  Matrix density_matrix(int n);
  /// GG† with G n×n Gaussian, scaled by `scale`.
  Matrix psd_matrix(int n, double scale = 1.0);
  /// Hermitian matrix with Gaussian entries.
  Matrix hermitian_matrix(int n);
  /// Weights on the simplex (normalized exponential draws).
  std::vector<double> simplex(int k);

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace groupent
