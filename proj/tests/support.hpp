#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "groupent/detection.hpp"
#include "groupent/io.hpp"
#include "groupent/random.hpp"

namespace support {

using namespace groupent;

inline TablePtr s3() { return resolve_group("s3"); }
inline TablePtr s3s3() {
  static const TablePtr t = resolve_group("s3xs3");
  return t;
}

inline double max_abs(const Vector& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }
inline double max_abs(const Matrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

inline GroupFunction random_function(const TablePtr& t, Rng& rng) {
  return GroupFunction(t, rng.gaussian_vector(t->order()));
}

/// Built from random PSD blocks (some zeroed), so PD by construction.
inline GroupFunction random_pd_function(const TablePtr& t, Rng& rng) {
  FourierBlocks b;
  b.domain = t;
  for (const auto& ir : t->irreps()) {
    b.blocks.push_back(rng.uniform() < 0.25 ? Matrix::Zero(ir.dim, ir.dim) : rng.psd_matrix(ir.dim));
  }
  return fourier_inverse(b);
}

/// One Hermitian block made indefinite, the rest PSD.
inline GroupFunction random_indefinite_function(const TablePtr& t, Rng& rng) {
  FourierBlocks b;
  b.domain = t;
  for (const auto& ir : t->irreps()) b.blocks.push_back(rng.psd_matrix(ir.dim));
  const int a = rng.index(t->size());
  const int d = t->irrep(a).dim;
  const Vector x = rng.unit_vector(d);
  b.blocks[a] -= (b.blocks[a].norm() + 0.5 + rng.uniform()) * x * x.adjoint();
  return fourier_inverse(b);
}

/// Normalized random PD function: φ(e) = 1.
inline GroupFunction random_state_function(const TablePtr& t, Rng& rng) {
  GroupFunction f = random_pd_function(t, rng);
  while (std::abs(f.at_identity()) < 1e-12) f = random_pd_function(t, rng);
  f.values /= f.at_identity().real();
  return f;
}

/// χ of the 2-dim irrep of S₃ from the permutation label: fixed points − 1.
inline double s3_std_character(const std::string& label) {
  int fixed = 0;
  for (int i = 0; i < 3; ++i) fixed += label[1 + i] - '0' == i;
  return fixed - 1.0;
}

/// Sign of the permutation in an S₃ label "(abc)".
inline double s3_sign(const std::string& label) {
  int inversions = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) inversions += label[1 + i] > label[1 + j];
  return inversions % 2 ? -1.0 : 1.0;
}

/// A₄ with irreps triv, ω, ω², and the 3-dim restriction of the permutation
/// representation to the sum-zero subspace. Not bundled; tests need a 3-dim irrep.
inline TablePtr alternating4() {
  using Perm = std::array<int, 4>;
  std::vector<Perm> elems;
  Perm p{0, 1, 2, 3};
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) inversions += p[i] > p[j];
    if (inversions % 2 == 0) elems.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int n = static_cast<int>(elems.size());
  auto index = [&](const Perm& q) { return static_cast<int>(std::find(elems.begin(), elems.end(), q) - elems.begin()); };
  auto compose = [](const Perm& a, const Perm& b) {
    Perm c{};
    for (int i = 0; i < 4; ++i) c[i] = a[b[i]];
    return c;
  };
  std::vector<int> mul(n * n), inv(n);
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) mul[a * n + b] = index(compose(elems[a], elems[b]));
    Perm q{};
    for (int i = 0; i < 4; ++i) q[elems[a][i]] = i;
    inv[a] = index(q);
    std::string label;
    for (int i : elems[a]) label += static_cast<char>('0' + i);
    labels.push_back(label);
  }
  // Coset of the Klein subgroup V: g ∈ c^k V with c = (0 1 2).
  const std::vector<Perm> klein{{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  const Perm c{1, 2, 0, 3};
  std::vector<int> coset(n);
  for (int g = 0; g < n; ++g) {
    Perm ck{0, 1, 2, 3};
    for (int k = 0; k < 3; ++k) {
      for (const Perm& v : klein) {
        if (compose(ck, v) == elems[g]) coset[g] = k;
      }
      ck = compose(c, ck);
    }
  }
  Eigen::MatrixXd basis(4, 3);
  basis << 1 / std::sqrt(2.0), 1 / std::sqrt(6.0), 1 / std::sqrt(12.0),  //
      -1 / std::sqrt(2.0), 1 / std::sqrt(6.0), 1 / std::sqrt(12.0),       //
      0, -2 / std::sqrt(6.0), 1 / std::sqrt(12.0),                        //
      0, 0, -3 / std::sqrt(12.0);
  const Complex omega = std::polar(1.0, 2.0 * M_PI / 3.0);
  std::vector<Irrep> irreps{{"triv", 1, {}}, {"w", 1, {}}, {"w2", 1, {}}, {"std", 3, {}}};
  for (int g = 0; g < n; ++g) {
    irreps[0].matrices.push_back(Matrix::Ones(1, 1));
    irreps[1].matrices.push_back(Matrix::Constant(1, 1, std::pow(omega, coset[g])));
    irreps[2].matrices.push_back(Matrix::Constant(1, 1, std::pow(omega, 2 * coset[g])));
    Eigen::MatrixXd perm = Eigen::MatrixXd::Zero(4, 4);
    for (int i = 0; i < 4; ++i) perm(elems[g][i], i) = 1.0;
    irreps[3].matrices.push_back((basis.transpose() * perm * basis).cast<Complex>());
  }
  return std::make_shared<const IrrepTable>(FiniteGroup(n, mul, inv, 0, labels, "a4"), irreps);
}

}  // namespace support
