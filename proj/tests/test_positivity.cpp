#include <gtest/gtest.h>

#include "groupent/error.hpp"
#include "support.hpp"

using namespace groupent;
using support::max_abs;
using support::s3;
using support::s3s3;

namespace {

GroupFunction ones(const TablePtr& t) { return GroupFunction(t, Vector::Ones(t->order())); }

GroupFunction delta(const TablePtr& t) {
  Vector v = Vector::Zero(t->order());
  v(t->group().identity()) = 1.0;
  return GroupFunction(t, v);
}

GroupFunction eps_e1(const TablePtr& t) {
  Vector e1 = Vector::Zero(2);
  e1(0) = 1.0;
  return pure_function(t, t->find_irrep("std"), e1);
}

double reconstruction_error(const GNSData& d, const GroupFunction& f) {
  double err = 0.0;
  for (int g = 0; g < f.domain->order(); ++g) {
    err = std::max(err, std::abs(d.cyclic_vector.dot(d.representation[g] * d.cyclic_vector) - f(g)));
  }
  return err;
}

}  // namespace

TEST(IsPositiveDefinite, ConstantOne) {
  const PDVerdict v = is_positive_definite(ones(s3()));
  EXPECT_TRUE(v.is_pd);
  EXPECT_EQ(v.reason, PDReason::kPositive);
  EXPECT_FALSE(v.witness.has_value());
  // The trivial block is [1]; the zero blocks pull the minimum to 0.
  EXPECT_NEAR(fourier_forward(ones(s3())).blocks[0](0, 0).real(), 1.0, 1e-15);
  EXPECT_NEAR(v.min_eigenvalue, 0.0, 1e-15);
}

TEST(IsPositiveDefinite, BellCharacteristicFunction) {
  EXPECT_TRUE(is_positive_definite(characteristic_function(bell_state(), s3s3(), 2, 2, true)).is_pd);
}

TEST(IsPositiveDefinite, IndefiniteBlockYieldsWitness) {
  const TablePtr t = s3();
  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = 1.0;
  d(1, 1) = -1.0;
  const PDVerdict v = is_positive_definite(fourier_inverse(single_block(t, 2, d)));
  ASSERT_FALSE(v.is_pd);
  EXPECT_EQ(v.reason, PDReason::kNotPSD);
  EXPECT_NEAR(v.min_eigenvalue, -1.0, 1e-12);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(v.witness->label, "std");
  const Vector& w = v.witness->vector;
  EXPECT_NEAR(w.norm(), 1.0, 1e-12);
  EXPECT_NEAR(w.dot(d * w).real(), v.min_eigenvalue, v.tolerance);
}

TEST(IsPositiveDefinite, NonHermitianBlockIsFlagged) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1.0;
  const PDVerdict v = is_positive_definite(fourier_inverse(single_block(s3(), 2, m)));
  EXPECT_FALSE(v.is_pd);
  EXPECT_EQ(v.reason, PDReason::kNotHermitian);
}

TEST(IsPositiveDefinite, VerdictMatchesThresholdInvariant) {
  Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const GroupFunction f = trial % 2 ? support::random_pd_function(s3s3(), rng)
                                      : support::random_indefinite_function(s3s3(), rng);
    const PDVerdict v = is_positive_definite(f);
    EXPECT_EQ(v.is_pd, v.min_eigenvalue >= -v.tolerance);
    if (v.witness) {
      const Matrix blk = fourier_forward(f).blocks[v.witness->block];
      const Vector& w = v.witness->vector;
      EXPECT_NEAR(w.dot(blk * w).real(), v.min_eigenvalue, v.tolerance);
    }
  }
}

TEST(GramOracle, ConstantOneIsRankOneAndPD) {
  const GroupFunction f = ones(s3());
  EXPECT_TRUE(pd_oracle_gram(f).is_pd);
  const Matrix m = gram_matrix(f);
  EXPECT_LE(max_abs(Matrix(m - Matrix::Ones(6, 6))), 0.0);
  EXPECT_EQ(gram_rank(f), 1);
}

TEST(GramOracle, AgreesWithBlockCriterion) {
  Rng rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const bool pd = trial % 2 == 0;
    const TablePtr t = trial % 3 ? s3() : s3s3();
    const GroupFunction f = pd ? support::random_pd_function(t, rng) : support::random_indefinite_function(t, rng);
    const PDVerdict blocks = is_positive_definite(f, 1e-8);
    const PDVerdict gram = pd_oracle_gram(f, 1e-8);
    EXPECT_EQ(blocks.is_pd, pd);
    EXPECT_EQ(gram.is_pd, pd);
  }
}

TEST(GramOracle, EigenvaluesAreScaledBlockEigenvalues) {
  Rng rng(4);
  const GroupFunction f = support::random_pd_function(s3(), rng);
  const FourierBlocks b = fourier_forward(f);
  std::vector<double> expect;
  for (int a = 0; a < 3; ++a) {
    const int n = s3()->irrep(a).dim;
    const RealVector ev = hermitian_spectrum(b.blocks[a]).values;
    // Each block eigenvalue appears n_α times, scaled by |G|/n_α.
    for (int k = 0; k < ev.size(); ++k)
      for (int r = 0; r < n; ++r) expect.push_back(ev(k) * 6.0 / n);
  }
  std::sort(expect.begin(), expect.end());
  const RealVector got = hermitian_spectrum(gram_matrix(f)).values;
  ASSERT_EQ(got.size(), 6);
  for (int i = 0; i < 6; ++i) EXPECT_NEAR(got(i), expect[i], 1e-10);
}

TEST(GNS, PureStdFunctionGivesStdRepresentation) {
  const TablePtr t = s3();
  const GroupFunction f = eps_e1(t);
  const GNSData d = gns_construct(f);
  ASSERT_EQ(d.dimension, 2);
  for (int g = 0; g < 6; ++g) {
    EXPECT_NEAR(std::abs(d.representation[g].trace() - t->irrep(2).character(g)), 0.0, 1e-10);
  }
  EXPECT_LE(reconstruction_error(d, f), 1e-10);
}

TEST(GNS, ConstantOneIsOneDimensional) {
  const GNSData d = gns_construct(ones(s3()));
  ASSERT_EQ(d.dimension, 1);
  EXPECT_NEAR(std::abs(d.cyclic_vector(0)), 1.0, 1e-12);
  for (const auto& u : d.representation) EXPECT_NEAR(std::abs(u(0, 0) - 1.0), 0.0, 1e-12);
}

TEST(GNS, DeltaGivesRegularRepresentation) {
  const TablePtr t = s3();
  const GNSData d = gns_construct(delta(t));
  ASSERT_EQ(d.dimension, 6);
  // Regular character: |G| at e, 0 elsewhere.
  for (int g = 0; g < 6; ++g) {
    EXPECT_NEAR(std::abs(d.representation[g].trace() - (g == t->group().identity() ? 6.0 : 0.0)), 0.0, 1e-10);
  }
}

TEST(GNS, RepresentationIsUnitaryHomomorphism) {
  Rng rng(6);
  const TablePtr t = resolve_group("d4");
  const GroupFunction f = support::random_pd_function(t, rng);
  const GNSData d = gns_construct(f);
  EXPECT_EQ(d.dimension, gram_rank(f));
  const FiniteGroup& g = t->group();
  for (int a = 0; a < g.order(); ++a) {
    const Matrix& u = d.representation[a];
    EXPECT_LE(max_abs(Matrix(u * u.adjoint() - Matrix::Identity(d.dimension, d.dimension))), 1e-10);
    for (int b = 0; b < g.order(); ++b) {
      EXPECT_LE(max_abs(Matrix(u * d.representation[b] - d.representation[g.mul(a, b)])), 1e-10);
    }
  }
  EXPECT_LE(reconstruction_error(d, f), 1e-10);
}

TEST(GNS, RejectsNonPD) {
  Rng rng(7);
  EXPECT_THROW(gns_construct(support::random_indefinite_function(s3(), rng)), PreconditionError);
}

TEST(Purity, ExamplesFromTheBlockCriterion) {
  const TablePtr t = s3();
  const PurityResult eps = is_pure(eps_e1(t));
  EXPECT_TRUE(eps.is_pure);
  EXPECT_EQ(eps.label, "std");
  EXPECT_EQ(eps.rank, 1);

  const GroupFunction sign = pure_function(t, 1, Vector::Ones(1));
  const PurityResult mix = is_pure(GroupFunction(t, 0.5 * (eps_e1(t).values + sign.values)));
  EXPECT_FALSE(mix.is_pure);
  EXPECT_EQ(mix.nonzero_blocks, 2);

  const PurityResult one = is_pure(ones(t));
  EXPECT_TRUE(one.is_pure);
  EXPECT_EQ(one.label, "triv");

  EXPECT_FALSE(is_pure(characteristic_function(Matrix::Identity(2, 2) / 2.0, t, 2)).is_pure);
  EXPECT_THROW(is_pure(GroupFunction(t, 2.0 * Vector::Ones(6))), PreconditionError);
}

TEST(Diagonal, ProductRestrictsToPointwiseProduct) {
  const TablePtr t = s3s3();
  const GroupFunction eps = eps_e1(s3());
  Vector v = Vector::Zero(2);
  v << 0.6, Complex(0.0, 0.8);
  const GroupFunction eta = pure_function(s3(), 2, v);
  const GroupFunction diag = restrict_to_diagonal(tensor_product(eps, eta, t));
  for (int g = 0; g < 6; ++g) EXPECT_NEAR(std::abs(diag(g) - eps(g) * eta(g)), 0.0, 1e-15);
  EXPECT_TRUE(pd_oracle_gram(diag).is_pd);
}

TEST(Diagonal, BellAndConstant) {
  const GroupFunction bell = characteristic_function(bell_state(), s3s3(), 2, 2, true);
  EXPECT_TRUE(pd_oracle_gram(restrict_to_diagonal(bell)).is_pd);
  const GroupFunction one = restrict_to_diagonal(ones(s3s3()));
  EXPECT_LE(max_abs(Vector(one.values - Vector::Ones(6))), 0.0);
  EXPECT_THROW(restrict_to_diagonal(ones(resolve_group("s3xz2"))), DomainMismatch);
}

TEST(HaarMean, Examples) {
  const TablePtr t = s3();
  EXPECT_NEAR(std::abs(haar_mean(ones(t)) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(haar_mean(eps_e1(t))), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(haar_mean(delta(t)) - 1.0 / 6.0), 0.0, 1e-15);
}

TEST(InvertArgument, PDFunctionsAreConjugateSymmetric) {
  Rng rng(10);
  for (int trial = 0; trial < 20; ++trial) {
    const GroupFunction f = support::random_pd_function(trial % 2 ? s3() : s3s3(), rng);
    const GroupFunction inv = invert_argument(f);
    EXPECT_LE(max_abs(Vector(inv.values - f.values.conjugate())), 1e-12);
    EXPECT_TRUE(is_positive_definite(inv).is_pd);
  }
}
