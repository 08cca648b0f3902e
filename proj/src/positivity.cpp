#include "groupent/positivity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "groupent/error.hpp"

namespace groupent {

const char* to_string(PDReason r) {
  switch (r) {
    case PDReason::kPositive:
      return "positive";
    case PDReason::kNotPSD:
      return "not_psd";
    case PDReason::kNotHermitian:
      return "not_hermitian";
  }
  return "unknown";
}

namespace {

// Shared scan over a list of square matrices with a common effective tolerance.
PDVerdict scan_blocks(const std::vector<const Matrix*>& blocks, const std::vector<std::string>& labels,
                      double effective_tol, bool gram_route) {
  PDVerdict verdict;
  verdict.tolerance = effective_tol;
  verdict.min_eigenvalue = std::numeric_limits<double>::infinity();
  int worst = -1;
  int non_hermitian = -1;
  HermitianSpectrum worst_spectrum;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const Matrix& b = *blocks[i];
    if (non_hermitian < 0 && antihermitian_norm(b) > effective_tol) non_hermitian = static_cast<int>(i);
    auto spectrum = hermitian_spectrum(b);
    if (spectrum.values.size() == 0) continue;
    if (spectrum.values(0) < verdict.min_eigenvalue) {
      verdict.min_eigenvalue = spectrum.values(0);
      worst = static_cast<int>(i);
      worst_spectrum = std::move(spectrum);
    }
  }
  if (worst < 0) verdict.min_eigenvalue = 0.0;

  auto witness_for = [&](int i, const Matrix& b) {
    PDWitness w;
    w.block = gram_route ? -1 : i;
    w.label = labels[i];
    w.vector = (i == worst) ? Vector(worst_spectrum.vectors.col(0)) : Vector(hermitian_spectrum(b).vectors.col(0));
    return w;
  };

  if (non_hermitian >= 0) {
    verdict.is_pd = false;
    verdict.reason = PDReason::kNotHermitian;
    verdict.witness = witness_for(non_hermitian, *blocks[non_hermitian]);
  } else if (verdict.min_eigenvalue < -effective_tol) {
    verdict.is_pd = false;
    verdict.reason = PDReason::kNotPSD;
    verdict.witness = witness_for(worst, *blocks[worst]);
  } else {
    verdict.is_pd = true;
    verdict.reason = PDReason::kPositive;
  }
  return verdict;
}

}  // namespace

PDVerdict blocks_positive(const FourierBlocks& b, double tol) {
  std::vector<const Matrix*> ptrs;
  std::vector<std::string> labels;
  double scale = 0.0;
  for (std::size_t a = 0; a < b.blocks.size(); ++a) {
    ptrs.push_back(&b.blocks[a]);
    labels.push_back(b.domain ? b.domain->irrep(static_cast<int>(a)).label : std::to_string(a));
    scale = std::max(scale, b.blocks[a].norm());
  }
  return scan_blocks(ptrs, labels, tol * (1.0 + scale), false);
}

PDVerdict is_positive_definite(const GroupFunction& f, double tol) {
  return blocks_positive(fourier_forward(f), tol);
}

Matrix gram_matrix(const GroupFunction& f) {
  const FiniteGroup& g = f.domain->group();
  const int n = g.order();
  Matrix m(n, n);
  for (int a = 0; a < n; ++a) {
    const int a_inv = g.inverse(a);
    for (int b = 0; b < n; ++b) m(a, b) = f.values(g.mul(a_inv, b));
  }
  return m;
}

PDVerdict pd_oracle_gram(const GroupFunction& f, double tol) {
  const Matrix k = gram_matrix(f) / static_cast<double>(f.domain->order());
  return scan_blocks({&k}, {"gram"}, tol * (1.0 + k.norm()), true);
}

namespace {

struct RetainedSpectrum {
  Matrix vectors;     // |G|×r
  RealVector values;  // r
};

RetainedSpectrum retained_gram_spectrum(const GroupFunction& f, double tol) {
  const auto spectrum = hermitian_spectrum(gram_matrix(f));
  const double lambda_max = spectrum.values.size() ? spectrum.values.maxCoeff() : 0.0;
  std::vector<int> keep;
  for (Eigen::Index i = 0; i < spectrum.values.size(); ++i)
    if (spectrum.values(i) > tol * lambda_max && spectrum.values(i) > 0.0) keep.push_back(static_cast<int>(i));
  RetainedSpectrum r;
  r.vectors.resize(spectrum.vectors.rows(), static_cast<Eigen::Index>(keep.size()));
  r.values.resize(static_cast<Eigen::Index>(keep.size()));
  for (std::size_t j = 0; j < keep.size(); ++j) {
    r.vectors.col(static_cast<Eigen::Index>(j)) = spectrum.vectors.col(keep[j]);
    r.values(static_cast<Eigen::Index>(j)) = spectrum.values(keep[j]);
  }
  return r;
}

}  // namespace

int gram_rank(const GroupFunction& f, double tol) {
  return static_cast<int>(retained_gram_spectrum(f, tol).values.size());
}

GNSData gns_construct(const GroupFunction& f, double tol) {
  const PDVerdict verdict = is_positive_definite(f, tol);
  if (!verdict.is_pd) {
    throw PreconditionError("gns_construct: function is not positive definite (min eigenvalue " +
                            std::to_string(verdict.min_eigenvalue) + ")");
  }
  const FiniteGroup& g = f.domain->group();
  const int n = g.order();
  const RetainedSpectrum r = retained_gram_spectrum(f, tol);
  const Matrix& u = r.vectors;

  GNSData out;
  out.dimension = static_cast<int>(r.values.size());
  // Vector δ_h is represented by c_h = Λ^{1/2} U†[:,h]; the cyclic vector is c_e.
  out.cyclic_vector = r.values.cwiseSqrt().asDiagonal() * u.row(g.identity()).adjoint();
  out.representation.reserve(n);
  for (int x = 0; x < n; ++x) {
    // U† Q_x U with Q_x e_h = e_{xh}; left translation commutes with the Gram matrix.
    const int x_inv = g.inverse(x);
    Matrix pu(n, out.dimension);
    for (int j = 0; j < n; ++j) pu.row(j) = u.row(g.mul(x_inv, j));
    out.representation.push_back(u.adjoint() * pu);
  }
  return out;
}

PurityResult is_pure(const GroupFunction& f, double tol) {
  if (std::abs(f.at_identity() - 1.0) > tol) {
    throw PreconditionError("is_pure: function is not normalized (f(e) != 1)");
  }
  const FourierBlocks b = fourier_forward(f);
  PurityResult out;
  for (std::size_t a = 0; a < b.blocks.size(); ++a) {
    if (b.blocks[a].norm() > tol) {
      ++out.nonzero_blocks;
      out.block = static_cast<int>(a);
    }
  }
  if (out.nonzero_blocks == 1) {
    out.label = f.domain->irrep(out.block).label;
    out.rank = numerical_rank(b.blocks[out.block], tol);
    out.is_pure = out.rank == 1;
  } else {
    out.block = -1;
  }
  return out;
}

GroupFunction restrict_to_diagonal(const GroupFunction& f) {
  const auto& factors = require_product(f.domain, "restrict_to_diagonal");
  if (!factors.left->same_as(*factors.right)) {
    throw DomainMismatch("restrict_to_diagonal: factors '" + factors.left->name() + "' and '" +
                         factors.right->name() + "' differ");
  }
  const int n = factors.left->order();
  Vector values(n);
  for (int g = 0; g < n; ++g) values(g) = f.values(factors.element(g, g));
  return GroupFunction(factors.left, std::move(values));
}

Complex haar_mean(const GroupFunction& f) { return f.values.mean(); }

GroupFunction invert_argument(const GroupFunction& f) {
  const FiniteGroup& g = f.domain->group();
  Vector values(g.order());
  for (int x = 0; x < g.order(); ++x) values(x) = f.values(g.inverse(x));
  return GroupFunction(f.domain, std::move(values));
}

}  // namespace groupent
