#include "groupent/detection.hpp"

#include <algorithm>
#include <cmath>

#include "groupent/error.hpp"
#include "groupent/random.hpp"

namespace groupent {

const char* to_string(SepVerdict v) {
  switch (v) {
    case SepVerdict::kSeparable:
      return "separable";
    case SepVerdict::kEntangled:
      return "entangled";
    case SepVerdict::kPPTUndecided:
      return "ppt_undecided";
  }
  return "unknown";
}

const char* to_string(SepMethod m) {
  switch (m) {
    case SepMethod::kZeroBlock:
      return "zero_block";
    case SepMethod::kOneDimensional:
      return "one_dimensional_factor";
    case SepMethod::kPPTExact:
      return "ppt_exact";
    case SepMethod::kPPTNecessary:
      return "ppt_necessary_only";
  }
  return "unknown";
}

namespace {

double max_block_norm(const FourierBlocks& b) {
  double s = 0.0;
  for (const auto& m : b.blocks) s = std::max(s, m.norm());
  return s;
}

bool ppt_is_exact(int n, int m) {
  const int lo = std::min(n, m), hi = std::max(n, m);
  return lo == 2 && (hi == 2 || hi == 3);
}

// Per-block verdict for a PSD block of dimensions n⊗m.
BlockVerdict classify_block(const Matrix& block, int index, const std::string& label, int n, int m,
                            double effective_tol) {
  BlockVerdict v;
  v.block = index;
  v.label = label;
  v.left_dim = n;
  v.right_dim = m;
  v.min_pt_eigenvalue = min_hermitian_eigenvalue(partial_transpose(block, n, m));
  const bool npt = v.min_pt_eigenvalue < -effective_tol;
  if (block.norm() <= effective_tol) {
    v.method = SepMethod::kZeroBlock;
    v.verdict = SepVerdict::kSeparable;
  } else if (n == 1 || m == 1) {
    v.method = SepMethod::kOneDimensional;
    v.verdict = SepVerdict::kSeparable;
  } else if (ppt_is_exact(n, m)) {
    v.method = SepMethod::kPPTExact;
    v.verdict = npt ? SepVerdict::kEntangled : SepVerdict::kSeparable;
  } else {
    v.method = SepMethod::kPPTNecessary;
    v.verdict = npt ? SepVerdict::kEntangled : SepVerdict::kPPTUndecided;
  }
  return v;
}

void require_pd(const GroupFunction& f, double tol, const char* context) {
  const PDVerdict pd = is_positive_definite(f, tol);
  if (!pd.is_pd) {
    throw PreconditionError(std::string(context) + ": input is not positive definite (" + to_string(pd.reason) +
                            ", min eigenvalue " + std::to_string(pd.min_eigenvalue) + ")");
  }
}

SeparabilityReport aggregate(std::vector<BlockVerdict> blocks, double tol) {
  SeparabilityReport r;
  r.tolerance = tol;
  bool any_entangled = false, any_undecided = false, any_big_undecided = false;
  for (const auto& b : blocks) {
    any_entangled |= b.verdict == SepVerdict::kEntangled;
    if (b.verdict == SepVerdict::kPPTUndecided) {
      any_undecided = true;
      any_big_undecided |= b.left_dim >= 3 && b.right_dim >= 3;
    }
  }
  r.verdict = any_entangled ? SepVerdict::kEntangled
                            : (any_undecided ? SepVerdict::kPPTUndecided : SepVerdict::kSeparable);
  r.bound_entangled_candidate = !any_entangled && any_big_undecided;
  r.per_block = std::move(blocks);
  return r;
}

}  // namespace

PPTResult check_ppt(const GroupFunction& f, double tol) {
  const auto& factors = require_product(f.domain, "check_ppt");
  require_pd(f, tol, "check_ppt");
  const FourierBlocks b = fourier_forward(f);
  PPTResult out;
  out.tolerance = tol * (1.0 + max_block_norm(b));
  for (int p = 0; p < f.domain->size(); ++p) {
    const auto [alpha, beta] = factors.irrep_pairs[p];
    const int n = factors.left->irrep(alpha).dim;
    const int m = factors.right->irrep(beta).dim;
    BlockVerdict v = classify_block(b.blocks[p], p, f.domain->irrep(p).label, n, m, out.tolerance);
    if (v.min_pt_eigenvalue < -out.tolerance) {
      out.holds = false;
      v.verdict = SepVerdict::kEntangled;
      out.violations.push_back(v);
    }
    out.blocks.push_back(std::move(v));
  }
  return out;
}

SeparabilityReport check_separability(const GroupFunction& f, double tol) {
  const auto& factors = require_product(f.domain, "check_separability");
  if (std::abs(f.at_identity() - 1.0) > std::max(tol, 1e-9)) {
    throw PreconditionError("check_separability: function is not normalized (phi(e,e) != 1)");
  }
  require_pd(f, tol, "check_separability");
  const FourierBlocks b = fourier_forward(f);
  const double eff = tol * (1.0 + max_block_norm(b));
  std::vector<BlockVerdict> blocks;
  for (int p = 0; p < f.domain->size(); ++p) {
    const auto [alpha, beta] = factors.irrep_pairs[p];
    blocks.push_back(classify_block(b.blocks[p], p, f.domain->irrep(p).label, factors.left->irrep(alpha).dim,
                                    factors.right->irrep(beta).dim, eff));
  }
  return aggregate(std::move(blocks), eff);
}

DetectionResult detect_with_map(const GroupFunction& f, const PDMapSpec& m, double tol,
                                const MapClassification* classification) {
  MapClassification local;
  if (!classification) {
    local = classify_map(m, SamplingBudget{}, tol);
    classification = &local;
  }
  if (classification->is_pd == PDStatus::kCounterexampleFound) {
    throw PreconditionError("detect_with_map: map '" + m.name + "' is not positive definite");
  }
  DetectionResult r;
  r.map = m.name;
  r.verdict = is_positive_definite(apply_extended(m, f), tol);
  r.fired = !r.verdict.is_pd;
  r.eigenvalue = r.verdict.min_eigenvalue;
  if (r.verdict.witness) r.block = r.verdict.witness->label;
  return r;
}

std::vector<Matrix> extended_block_images(const Matrix& rho, int left_dim, const MapBlocks& mb, int beta) {
  std::vector<Matrix> out;
  for (int gamma = 0; gamma < mb.target->size(); ++gamma) {
    out.push_back(apply_superoperator_extended(mb.at(gamma, beta), rho, left_dim));
  }
  return out;
}

SeparabilityReport horodecki_scan(const Matrix& rho, const TablePtr& product, int alpha, int beta,
                                  const std::vector<MapPtr>& maps, double tol) {
  const auto& factors = require_product(product, "horodecki_scan");
  const int n = factors.left->irrep(alpha).dim;
  const int m = factors.right->irrep(beta).dim;
  if (rho.rows() != n * m || rho.cols() != n * m) {
    throw ShapeMismatch("horodecki_scan: state must be " + std::to_string(n * m) + "x" + std::to_string(n * m));
  }
  if (antihermitian_norm(rho) > tol || min_hermitian_eigenvalue(rho) < -tol ||
      std::abs(rho.trace() - 1.0) > std::max(tol, 1e-9)) {
    throw PreconditionError("horodecki_scan: input is not a density matrix");
  }
  const double eff = tol * (1.0 + rho.norm());
  std::vector<DetectorFiring> fired;
  for (const auto& map : maps) {
    require_same_domain(map->source, factors.right, "horodecki_scan (map source)");
    const MapClassification c = classify_map(*map, SamplingBudget{}, tol);
    if (c.is_pd == PDStatus::kCounterexampleFound) {
      throw PreconditionError("horodecki_scan: map '" + map->name + "' is not positive definite");
    }
    const MapBlocks mb = map_to_blocks(*map);
    const auto images = extended_block_images(rho, n, mb, beta);
    for (int gamma = 0; gamma < static_cast<int>(images.size()); ++gamma) {
      const double lambda = min_hermitian_eigenvalue(images[gamma]);
      if (lambda < -tol * (1.0 + images[gamma].norm())) {
        fired.push_back({map->name, factors.left->irrep(alpha).label + "," + mb.target->irrep(gamma).label, lambda});
      }
    }
  }
  SeparabilityReport r = aggregate({classify_block(rho, factors.irrep_index(alpha, beta),
                                                   product->irrep(factors.irrep_index(alpha, beta)).label, n, m, eff)},
                                   eff);
  r.detectors_fired = std::move(fired);
  if (!r.detectors_fired.empty()) r.verdict = SepVerdict::kEntangled;
  return r;
}

GroupFunction make_separable_sample(const TablePtr& product, int k, std::uint64_t seed) {
  const auto& factors = require_product(product, "make_separable_sample");
  if (k < 1) throw PreconditionError("make_separable_sample: k must be at least 1");
  Rng rng(seed);
  const std::vector<double> weights = rng.simplex(k);
  Vector values = Vector::Zero(product->order());
  for (int i = 0; i < k; ++i) {
    const int alpha = rng.index(factors.left->size());
    const int beta = rng.index(factors.right->size());
    const GroupFunction eps =
        pure_function(factors.left, alpha, rng.unit_vector(factors.left->irrep(alpha).dim));
    const GroupFunction eta =
        pure_function(factors.right, beta, rng.unit_vector(factors.right->irrep(beta).dim));
    values += weights[i] * tensor_product(eps, eta, product).values;
  }
  return GroupFunction(product, std::move(values));
}

Matrix bell_state() {
  Vector v = Vector::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  return v * v.adjoint();
}

Matrix werner_state(double p) {
  Vector singlet = Vector::Zero(4);
  singlet(1) = 1.0 / std::sqrt(2.0);
  singlet(2) = -1.0 / std::sqrt(2.0);
  return p * singlet * singlet.adjoint() + (1.0 - p) * Matrix::Identity(4, 4) / 4.0;
}

}  // namespace groupent
