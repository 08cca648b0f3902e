#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "groupent/harmonic.hpp"

namespace groupent {

/// A point mass of complex weight at a group element; a finite measure is a list of them.
struct WeightedPoint {
  Complex weight;
  int element = 0;
};
using Measure = std::vector<WeightedPoint>;

/// One Λ_μ term of a nonnegative combination Σ_t p_t Λ_{μ_t}.
struct KrausTerm {
  double weight = 0.0;
  Measure measure;
};

struct PDMapSpec;
using MapPtr = std::shared_ptr<const PDMapSpec>;

struct InversionForm {};
struct AutomorphismForm {
  std::vector<int> permutation;
};
struct AntiAutomorphismForm {
  std::vector<int> permutation;
};
struct ConvolutionForm {
  Measure measure;
};
struct KrausSumForm {
  std::vector<KrausTerm> terms;
};
/// Super-operators Λ̂_α^β, index α·|Ĝ_source| + β, each (n_α²)×(m_β²) in the
/// row-major operator bases E_ij (target) and Ẽ_kl (source).
struct BlockFamilyForm {
  std::vector<Matrix> blocks;
};
/// outer ∘ inner.
struct CompositionForm {
  MapPtr outer;
  MapPtr inner;
};

using MapForm = std::variant<InversionForm, AutomorphismForm, AntiAutomorphismForm, ConvolutionForm,
                             KrausSumForm, BlockFamilyForm, CompositionForm>;

/// A linear map Λ: C(source) → C(target).
struct PDMapSpec {
  TablePtr source;
  TablePtr target;
  MapForm form;
  std::string name;
};

/// Stable identifier of the form: "inversion", "automorphism", ...
const char* form_name(const MapForm& form);

MapPtr make_inversion(const TablePtr& g);
/// Throws PreconditionError unless σ(gh) = σ(g)σ(h) holds exhaustively.
MapPtr make_automorphism(const TablePtr& g, std::vector<int> permutation, std::string name = {});
/// Throws PreconditionError unless σ(gh) = σ(h)σ(g) holds exhaustively.
MapPtr make_anti_automorphism(const TablePtr& g, std::vector<int> permutation, std::string name = {});
/// Λ_μ f(g) = Σ_{a,b} conj(μ_a) μ_b f(a g b⁻¹).
MapPtr make_convolution(const TablePtr& g, Measure measure, std::string name = {});
/// Throws PreconditionError on a negative outer weight.
MapPtr make_kraus_sum(const TablePtr& g, std::vector<KrausTerm> terms, std::string name = {});
MapPtr make_block_family(const TablePtr& source, const TablePtr& target, std::vector<Matrix> blocks,
                         std::string name = {});
MapPtr compose(const MapPtr& outer, const MapPtr& inner, std::string name = {});

/// Λ_Φ f(g1) = tr[(Φ f̂_β) π_α(g1)]: the block family with Φ at (α,β) and zeros elsewhere.
MapPtr blocks_to_map(const TablePtr& source, const TablePtr& target, int alpha, int beta, const Matrix& phi,
                     std::string name = {});

/// Checks the structural invariants; throws PreconditionError / ShapeMismatch.
void validate(const PDMapSpec& m);

/// The block family {Λ̂_α^β} of a map.
struct MapBlocks {
  TablePtr source;
  TablePtr target;
  std::vector<Matrix> blocks;

  const Matrix& at(int alpha, int beta) const { return blocks[alpha * source->size() + beta]; }
  std::string label(int alpha, int beta) const;
};

/// Λ^{ijβ}_{αkl} = n_α ∫dg conj(π^α_ij(g)) (Λτ^β_kl)(g), arranged so that
/// (Λf)̂_α = Σ_β Λ̂_α^β f̂_β.
MapBlocks map_to_blocks(const PDMapSpec& m);

/// Structural forms are evaluated on values; block families through the
/// Fourier blocks and the inverse transform.
GroupFunction apply_map(const PDMapSpec& m, const GroupFunction& f);

/// Always through the Fourier blocks: (Λf)̂_α = Σ_β Λ̂_α^β f̂_β.
GroupFunction apply_map_via_blocks(const MapBlocks& blocks, const GroupFunction& f);

/// (id⊗Λ)φ for φ on H×source; output on H×target (a derived product table
/// when target differs from source). Evaluated slice-wise on values.
GroupFunction apply_extended(const PDMapSpec& m, const GroupFunction& f);

/// Same extension through blocks: [(id⊗Λ)φ]̂_{bα} = Σ_β (1_b⊗Λ̂_α^β) φ̂_{bβ}.
GroupFunction apply_extended_via_blocks(const MapBlocks& blocks, const GroupFunction& f);

enum class PDStatus { kProvenPD, kCounterexampleFound, kUndetermined };
const char* to_string(PDStatus s);

struct ChoiEvidence {
  int target_irrep = 0;
  int source_irrep = 0;
  std::string label;
  double min_eigenvalue = 0.0;
  bool hermitian = true;
};

/// A unit vector x with Λ̂_α^β(|x⟩⟨x|) not PSD.
struct PDCounterexample {
  int target_irrep = 0;
  int source_irrep = 0;
  std::string label;
  Vector state;
  double eigenvalue = 0.0;  ///< min eigenvalue of the Hermitian part of the image
  bool hermitian_image = true;
};

struct MapClassification {
  PDStatus is_pd = PDStatus::kUndetermined;
  bool is_cpd = false;
  std::vector<ChoiEvidence> choi;
  std::optional<PDCounterexample> counterexample;
  double best_found_minimum = 0.0;  ///< smallest λ_min(Λ̂(|x⟩⟨x|)) seen by the search
  double tolerance = 0.0;
  std::string proof;  ///< why is_pd is proven, if it is
};

struct SamplingBudget {
  int samples = 10000;       ///< random unit vectors per block
  int descent_starts = 8;    ///< best samples refined by alternating descent
  int descent_steps = 100;
  std::uint64_t seed = 0;
};

/// CPD exactly via per-block Choi matrices; PD by structural proof, exact
/// certification of blocks with a one-dimensional side, or a seeded search
/// for a refuting pure state.
MapClassification classify_map(const PDMapSpec& m, const SamplingBudget& budget = {},
                               double tol = kDefaultTolerance);

/// Re-applies the block map to the counterexample's projector and confirms
/// the reported eigenvalue.
bool verify_counterexample(const MapBlocks& blocks, const PDCounterexample& ce, double tol = kDefaultTolerance);

/// The bundled detector library on one group: θ, every automorphism, every
/// anti-automorphism and `convolutions` seeded random Λ_μ maps.
std::vector<MapPtr> detector_library(const TablePtr& g, std::uint64_t seed = 0, int convolutions = 4);

/// A random finite measure with `points` point masses of complex Gaussian weight.
Measure random_measure(const TablePtr& g, int points, std::uint64_t seed);

}  // namespace groupent
