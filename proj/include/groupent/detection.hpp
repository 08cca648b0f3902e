#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "groupent/maps.hpp"
#include "groupent/positivity.hpp"

namespace groupent {

enum class SepVerdict { kSeparable, kEntangled, kPPTUndecided };
const char* to_string(SepVerdict v);

/// How a block verdict was reached.
enum class SepMethod {
  kZeroBlock,        ///< block vanishes
  kOneDimensional,   ///< one factor dimension is 1: PSD implies separable
  kPPTExact,         ///< 2⊗2 or 2⊗3: PPT is necessary and sufficient
  kPPTNecessary      ///< larger blocks: only a PPT violation is conclusive
};
const char* to_string(SepMethod m);

struct BlockVerdict {
  int block = 0;  ///< irrep index in the product table
  std::string label;
  int left_dim = 0;
  int right_dim = 0;
  SepVerdict verdict = SepVerdict::kSeparable;
  SepMethod method = SepMethod::kZeroBlock;
  double min_pt_eigenvalue = 0.0;  ///< smallest eigenvalue of the partial transpose
};

struct DetectorFiring {
  std::string map;
  std::string block;
  double eigenvalue = 0.0;
};

struct SeparabilityReport {
  SepVerdict verdict = SepVerdict::kSeparable;
  std::vector<BlockVerdict> per_block;
  std::vector<DetectorFiring> detectors_fired;
  /// Set when every block is PPT but some block of dims ≥ 3⊗3 stays undecided.
  bool bound_entangled_candidate = false;
  double tolerance = 0.0;
};

/// Blocks of φ on G1×G2 whose partial transpose has an eigenvalue below the
/// (scaled) tolerance. Throws PreconditionError if φ is not PD.
struct PPTResult {
  bool holds = true;
  std::vector<BlockVerdict> violations;  ///< verdict kEntangled, method of the block's regime
  std::vector<BlockVerdict> blocks;      ///< every block with its min PT eigenvalue
  double tolerance = 0.0;
};
PPTResult check_ppt(const GroupFunction& f, double tol = kDefaultTolerance);

/// Per-block separability of a normalized PD function on G1×G2. Throws
/// PreconditionError on non-PD or unnormalized input.
SeparabilityReport check_separability(const GroupFunction& f, double tol = kDefaultTolerance);

struct DetectionResult {
  bool fired = false;
  std::string map;
  std::string block;       ///< violating block of (id⊗Λ)φ
  double eigenvalue = 0.0; ///< its min eigenvalue
  PDVerdict verdict;
};

/// Applies id⊗Λ and tests positive definiteness. Throws PreconditionError if
/// the map has a PD counterexample. `classification` may be supplied to skip
/// re-classifying the map.
DetectionResult detect_with_map(const GroupFunction& f, const PDMapSpec& m, double tol = kDefaultTolerance,
                                const MapClassification* classification = nullptr);

/// The blocks (1_α ⊗ Λ̂_γ^β)ρ for every target irrep γ.
std::vector<Matrix> extended_block_images(const Matrix& rho, int left_dim, const MapBlocks& mb, int beta);

/// Runs every map on the single-block state ρ at product irrep (α,β) through
/// (1_α⊗Λ̂_γ^β)ρ for every γ. Throws PreconditionError unless ρ is PSD with unit trace.
SeparabilityReport horodecki_scan(const Matrix& rho, const TablePtr& product, int alpha, int beta,
                                  const std::vector<MapPtr>& maps, double tol = kDefaultTolerance);

/// Σ_m p_m ε_m⊗η_m with k random pure factors (random irreps, random unit
/// vectors) and random convex weights.
GroupFunction make_separable_sample(const TablePtr& product, int k, std::uint64_t seed);

/// |Φ+⟩⟨Φ+| on C²⊗C².
Matrix bell_state();
/// p|Ψ−⟩⟨Ψ−| + (1−p)·I/4.
Matrix werner_state(double p);

}  // namespace groupent
