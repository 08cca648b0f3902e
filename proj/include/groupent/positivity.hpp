#pragma once

#include <optional>
#include <string>
#include <vector>

#include "groupent/harmonic.hpp"

namespace groupent {

enum class PDReason {
  kPositive,     ///< every block (or the Gram matrix) is Hermitian and PSD
  kNotPSD,       ///< some eigenvalue below -tolerance
  kNotHermitian  ///< anti-Hermitian part exceeds the tolerance; input treated as corrupted
};

const char* to_string(PDReason r);

struct PDWitness {
  int block = -1;       ///< irrep index; -1 for the Gram matrix route
  std::string label;    ///< irrep label, or "gram"
  Vector vector;        ///< unit eigenvector of the Hermitized block at min_eigenvalue
};

/// Outcome of a positive-definiteness test. is_pd == (min_eigenvalue >= -tolerance)
/// whenever reason != kNotHermitian.
struct PDVerdict {
  bool is_pd = false;
  double min_eigenvalue = 0.0;
  double tolerance = 0.0;  ///< effective (scaled) tolerance the eigenvalues were compared against
  std::optional<PDWitness> witness;
  PDReason reason = PDReason::kPositive;
};

/// Block criterion: φ is positive definite iff every Fourier block is PSD.
/// The effective tolerance is tol·(1 + max_α ‖φ̂_α‖_F).
PDVerdict is_positive_definite(const GroupFunction& f, double tol = kDefaultTolerance);

/// Same criterion applied to an explicit block family.
PDVerdict blocks_positive(const FourierBlocks& b, double tol = kDefaultTolerance);

/// Defining condition on a finite group: the Haar-normalized Gram matrix
/// K[g,h] = φ(g⁻¹h)/|G| is PSD. Effective tolerance tol·(1 + ‖K‖_F).
PDVerdict pd_oracle_gram(const GroupFunction& f, double tol = kDefaultTolerance);

/// Gram matrix M[g,h] = φ(g⁻¹h) (not normalized).
Matrix gram_matrix(const GroupFunction& f);

/// Finite-dimensional GNS triple: φ(g) = ⟨v|π(g) v⟩ with π unitary.
struct GNSData {
  int dimension = 0;
  std::vector<Matrix> representation;  ///< one unitary per element
  Vector cyclic_vector;
};

/// Reconstruction from the Gram matrix spectrum with rank cutoff tol·λ_max;
/// π(x) is left translation compressed to the retained eigenspace.
/// Throws PreconditionError when φ is not positive definite at tol.
GNSData gns_construct(const GroupFunction& f, double tol = kDefaultTolerance);

/// Number of Gram eigenvalues above tol·λ_max.
int gram_rank(const GroupFunction& f, double tol = kDefaultTolerance);

struct PurityResult {
  bool is_pure = false;
  int block = -1;  ///< the single nonzero block when exactly one exists
  std::string label;
  int rank = 0;    ///< numerical rank of that block
  int nonzero_blocks = 0;
};

/// A normalized PD function is pure iff exactly one Fourier block is nonzero
/// (Frobenius norm > tol) and that block has numerical rank 1 (singular
/// values above tol·σ_max). Throws PreconditionError unless f(e) = 1 within tol.
PurityResult is_pure(const GroupFunction& f, double tol = kDefaultTolerance);

/// φ|Δ(g) = φ(g,g) for φ on G×G. Throws DomainMismatch when the factors differ.
GroupFunction restrict_to_diagonal(const GroupFunction& f);

/// (1/|G|) Σ_g f(g).
Complex haar_mean(const GroupFunction& f);

/// θφ(g) = φ(g⁻¹).
GroupFunction invert_argument(const GroupFunction& f);

}  // namespace groupent
