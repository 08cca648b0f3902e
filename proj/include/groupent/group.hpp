#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "groupent/linalg.hpp"

namespace groupent {

/// Default absolute tolerance on matrix entries and eigenvalues.
inline constexpr double kDefaultTolerance = 1e-9;

/// A finite group on the dense element indices 0..order-1 with an explicit
/// multiplication table. Integration is always against the normalized
/// counting measure, ∫dg f(g) = (1/order)·Σ_g f(g).
class FiniteGroup {
 public:
  /// `mul` is row-major: mul[a*order + b] = a·b. Only shape and index range
  /// are checked here; the group axioms are checked by verify_group.
  FiniteGroup(int order, std::vector<int> mul, std::vector<int> inverse, int identity,
              std::vector<std::string> labels = {}, std::string name = {});

  int order() const { return order_; }
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * order_ + b]; }
  int inverse(int g) const { return inverse_[g]; }
  int identity() const { return identity_; }
  const std::vector<int>& mul_table() const { return mul_; }
  const std::vector<int>& inverse_table() const { return inverse_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& name() const { return name_; }

  bool operator==(const FiniteGroup& other) const {
    return order_ == other.order_ && identity_ == other.identity_ && mul_ == other.mul_ &&
           inverse_ == other.inverse_;
  }

 private:
  int order_;
  std::vector<int> mul_;
  std::vector<int> inverse_;
  int identity_;
  std::vector<std::string> labels_;
  std::string name_;
};

struct Irrep {
  std::string label;
  int dim = 0;
  std::vector<Matrix> matrices;  // one per element index

  Complex character(int g) const { return matrices[g].trace(); }
};

/// One violated axiom; `axiom` is a stable identifier such as
/// "associativity", "homomorphism" or "irreducibility".
struct Violation {
  std::string axiom;
  std::string detail;
};

using VerificationReport = std::vector<Violation>;

class IrrepTable;
using TablePtr = std::shared_ptr<const IrrepTable>;

/// Factor bookkeeping of a product group G1×G2. Element (g1,g2) has index
/// g1·|G2| + g2 and irrep index p corresponds to the pair irrep_pairs[p].
struct ProductFactors {
  TablePtr left;
  TablePtr right;
  std::vector<std::pair<int, int>> irrep_pairs;

  int element(int g1, int g2) const;
  std::pair<int, int> split(int g) const;
  int irrep_index(int alpha, int beta) const;
};

/// A finite group together with a complete family of unitary irreps.
class IrrepTable {
 public:
  /// Throws ShapeMismatch when an irrep's declared dim disagrees with its
  /// matrices or when the number of matrices differs from the group order.
  IrrepTable(FiniteGroup group, std::vector<Irrep> irreps);

  const FiniteGroup& group() const { return group_; }
  const std::vector<Irrep>& irreps() const { return irreps_; }
  const Irrep& irrep(int alpha) const { return irreps_.at(alpha); }
  int size() const { return static_cast<int>(irreps_.size()); }
  int order() const { return group_.order(); }
  const std::string& name() const { return group_.name(); }

  /// Index of the irrep whose character is the complex conjugate of χ_α, or
  /// -1 when no such irrep exists in the table (only for broken tables).
  int conjugate(int alpha) const { return conjugates_.at(alpha); }

  const ProductFactors* factors() const { return factors_ ? &*factors_ : nullptr; }

  /// Irrep index for a label; throws DomainMismatch if absent.
  int find_irrep(std::string_view label) const;

  /// Structural equality: same multiplication table and identical irrep matrices.
  bool same_as(const IrrepTable& other) const;

 private:
  friend TablePtr product_group(const TablePtr&, const TablePtr&, double);

  FiniteGroup group_;
  std::vector<Irrep> irreps_;
  std::vector<int> conjugates_;
  std::optional<ProductFactors> factors_;
};

/// Reports failures of associativity, two-sided identity and two-sided inverse.
VerificationReport verify_group(const FiniteGroup& g);

/// Reports failures of the group axioms plus homomorphism, unitarity,
/// π(e) = I, Schur orthogonality, completeness, irreducibility and pairwise
/// inequivalence of the irreps, each within `tol` on matrix entries.
VerificationReport verify_irrep_table(const IrrepTable& t, double tol = kDefaultTolerance);

/// Direct product with Kronecker-product irreps π_α⊗τ_β. Both factor tables
/// must pass verify_irrep_table at `tol` (PreconditionError otherwise).
TablePtr product_group(const TablePtr& left, const TablePtr& right, double tol = kDefaultTolerance);

/// Returns true when perm is a bijection with σ(gh) = σ(g)σ(h).
bool is_automorphism(const FiniteGroup& g, const std::vector<int>& perm);

/// Returns true when perm is a bijection with σ(gh) = σ(h)σ(g).
bool is_anti_automorphism(const FiniteGroup& g, const std::vector<int>& perm);

/// All automorphisms of g as element permutations, identity first, then in
/// lexicographic order of the permutation vectors.
std::vector<std::vector<int>> automorphisms(const FiniteGroup& g);

/// All anti-automorphisms, σ(g) = α(g)⁻¹ for each automorphism α.
std::vector<std::vector<int>> anti_automorphisms(const FiniteGroup& g);

/// A small generating set chosen greedily in index order.
std::vector<int> generating_set(const FiniteGroup& g);

}  // namespace groupent
