#pragma once

#include <vector>

#include "groupent/group.hpp"

namespace groupent {

/// A complex-valued function on the elements of a (possibly product) group.
/// For a product domain G1×G2 the value at (g1,g2) sits at index g1·|G2|+g2.
struct GroupFunction {
  TablePtr domain;
  Vector values;

  GroupFunction() = default;
  GroupFunction(TablePtr d, Vector v);

  Complex operator()(int g) const { return values(g); }
  /// Value at (g1,g2); the domain must be a product group.
  Complex operator()(int g1, int g2) const;
  Complex at_identity() const { return values(domain->group().identity()); }
};

/// The family {f̂_α} of Fourier blocks, one per irrep of the domain table.
/// Block α of a product table is the (n_α m_β)×(n_α m_β) operator f̂_{αβ}.
struct FourierBlocks {
  TablePtr domain;
  std::vector<Matrix> blocks;
};

/// f̂_α = n_α · (1/|G|) Σ_g f(g) π_α(g)†, summed in ascending element order.
FourierBlocks fourier_forward(const GroupFunction& f);

/// Same transform restricted to a single irrep index.
Matrix fourier_block(const GroupFunction& f, int alpha);

/// f(g) = Σ_α tr[f̂_α π_α(g)]. Throws ShapeMismatch on wrong block shapes.
GroupFunction fourier_inverse(const FourierBlocks& b);

/// Blocks that are zero everywhere except `block` at irrep index `alpha`.
FourierBlocks single_block(const TablePtr& domain, int alpha, const Matrix& block);

/// φ_ρ(g) = tr[ρ π_α(g)]; for a product table and α = (α1,α2) this is
/// tr[ρ π_α1(g1)⊗τ_α2(g2)]. With `require_state` the trace must be 1 within
/// 1e-9 (PreconditionError otherwise).
GroupFunction characteristic_function(const Matrix& rho, const TablePtr& domain, int alpha,
                                      bool require_state = false);

/// Same, addressed by the factor irrep indices of a product table.
GroupFunction characteristic_function(const Matrix& rho, const TablePtr& product, int alpha, int beta,
                                      bool require_state = false);

/// ⟨v|π_α(g) v⟩ for a unit vector v: a pure normalized positive definite function.
GroupFunction pure_function(const TablePtr& domain, int alpha, const Vector& v);

/// (ε⊗η)(g1,g2) = ε(g1)·η(g2) on the given product table.
GroupFunction tensor_product(const GroupFunction& left, const GroupFunction& right, const TablePtr& product);

/// Throws DomainMismatch unless both tables describe the same group with the same irreps.
void require_same_domain(const TablePtr& a, const TablePtr& b, const char* context);

/// Throws DomainMismatch unless the table is a product group.
const ProductFactors& require_product(const TablePtr& t, const char* context);

}  // namespace groupent
