#include "groupent/harmonic.hpp"

#include <cmath>

#include "groupent/error.hpp"

namespace groupent {

GroupFunction::GroupFunction(TablePtr d, Vector v) : domain(std::move(d)), values(std::move(v)) {
  if (!domain) throw DomainMismatch("group function without a domain");
  if (values.size() != domain->order()) {
    throw ShapeMismatch("function has " + std::to_string(values.size()) + " values but group '" +
                        domain->name() + "' has order " + std::to_string(domain->order()));
  }
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values(i).real()) || !std::isfinite(values(i).imag())) {
      throw PreconditionError("function value at element " + std::to_string(i) + " is not finite");
    }
  }
}

Complex GroupFunction::operator()(int g1, int g2) const {
  const auto& f = require_product(domain, "GroupFunction(g1,g2)");
  return values(f.element(g1, g2));
}

void require_same_domain(const TablePtr& a, const TablePtr& b, const char* context) {
  if (!a || !b || !a->same_as(*b)) {
    throw DomainMismatch(std::string(context) + ": domain mismatch ('" + (a ? a->name() : "null") +
                         "' vs '" + (b ? b->name() : "null") + "')");
  }
}

const ProductFactors& require_product(const TablePtr& t, const char* context) {
  if (!t || !t->factors()) {
    throw DomainMismatch(std::string(context) + ": a product-group domain is required");
  }
  return *t->factors();
}

Matrix fourier_block(const GroupFunction& f, int alpha) {
  const Irrep& irrep = f.domain->irrep(alpha);
  Matrix acc = Matrix::Zero(irrep.dim, irrep.dim);
  for (int g = 0; g < f.domain->order(); ++g) acc.noalias() += f.values(g) * irrep.matrices[g].adjoint();
  return acc * (static_cast<double>(irrep.dim) / f.domain->order());
}

FourierBlocks fourier_forward(const GroupFunction& f) {
  if (!f.domain) throw DomainMismatch("fourier_forward: function has no domain");
  FourierBlocks out{f.domain, {}};
  out.blocks.reserve(f.domain->size());
  for (int alpha = 0; alpha < f.domain->size(); ++alpha) out.blocks.push_back(fourier_block(f, alpha));
  return out;
}

GroupFunction fourier_inverse(const FourierBlocks& b) {
  if (!b.domain) throw DomainMismatch("fourier_inverse: blocks have no domain");
  const IrrepTable& t = *b.domain;
  if (static_cast<int>(b.blocks.size()) != t.size()) {
    throw ShapeMismatch("fourier_inverse: expected " + std::to_string(t.size()) + " blocks, got " +
                        std::to_string(b.blocks.size()));
  }
  for (int alpha = 0; alpha < t.size(); ++alpha) {
    const int d = t.irrep(alpha).dim;
    if (b.blocks[alpha].rows() != d || b.blocks[alpha].cols() != d) {
      throw ShapeMismatch("fourier_inverse: block '" + t.irrep(alpha).label + "' must be " +
                          std::to_string(d) + "x" + std::to_string(d));
    }
  }
  Vector values = Vector::Zero(t.order());
  for (int g = 0; g < t.order(); ++g) {
    Complex v = 0.0;
    for (int alpha = 0; alpha < t.size(); ++alpha) {
      // tr[B π(g)] = Σ_ij B_ij π(g)_ji
      v += b.blocks[alpha].cwiseProduct(t.irrep(alpha).matrices[g].transpose()).sum();
    }
    values(g) = v;
  }
  return GroupFunction(b.domain, std::move(values));
}

FourierBlocks single_block(const TablePtr& domain, int alpha, const Matrix& block) {
  FourierBlocks out{domain, {}};
  for (int a = 0; a < domain->size(); ++a) {
    const int d = domain->irrep(a).dim;
    out.blocks.push_back(Matrix::Zero(d, d));
  }
  if (alpha < 0 || alpha >= domain->size()) throw DomainMismatch("single_block: irrep index out of range");
  if (block.rows() != domain->irrep(alpha).dim || block.cols() != domain->irrep(alpha).dim) {
    throw ShapeMismatch("single_block: block shape does not match irrep '" + domain->irrep(alpha).label + "'");
  }
  out.blocks[alpha] = block;
  return out;
}

GroupFunction characteristic_function(const Matrix& rho, const TablePtr& domain, int alpha,
                                      bool require_state) {
  if (alpha < 0 || alpha >= domain->size()) {
    throw DomainMismatch("characteristic_function: irrep index out of range");
  }
  const Irrep& irrep = domain->irrep(alpha);
  if (rho.rows() != irrep.dim || rho.cols() != irrep.dim) {
    throw ShapeMismatch("characteristic_function: operator is " + std::to_string(rho.rows()) + "x" +
                        std::to_string(rho.cols()) + " but irrep '" + irrep.label + "' has dim " +
                        std::to_string(irrep.dim));
  }
  if (require_state && std::abs(rho.trace() - 1.0) > 1e-9) {
    throw PreconditionError("characteristic_function: state must have unit trace");
  }
  Vector values(domain->order());
  for (int g = 0; g < domain->order(); ++g) {
    values(g) = rho.cwiseProduct(irrep.matrices[g].transpose()).sum();
  }
  return GroupFunction(domain, std::move(values));
}

GroupFunction characteristic_function(const Matrix& rho, const TablePtr& product, int alpha, int beta,
                                      bool require_state) {
  const auto& f = require_product(product, "characteristic_function");
  return characteristic_function(rho, product, f.irrep_index(alpha, beta), require_state);
}

GroupFunction pure_function(const TablePtr& domain, int alpha, const Vector& v) {
  const Irrep& irrep = domain->irrep(alpha);
  if (v.size() != irrep.dim) throw ShapeMismatch("pure_function: vector length differs from irrep dim");
  const Vector u = v.normalized();
  Vector values(domain->order());
  for (int g = 0; g < domain->order(); ++g) values(g) = u.dot(irrep.matrices[g] * u);
  return GroupFunction(domain, std::move(values));
}

GroupFunction tensor_product(const GroupFunction& left, const GroupFunction& right, const TablePtr& product) {
  const auto& f = require_product(product, "tensor_product");
  require_same_domain(left.domain, f.left, "tensor_product (left factor)");
  require_same_domain(right.domain, f.right, "tensor_product (right factor)");
  Vector values(product->order());
  for (int g1 = 0; g1 < f.left->order(); ++g1)
    for (int g2 = 0; g2 < f.right->order(); ++g2) values(f.element(g1, g2)) = left.values(g1) * right.values(g2);
  return GroupFunction(product, std::move(values));
}

}  // namespace groupent
