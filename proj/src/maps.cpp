#include "groupent/maps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "groupent/error.hpp"
#include "groupent/random.hpp"

namespace groupent {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_measure(const FiniteGroup& g, const Measure& mu) {
  for (const auto& p : mu) {
    if (p.element < 0 || p.element >= g.order()) {
      throw PreconditionError("measure point mass at element " + std::to_string(p.element) +
                              " outside the group");
    }
    if (!std::isfinite(p.weight.real()) || !std::isfinite(p.weight.imag())) {
      throw PreconditionError("measure weight is not finite");
    }
  }
}

Vector convolve(const FiniteGroup& g, const Measure& mu, const Vector& f) {
  Vector out = Vector::Zero(g.order());
  for (int x = 0; x < g.order(); ++x) {
    Complex acc = 0.0;
    for (const auto& a : mu) {
      const int ax = g.mul(a.element, x);
      for (const auto& b : mu) acc += std::conj(a.weight) * b.weight * f(g.mul(ax, g.inverse(b.element)));
    }
    out(x) = acc;
  }
  return out;
}

std::string default_name(const char* prefix, const std::string& name) { return name.empty() ? prefix : name; }

}  // namespace

const char* form_name(const MapForm& form) {
  return std::visit(overloaded{[](const InversionForm&) { return "inversion"; },
                               [](const AutomorphismForm&) { return "automorphism"; },
                               [](const AntiAutomorphismForm&) { return "anti_automorphism"; },
                               [](const ConvolutionForm&) { return "convolution"; },
                               [](const KrausSumForm&) { return "kraus_sum"; },
                               [](const BlockFamilyForm&) { return "block_family"; },
                               [](const CompositionForm&) { return "composition"; }},
                    form);
}

void validate(const PDMapSpec& m) {
  if (!m.source || !m.target) throw PreconditionError("map without source or target group");
  const bool endo = m.source->same_as(*m.target);
  auto require_endo = [&](const char* what) {
    if (!endo) throw DomainMismatch(std::string(what) + " maps need identical source and target groups");
  };
  std::visit(overloaded{
                 [&](const InversionForm&) { require_endo("inversion"); },
                 [&](const AutomorphismForm& a) {
                   require_endo("automorphism");
                   if (!is_automorphism(m.source->group(), a.permutation)) {
                     throw PreconditionError("permutation is not an automorphism: sigma(gh) != sigma(g)sigma(h)");
                   }
                 },
                 [&](const AntiAutomorphismForm& a) {
                   require_endo("anti-automorphism");
                   if (!is_anti_automorphism(m.source->group(), a.permutation)) {
                     throw PreconditionError(
                         "permutation is not an anti-automorphism: sigma(gh) != sigma(h)sigma(g)");
                   }
                 },
                 [&](const ConvolutionForm& c) {
                   require_endo("convolution");
                   check_measure(m.source->group(), c.measure);
                 },
                 [&](const KrausSumForm& k) {
                   require_endo("kraus_sum");
                   for (const auto& t : k.terms) {
                     if (!(t.weight >= 0.0) || !std::isfinite(t.weight)) {
                       throw PreconditionError("kraus_sum outer weights must be nonnegative");
                     }
                     check_measure(m.source->group(), t.measure);
                   }
                 },
                 [&](const BlockFamilyForm& b) {
                   const int ns = m.source->size();
                   const int nt = m.target->size();
                   if (static_cast<int>(b.blocks.size()) != ns * nt) {
                     throw ShapeMismatch("block family needs " + std::to_string(ns * nt) + " blocks");
                   }
                   for (int alpha = 0; alpha < nt; ++alpha)
                     for (int beta = 0; beta < ns; ++beta) {
                       const int n = m.target->irrep(alpha).dim;
                       const int k = m.source->irrep(beta).dim;
                       const Matrix& blk = b.blocks[alpha * ns + beta];
                       if (blk.rows() != n * n || blk.cols() != k * k) {
                         throw ShapeMismatch("block (" + m.target->irrep(alpha).label + "," +
                                             m.source->irrep(beta).label + ") must be " +
                                             std::to_string(n * n) + "x" + std::to_string(k * k));
                       }
                     }
                 },
                 [&](const CompositionForm& c) {
                   if (!c.outer || !c.inner) throw PreconditionError("composition with a null map");
                   validate(*c.outer);
                   validate(*c.inner);
                   if (!c.outer->source->same_as(*c.inner->target)) {
                     throw DomainMismatch("composition: outer source differs from inner target");
                   }
                   if (!c.inner->source->same_as(*m.source) || !c.outer->target->same_as(*m.target)) {
                     throw DomainMismatch("composition: endpoints differ from the declared source/target");
                   }
                 }},
             m.form);
}

namespace {

MapPtr finish(PDMapSpec spec) {
  validate(spec);
  return std::make_shared<const PDMapSpec>(std::move(spec));
}

}  // namespace

MapPtr make_inversion(const TablePtr& g) { return finish({g, g, InversionForm{}, "theta"}); }

MapPtr make_automorphism(const TablePtr& g, std::vector<int> permutation, std::string name) {
  return finish({g, g, AutomorphismForm{std::move(permutation)}, default_name("automorphism", name)});
}

MapPtr make_anti_automorphism(const TablePtr& g, std::vector<int> permutation, std::string name) {
  return finish({g, g, AntiAutomorphismForm{std::move(permutation)}, default_name("anti_automorphism", name)});
}

MapPtr make_convolution(const TablePtr& g, Measure measure, std::string name) {
  return finish({g, g, ConvolutionForm{std::move(measure)}, default_name("convolution", name)});
}

MapPtr make_kraus_sum(const TablePtr& g, std::vector<KrausTerm> terms, std::string name) {
  return finish({g, g, KrausSumForm{std::move(terms)}, default_name("kraus_sum", name)});
}

MapPtr make_block_family(const TablePtr& source, const TablePtr& target, std::vector<Matrix> blocks,
                         std::string name) {
  return finish({source, target, BlockFamilyForm{std::move(blocks)}, default_name("block_family", name)});
}

MapPtr compose(const MapPtr& outer, const MapPtr& inner, std::string name) {
  if (!outer || !inner) throw PreconditionError("compose: null map");
  return finish({inner->source, outer->target, CompositionForm{outer, inner},
                 name.empty() ? outer->name + "*" + inner->name : std::move(name)});
}

MapPtr blocks_to_map(const TablePtr& source, const TablePtr& target, int alpha, int beta, const Matrix& phi,
                     std::string name) {
  if (alpha < 0 || alpha >= target->size() || beta < 0 || beta >= source->size()) {
    throw DomainMismatch("blocks_to_map: irrep index out of range");
  }
  const int n = target->irrep(alpha).dim;
  const int k = source->irrep(beta).dim;
  if (phi.rows() != n * n || phi.cols() != k * k) {
    throw ShapeMismatch("blocks_to_map: super-operator must be " + std::to_string(n * n) + "x" +
                        std::to_string(k * k));
  }
  std::vector<Matrix> blocks;
  for (int a = 0; a < target->size(); ++a)
    for (int b = 0; b < source->size(); ++b) {
      const int na = target->irrep(a).dim;
      const int kb = source->irrep(b).dim;
      blocks.push_back(Matrix::Zero(na * na, kb * kb));
    }
  blocks[alpha * source->size() + beta] = phi;
  return make_block_family(source, target, std::move(blocks), name.empty() ? "block_map" : std::move(name));
}

std::string MapBlocks::label(int alpha, int beta) const {
  return target->irrep(alpha).label + "<-" + source->irrep(beta).label;
}

GroupFunction apply_map_via_blocks(const MapBlocks& mb, const GroupFunction& f) {
  require_same_domain(f.domain, mb.source, "apply_map");
  const FourierBlocks in = fourier_forward(f);
  FourierBlocks out{mb.target, {}};
  for (int alpha = 0; alpha < mb.target->size(); ++alpha) {
    const int n = mb.target->irrep(alpha).dim;
    Matrix acc = Matrix::Zero(n, n);
    for (int beta = 0; beta < mb.source->size(); ++beta) acc += apply_superoperator(mb.at(alpha, beta), in.blocks[beta]);
    out.blocks.push_back(std::move(acc));
  }
  return fourier_inverse(out);
}

GroupFunction apply_map(const PDMapSpec& m, const GroupFunction& f) {
  require_same_domain(f.domain, m.source, "apply_map");
  const FiniteGroup& g = m.source->group();
  return std::visit(
      overloaded{[&](const InversionForm&) {
                   Vector v(g.order());
                   for (int x = 0; x < g.order(); ++x) v(x) = f.values(g.inverse(x));
                   return GroupFunction(m.target, std::move(v));
                 },
                 [&](const AutomorphismForm& a) {
                   Vector v(g.order());
                   for (int x = 0; x < g.order(); ++x) v(x) = f.values(a.permutation[x]);
                   return GroupFunction(m.target, std::move(v));
                 },
                 [&](const AntiAutomorphismForm& a) {
                   Vector v(g.order());
                   for (int x = 0; x < g.order(); ++x) v(x) = f.values(a.permutation[x]);
                   return GroupFunction(m.target, std::move(v));
                 },
                 [&](const ConvolutionForm& c) { return GroupFunction(m.target, convolve(g, c.measure, f.values)); },
                 [&](const KrausSumForm& k) {
                   Vector v = Vector::Zero(g.order());
                   for (const auto& t : k.terms) v += t.weight * convolve(g, t.measure, f.values);
                   return GroupFunction(m.target, std::move(v));
                 },
                 [&](const BlockFamilyForm& b) {
                   return apply_map_via_blocks(MapBlocks{m.source, m.target, b.blocks}, f);
                 },
                 [&](const CompositionForm& c) { return apply_map(*c.outer, apply_map(*c.inner, f)); }},
      m.form);
}

MapBlocks map_to_blocks(const PDMapSpec& m) {
  validate(m);
  if (const auto* b = std::get_if<BlockFamilyForm>(&m.form)) return {m.source, m.target, b->blocks};

  MapBlocks out{m.source, m.target, {}};
  const int ns = m.source->size();
  const int nt = m.target->size();
  out.blocks.resize(static_cast<std::size_t>(ns) * nt);
  for (int alpha = 0; alpha < nt; ++alpha)
    for (int beta = 0; beta < ns; ++beta) {
      const int n = m.target->irrep(alpha).dim;
      const int k = m.source->irrep(beta).dim;
      out.blocks[alpha * ns + beta] = Matrix::Zero(n * n, k * k);
    }
  for (int beta = 0; beta < ns; ++beta) {
    const int k = m.source->irrep(beta).dim;
    for (int kk = 0; kk < k; ++kk)
      for (int ll = 0; ll < k; ++ll) {
        // Ẽ_kl at β is the transform of g ↦ τ^β_lk(g).
        Matrix e = Matrix::Zero(k, k);
        e(kk, ll) = 1.0;
        const GroupFunction image = apply_map(m, characteristic_function(e, m.source, beta));
        for (int alpha = 0; alpha < nt; ++alpha) {
          out.blocks[alpha * ns + beta].col(kk * k + ll) = vec_row_major(fourier_block(image, alpha));
        }
      }
  }
  return out;
}

GroupFunction apply_extended(const PDMapSpec& m, const GroupFunction& f) {
  const auto& factors = require_product(f.domain, "apply_extended");
  require_same_domain(factors.right, m.source, "apply_extended (second factor)");
  const TablePtr out_domain =
      m.target->same_as(*m.source) ? f.domain : product_group(factors.left, m.target);
  const auto& out_factors = *out_domain->factors();
  const int nh = factors.left->order();
  const int n_src = m.source->order();
  const int n_tgt = m.target->order();
  Vector values(out_domain->order());
  for (int h = 0; h < nh; ++h) {
    Vector slice(n_src);
    for (int g2 = 0; g2 < n_src; ++g2) slice(g2) = f.values(factors.element(h, g2));
    const GroupFunction image = apply_map(m, GroupFunction(m.source, std::move(slice)));
    for (int g1 = 0; g1 < n_tgt; ++g1) values(out_factors.element(h, g1)) = image.values(g1);
  }
  return GroupFunction(out_domain, std::move(values));
}

GroupFunction apply_extended_via_blocks(const MapBlocks& mb, const GroupFunction& f) {
  const auto& factors = require_product(f.domain, "apply_extended");
  require_same_domain(factors.right, mb.source, "apply_extended (second factor)");
  const TablePtr out_domain =
      mb.target->same_as(*mb.source) ? f.domain : product_group(factors.left, mb.target);
  const auto& out_factors = *out_domain->factors();
  const FourierBlocks in = fourier_forward(f);
  FourierBlocks out{out_domain, std::vector<Matrix>(out_domain->size())};
  const TablePtr& h = factors.left;
  for (int b = 0; b < h->size(); ++b) {
    const int nb = h->irrep(b).dim;
    for (int alpha = 0; alpha < mb.target->size(); ++alpha) {
      const int na = mb.target->irrep(alpha).dim;
      Matrix acc = Matrix::Zero(nb * na, nb * na);
      for (int beta = 0; beta < mb.source->size(); ++beta) {
        acc += apply_superoperator_extended(mb.at(alpha, beta), in.blocks[factors.irrep_index(b, beta)], nb);
      }
      out.blocks[out_factors.irrep_index(b, alpha)] = std::move(acc);
    }
  }
  return fourier_inverse(out);
}

const char* to_string(PDStatus s) {
  switch (s) {
    case PDStatus::kProvenPD:
      return "proven_pd";
    case PDStatus::kCounterexampleFound:
      return "counterexample_found";
    case PDStatus::kUndetermined:
      return "undetermined";
  }
  return "unknown";
}

namespace {

// PD follows from the structure for every form except user block families.
bool structurally_pd(const PDMapSpec& m, std::string& proof) {
  return std::visit(overloaded{[&](const InversionForm&) {
                                 proof = "inversion is an anti-automorphism map";
                                 return true;
                               },
                               [&](const AutomorphismForm&) {
                                 proof = "automorphism map";
                                 return true;
                               },
                               [&](const AntiAutomorphismForm&) {
                                 proof = "anti-automorphism map";
                                 return true;
                               },
                               [&](const ConvolutionForm&) {
                                 proof = "convolution map mu* f mu";
                                 return true;
                               },
                               [&](const KrausSumForm&) {
                                 proof = "nonnegative combination of convolution maps";
                                 return true;
                               },
                               [&](const BlockFamilyForm&) { return false; },
                               [&](const CompositionForm& c) {
                                 std::string a, b;
                                 const bool ok = structurally_pd(*c.outer, a) && structurally_pd(*c.inner, b);
                                 if (ok) proof = "composition of PD maps (" + a + "; " + b + ")";
                                 return ok;
                               }},
                    m.form);
}

struct ProbeResult {
  double eigenvalue;
  Vector state;
  bool hermitian;
};

ProbeResult probe(const Matrix& superop, const Vector& x, double herm_tol) {
  const Matrix image = apply_superoperator(superop, x * x.adjoint());
  return {min_hermitian_eigenvalue(image), x, antihermitian_norm(image) <= herm_tol};
}

// Alternating minimization of λ_min(Φ(xx†)): u ← argmin eigvec of Φ(xx†),
// x ← argmin eigvec of Φ*(uu†). Monotone non-increasing.
ProbeResult descend(const Matrix& superop, Vector x, int steps, double herm_tol) {
  const int n_in = exact_sqrt(superop.cols());
  const Matrix adjoint = superop.adjoint();
  ProbeResult best = probe(superop, x, herm_tol);
  for (int s = 0; s < steps; ++s) {
    const Matrix image = apply_superoperator(superop, x * x.adjoint());
    const Vector u = hermitian_spectrum(image).vectors.col(0);
    const Matrix back = unvec_row_major(adjoint * vec_row_major(u * u.adjoint()), n_in, n_in);
    const Vector next = hermitian_spectrum(back).vectors.col(0);
    const ProbeResult r = probe(superop, next, herm_tol);
    if (r.eigenvalue >= best.eigenvalue - 1e-15) {
      if (r.eigenvalue < best.eigenvalue) best = r;
      break;
    }
    best = r;
    x = next;
  }
  return best;
}

// Exact minimum of λ_min(Φ(xx†)) when one side of the block is one-dimensional.
ProbeResult exact_one_dimensional(const Matrix& superop, double herm_tol) {
  const int n_in = exact_sqrt(superop.cols());
  if (n_in == 1) return probe(superop, Vector::Ones(1), herm_tol);
  // Otherwise the output is 1-dimensional: Φ(xx†) = x† A x with A = Φ*(1).
  const Matrix a = unvec_row_major(superop.adjoint() * Vector::Ones(1), n_in, n_in);
  const auto spectrum = hermitian_spectrum(a);
  return probe(superop, spectrum.vectors.col(0), herm_tol);
}

// Finds x with Φ(xx†) non-Hermitian when Φ does not preserve Hermiticity.
std::optional<Vector> hermiticity_breaker(const Matrix& superop, int n_in, double herm_tol) {
  std::vector<Vector> candidates;
  for (int k = 0; k < n_in; ++k) {
    candidates.push_back(Vector::Unit(n_in, k));
    for (int l = k + 1; l < n_in; ++l) {
      Vector a = Vector::Unit(n_in, k) + Vector::Unit(n_in, l);
      Vector b = Vector::Unit(n_in, k) + Complex(0.0, 1.0) * Vector::Unit(n_in, l);
      candidates.push_back(a.normalized());
      candidates.push_back(b.normalized());
    }
  }
  for (const auto& x : candidates) {
    if (antihermitian_norm(apply_superoperator(superop, x * x.adjoint())) > herm_tol) return x;
  }
  return std::nullopt;
}

}  // namespace

MapClassification classify_map(const PDMapSpec& m, const SamplingBudget& budget, double tol) {
  const MapBlocks mb = map_to_blocks(m);
  MapClassification out;
  out.tolerance = tol;
  out.best_found_minimum = std::numeric_limits<double>::infinity();

  bool all_cp = true;
  for (int alpha = 0; alpha < mb.target->size(); ++alpha)
    for (int beta = 0; beta < mb.source->size(); ++beta) {
      const Matrix choi = choi_matrix(mb.at(alpha, beta));
      const double scaled = tol * (1.0 + choi.norm());
      ChoiEvidence ev{alpha, beta, mb.label(alpha, beta), min_hermitian_eigenvalue(choi),
                      antihermitian_norm(choi) <= scaled};
      if (!ev.hermitian || ev.min_eigenvalue < -scaled) all_cp = false;
      out.choi.push_back(std::move(ev));
    }
  out.is_cpd = all_cp;

  std::string proof;
  if (structurally_pd(m, proof)) {
    out.is_pd = PDStatus::kProvenPD;
    out.proof = proof;
    out.best_found_minimum = 0.0;
    return out;
  }
  if (out.is_cpd) {
    out.is_pd = PDStatus::kProvenPD;
    out.proof = "every block is completely positive";
    out.best_found_minimum = 0.0;
    return out;
  }

  Rng rng(budget.seed);
  bool all_exact = true;
  for (int alpha = 0; alpha < mb.target->size(); ++alpha)
    for (int beta = 0; beta < mb.source->size(); ++beta) {
      const Matrix& superop = mb.at(alpha, beta);
      const int n_in = mb.source->irrep(beta).dim;
      const int n_out = mb.target->irrep(alpha).dim;
      const double scaled = tol * (1.0 + superop.norm());
      const auto& ev = out.choi[alpha * mb.source->size() + beta];
      if (ev.min_eigenvalue >= -scaled && ev.hermitian) continue;  // completely positive block

      auto record = [&](const ProbeResult& r) {
        out.best_found_minimum = std::min(out.best_found_minimum, r.eigenvalue);
        const bool refutes = !r.hermitian || r.eigenvalue < -scaled;
        if (refutes && (!out.counterexample || r.eigenvalue < out.counterexample->eigenvalue)) {
          out.counterexample = PDCounterexample{alpha, beta, mb.label(alpha, beta), r.state, r.eigenvalue,
                                                r.hermitian};
        }
      };

      if (!ev.hermitian) {
        if (auto x = hermiticity_breaker(superop, n_in, scaled)) {
          record(probe(superop, *x, scaled));
          continue;
        }
      }
      if (n_in == 1 || n_out == 1) {
        record(exact_one_dimensional(superop, scaled));
        continue;
      }
      all_exact = false;
      std::vector<ProbeResult> best;
      for (int s = 0; s < budget.samples; ++s) {
        ProbeResult r = probe(superop, rng.unit_vector(n_in), scaled);
        best.push_back(std::move(r));
        if (static_cast<int>(best.size()) > budget.descent_starts) {
          auto worst = std::max_element(best.begin(), best.end(), [](const auto& a, const auto& b) {
            return a.eigenvalue < b.eigenvalue;
          });
          best.erase(worst);
        }
      }
      for (const auto& start : best) {
        record(start);
        record(descend(superop, start.state, budget.descent_steps, scaled));
      }
    }

  if (out.counterexample) {
    out.is_pd = PDStatus::kCounterexampleFound;
  } else if (all_exact) {
    out.is_pd = PDStatus::kProvenPD;
    out.proof = "every non-CP block has a one-dimensional side and is certified exactly";
  } else {
    out.is_pd = PDStatus::kUndetermined;
  }
  if (!std::isfinite(out.best_found_minimum)) out.best_found_minimum = 0.0;
  return out;
}

bool verify_counterexample(const MapBlocks& blocks, const PDCounterexample& ce, double tol) {
  if (ce.target_irrep < 0 || ce.target_irrep >= blocks.target->size() || ce.source_irrep < 0 ||
      ce.source_irrep >= blocks.source->size()) {
    return false;
  }
  const Matrix& superop = blocks.at(ce.target_irrep, ce.source_irrep);
  if (ce.state.size() != blocks.source->irrep(ce.source_irrep).dim) return false;
  const Vector x = ce.state.normalized();
  const Matrix image = apply_superoperator(superop, x * x.adjoint());
  const double scaled = tol * (1.0 + superop.norm());
  if (!ce.hermitian_image) return antihermitian_norm(image) > scaled;
  const double lambda = min_hermitian_eigenvalue(image);
  return lambda < -scaled && std::abs(lambda - ce.eigenvalue) <= scaled;
}

Measure random_measure(const TablePtr& g, int points, std::uint64_t seed) {
  Rng rng(seed);
  Measure mu;
  for (int i = 0; i < points; ++i) mu.push_back({rng.complex_normal(), rng.index(g->order())});
  return mu;
}

std::vector<MapPtr> detector_library(const TablePtr& g, std::uint64_t seed, int convolutions) {
  std::vector<MapPtr> maps;
  maps.push_back(make_inversion(g));
  const auto autos = automorphisms(g->group());
  for (std::size_t i = 0; i < autos.size(); ++i) {
    maps.push_back(make_automorphism(g, autos[i], "aut" + std::to_string(i)));
  }
  const auto antis = anti_automorphisms(g->group());
  for (std::size_t i = 0; i < antis.size(); ++i) {
    maps.push_back(make_anti_automorphism(g, antis[i], "anti" + std::to_string(i)));
  }
  for (int i = 0; i < convolutions; ++i) {
    maps.push_back(make_convolution(g, random_measure(g, 2 + i % 3, seed * 1000003ULL + i), "conv" + std::to_string(i)));
  }
  return maps;
}

}  // namespace groupent
