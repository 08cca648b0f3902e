#include "groupent/group.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <sstream>

#include "groupent/error.hpp"

namespace groupent {

namespace {

constexpr std::size_t kMaxViolationsPerAxiom = 16;

class ReportBuilder {
 public:
  void add(const std::string& axiom, const std::string& detail) {
    auto& n = counts_[axiom];
    if (n++ < kMaxViolationsPerAxiom) report_.push_back({axiom, detail});
  }
  VerificationReport take() { return std::move(report_); }

 private:
  VerificationReport report_;
  std::map<std::string, std::size_t> counts_;
};

std::string fmt_double(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

// Subgroup generated by the given elements (closure under right multiplication).
std::vector<char> closure(const FiniteGroup& g, const std::vector<int>& gens) {
  std::vector<char> in(g.order(), 0);
  std::deque<int> queue{g.identity()};
  in[g.identity()] = 1;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int s : gens) {
      const int y = g.mul(x, s);
      if (!in[y]) {
        in[y] = 1;
        queue.push_back(y);
      }
    }
  }
  return in;
}

int element_order(const FiniteGroup& g, int x) {
  int k = 1;
  for (int y = x; y != g.identity(); y = g.mul(y, x)) ++k;
  return k;
}

// Extends generator images to a map on all of g; empty on inconsistency.
std::vector<int> extend_homomorphism(const FiniteGroup& g, const std::vector<int>& gens,
                                     const std::vector<int>& images) {
  std::vector<int> map(g.order(), -1);
  map[g.identity()] = g.identity();
  std::deque<int> queue{g.identity()};
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const int y = g.mul(x, gens[i]);
      const int image = g.mul(map[x], images[i]);
      if (map[y] == -1) {
        map[y] = image;
        queue.push_back(y);
      } else if (map[y] != image) {
        return {};
      }
    }
  }
  return map;
}

}  // namespace

FiniteGroup::FiniteGroup(int order, std::vector<int> mul, std::vector<int> inverse, int identity,
                         std::vector<std::string> labels, std::string name)
    : order_(order),
      mul_(std::move(mul)),
      inverse_(std::move(inverse)),
      identity_(identity),
      labels_(std::move(labels)),
      name_(std::move(name)) {
  if (order_ < 1) throw ShapeMismatch("group order must be at least 1");
  if (mul_.size() != static_cast<std::size_t>(order_) * order_) {
    throw ShapeMismatch("multiplication table must have order*order entries");
  }
  if (inverse_.size() != static_cast<std::size_t>(order_)) {
    throw ShapeMismatch("inverse table must have order entries");
  }
  auto in_range = [this](int x) { return x >= 0 && x < order_; };
  if (!std::all_of(mul_.begin(), mul_.end(), in_range)) {
    throw ShapeMismatch("multiplication table entry outside 0..order-1");
  }
  if (!std::all_of(inverse_.begin(), inverse_.end(), in_range)) {
    throw ShapeMismatch("inverse table entry outside 0..order-1");
  }
  if (!in_range(identity_)) throw ShapeMismatch("identity outside 0..order-1");
  if (!labels_.empty() && labels_.size() != static_cast<std::size_t>(order_)) {
    throw ShapeMismatch("labels must be empty or have one entry per element");
  }
}

int ProductFactors::element(int g1, int g2) const { return g1 * right->order() + g2; }

std::pair<int, int> ProductFactors::split(int g) const {
  return {g / right->order(), g % right->order()};
}

int ProductFactors::irrep_index(int alpha, int beta) const { return alpha * right->size() + beta; }

IrrepTable::IrrepTable(FiniteGroup group, std::vector<Irrep> irreps)
    : group_(std::move(group)), irreps_(std::move(irreps)) {
  for (const auto& irrep : irreps_) {
    if (irrep.dim < 1) throw ShapeMismatch("irrep '" + irrep.label + "' has non-positive dim");
    if (irrep.matrices.size() != static_cast<std::size_t>(group_.order())) {
      throw ShapeMismatch("irrep '" + irrep.label + "' needs one matrix per group element");
    }
    for (const auto& m : irrep.matrices) {
      if (m.rows() != irrep.dim || m.cols() != irrep.dim) {
        throw ShapeMismatch("irrep '" + irrep.label + "': matrix shape differs from declared dim " +
                            std::to_string(irrep.dim));
      }
    }
  }
  // Conjugate pairing by character matching; basis-free.
  conjugates_.assign(irreps_.size(), -1);
  for (std::size_t a = 0; a < irreps_.size(); ++a) {
    for (std::size_t b = 0; b < irreps_.size(); ++b) {
      if (irreps_[a].dim != irreps_[b].dim) continue;
      bool match = true;
      for (int g = 0; g < group_.order() && match; ++g) {
        match = std::abs(std::conj(irreps_[a].character(g)) - irreps_[b].character(g)) <= 1e-8;
      }
      if (match) {
        conjugates_[a] = static_cast<int>(b);
        break;
      }
    }
  }
}

int IrrepTable::find_irrep(std::string_view label) const {
  for (std::size_t i = 0; i < irreps_.size(); ++i)
    if (irreps_[i].label == label) return static_cast<int>(i);
  throw DomainMismatch("group '" + name() + "' has no irrep labelled '" + std::string(label) + "'");
}

bool IrrepTable::same_as(const IrrepTable& other) const {
  if (this == &other) return true;
  if (!(group_ == other.group_) || irreps_.size() != other.irreps_.size()) return false;
  for (std::size_t a = 0; a < irreps_.size(); ++a) {
    if (irreps_[a].dim != other.irreps_[a].dim) return false;
    for (int g = 0; g < order(); ++g)
      if (irreps_[a].matrices[g] != other.irreps_[a].matrices[g]) return false;
  }
  return true;
}

VerificationReport verify_group(const FiniteGroup& g) {
  ReportBuilder report;
  const int n = g.order();
  const int e = g.identity();
  for (int a = 0; a < n; ++a) {
    if (g.mul(e, a) != a || g.mul(a, e) != a) {
      report.add("identity", "e*g or g*e differs from g for g=" + std::to_string(a));
    }
    const int inv = g.inverse(a);
    if (g.mul(a, inv) != e || g.mul(inv, a) != e) {
      report.add("inverse", "inv(" + std::to_string(a) + ")=" + std::to_string(inv) +
                                " is not a two-sided inverse");
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
          report.add("associativity", "(ab)c != a(bc) for (a,b,c)=(" + std::to_string(a) + "," +
                                          std::to_string(b) + "," + std::to_string(c) + ")");
        }
  return report.take();
}

VerificationReport verify_irrep_table(const IrrepTable& t, double tol) {
  VerificationReport base = verify_group(t.group());
  ReportBuilder report;
  for (auto& v : base) report.add(v.axiom, v.detail);

  const FiniteGroup& g = t.group();
  const int n = g.order();
  for (const auto& irrep : t.irreps()) {
    const Matrix id = Matrix::Identity(irrep.dim, irrep.dim);
    if ((irrep.matrices[g.identity()] - id).cwiseAbs().maxCoeff() > tol) {
      report.add("identity_representation", "pi(e) != I for irrep '" + irrep.label + "'");
    }
    double hom_err = 0.0;
    double unit_err = 0.0;
    for (int a = 0; a < n; ++a) {
      unit_err = std::max(unit_err,
                          (irrep.matrices[a] * irrep.matrices[a].adjoint() - id).cwiseAbs().maxCoeff());
      for (int b = 0; b < n; ++b) {
        hom_err = std::max(hom_err, (irrep.matrices[a] * irrep.matrices[b] - irrep.matrices[g.mul(a, b)])
                                        .cwiseAbs()
                                        .maxCoeff());
      }
    }
    if (hom_err > tol) {
      report.add("homomorphism", "irrep '" + irrep.label + "': max error " + fmt_double(hom_err));
    }
    if (unit_err > tol) {
      report.add("unitarity", "irrep '" + irrep.label + "': max error " + fmt_double(unit_err));
    }
  }

  int dim_sq = 0;
  for (const auto& irrep : t.irreps()) dim_sq += irrep.dim * irrep.dim;
  if (dim_sq != n) {
    report.add("completeness", "sum of squared dims " + std::to_string(dim_sq) + " != order " +
                                   std::to_string(n));
  }

  // Characters: norms and pairwise overlaps.
  const double inv_n = 1.0 / n;
  for (int a = 0; a < t.size(); ++a) {
    for (int b = a; b < t.size(); ++b) {
      Complex overlap = 0.0;
      for (int x = 0; x < n; ++x) overlap += t.irrep(a).character(x) * std::conj(t.irrep(b).character(x));
      overlap *= inv_n;
      if (a == b && std::abs(overlap - 1.0) > tol) {
        report.add("irreducibility", "irrep '" + t.irrep(a).label + "': character norm " +
                                         fmt_double(overlap.real()) + " != 1");
      }
      if (a != b && std::abs(overlap) > tol) {
        report.add("inequivalence", "irreps '" + t.irrep(a).label + "' and '" + t.irrep(b).label +
                                        "' have character overlap " + fmt_double(std::abs(overlap)));
      }
    }
  }

  // Schur orthogonality of matrix elements.
  for (int a = 0; a < t.size(); ++a) {
    for (int b = a; b < t.size(); ++b) {
      const Irrep& pa = t.irrep(a);
      const Irrep& pb = t.irrep(b);
      double err = 0.0;
      for (int i = 0; i < pa.dim; ++i)
        for (int j = 0; j < pa.dim; ++j)
          for (int k = 0; k < pb.dim; ++k)
            for (int l = 0; l < pb.dim; ++l) {
              Complex s = 0.0;
              for (int x = 0; x < n; ++x) s += pa.matrices[x](i, j) * std::conj(pb.matrices[x](k, l));
              s *= inv_n;
              const double expected = (a == b && i == k && j == l) ? 1.0 / pa.dim : 0.0;
              err = std::max(err, std::abs(s - expected));
            }
      if (err > tol) {
        report.add("schur_orthogonality", "irreps '" + pa.label + "','" + pb.label + "': max error " +
                                              fmt_double(err));
      }
    }
  }
  return report.take();
}

TablePtr product_group(const TablePtr& left, const TablePtr& right, double tol) {
  if (!left || !right) throw PreconditionError("product_group: null factor table");
  for (const auto* t : {left.get(), right.get()}) {
    const auto report = verify_irrep_table(*t, tol);
    if (!report.empty()) {
      throw PreconditionError("product_group: factor '" + t->name() + "' fails verification (" +
                              report.front().axiom + ": " + report.front().detail + ")");
    }
  }
  const FiniteGroup& g1 = left->group();
  const FiniteGroup& g2 = right->group();
  const int n1 = g1.order();
  const int n2 = g2.order();
  const int n = n1 * n2;
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  std::vector<int> inverse(n);
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    const int a1 = a / n2, a2 = a % n2;
    inverse[a] = g1.inverse(a1) * n2 + g2.inverse(a2);
    labels[a] = "(" + (g1.labels().empty() ? std::to_string(a1) : g1.labels()[a1]) + "," +
                (g2.labels().empty() ? std::to_string(a2) : g2.labels()[a2]) + ")";
    for (int b = 0; b < n; ++b) {
      const int b1 = b / n2, b2 = b % n2;
      mul[static_cast<std::size_t>(a) * n + b] = g1.mul(a1, b1) * n2 + g2.mul(a2, b2);
    }
  }
  FiniteGroup group(n, std::move(mul), std::move(inverse), g1.identity() * n2 + g2.identity(),
                    std::move(labels), g1.name() + "x" + g2.name());

  ProductFactors factors{left, right, {}};
  std::vector<Irrep> irreps;
  for (int alpha = 0; alpha < left->size(); ++alpha) {
    for (int beta = 0; beta < right->size(); ++beta) {
      const Irrep& pa = left->irrep(alpha);
      const Irrep& pb = right->irrep(beta);
      Irrep irrep;
      irrep.label = pa.label + "," + pb.label;
      irrep.dim = pa.dim * pb.dim;
      irrep.matrices.reserve(n);
      for (int x = 0; x < n; ++x) irrep.matrices.push_back(kron(pa.matrices[x / n2], pb.matrices[x % n2]));
      irreps.push_back(std::move(irrep));
      factors.irrep_pairs.emplace_back(alpha, beta);
    }
  }
  auto table = std::make_shared<IrrepTable>(std::move(group), std::move(irreps));
  table->factors_ = std::move(factors);
  return table;
}

bool is_automorphism(const FiniteGroup& g, const std::vector<int>& perm) {
  const int n = g.order();
  if (perm.size() != static_cast<std::size_t>(n)) return false;
  std::vector<char> seen(n, 0);
  for (int x : perm) {
    if (x < 0 || x >= n || seen[x]) return false;
    seen[x] = 1;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (perm[g.mul(a, b)] != g.mul(perm[a], perm[b])) return false;
  return true;
}

bool is_anti_automorphism(const FiniteGroup& g, const std::vector<int>& perm) {
  const int n = g.order();
  if (perm.size() != static_cast<std::size_t>(n)) return false;
  std::vector<char> seen(n, 0);
  for (int x : perm) {
    if (x < 0 || x >= n || seen[x]) return false;
    seen[x] = 1;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (perm[g.mul(a, b)] != g.mul(perm[b], perm[a])) return false;
  return true;
}

std::vector<int> generating_set(const FiniteGroup& g) {
  std::vector<int> gens;
  std::vector<char> covered = closure(g, gens);
  for (int x = 0; x < g.order(); ++x) {
    if (covered[x]) continue;
    gens.push_back(x);
    covered = closure(g, gens);
  }
  return gens;
}

std::vector<std::vector<int>> automorphisms(const FiniteGroup& g) {
  const std::vector<int> gens = generating_set(g);
  std::vector<int> orders(g.order());
  for (int x = 0; x < g.order(); ++x) orders[x] = element_order(g, x);

  std::vector<std::vector<int>> result;
  std::vector<int> images(gens.size(), 0);
  // Odometer over candidate images with matching element orders.
  auto search = [&](auto&& self, std::size_t depth) -> void {
    if (depth == gens.size()) {
      auto map = extend_homomorphism(g, gens, images);
      if (!map.empty() && is_automorphism(g, map)) result.push_back(std::move(map));
      return;
    }
    for (int y = 0; y < g.order(); ++y) {
      if (orders[y] != orders[gens[depth]]) continue;
      images[depth] = y;
      self(self, depth + 1);
    }
  };
  search(search, 0);
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  // Identity first.
  std::vector<int> id(g.order());
  for (int x = 0; x < g.order(); ++x) id[x] = x;
  auto it = std::find(result.begin(), result.end(), id);
  if (it != result.end()) std::rotate(result.begin(), it, it + 1);
  return result;
}

std::vector<std::vector<int>> anti_automorphisms(const FiniteGroup& g) {
  auto autos = automorphisms(g);
  for (auto& perm : autos)
    for (auto& x : perm) x = g.inverse(x);
  return autos;
}

}  // namespace groupent
