// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "groupent/detection.hpp"
#include "groupent/io.hpp"
#include "groupent/random.hpp"

using namespace groupent;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

double max_abs(const Matrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }
double max_abs(const Vector& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

GroupFunction random_pd(const TablePtr& t, Rng& rng) {
  FourierBlocks b{t, {}};
  for (const auto& ir : t->irreps())
    b.blocks.push_back(rng.uniform() < 0.25 ? Matrix::Zero(ir.dim, ir.dim) : rng.psd_matrix(ir.dim));
  return fourier_inverse(b);
}

GroupFunction random_not_pd(const TablePtr& t, Rng& rng) {
  FourierBlocks b{t, {}};
  for (const auto& ir : t->irreps()) b.blocks.push_back(rng.psd_matrix(ir.dim));
  const int a = rng.index(t->size());
  const Vector x = rng.unit_vector(t->irrep(a).dim);
  b.blocks[a] -= (b.blocks[a].norm() + 0.5 + rng.uniform()) * x * x.adjoint();
  return fourier_inverse(b);
}

Outcome fourier_bijectivity() {
  const TablePtr t = resolve_group("s3xs3");
  Rng rng(1);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const GroupFunction f(t, rng.gaussian_vector(t->order()));
    worst = std::max(worst, max_abs(Vector(fourier_inverse(fourier_forward(f)).values - f.values)));
  }
  return {worst <= 1e-10, fmt("max error %.3g", worst)};
}

Outcome block_gram_equivalence() {
  Rng rng(2);
  std::string detail;
  bool pass = true;
  for (const auto& [name, n] : {std::pair<std::string, int>{"s3", 200}, {"s3xs3", 100}}) {
    const TablePtr t = resolve_group(name);
    int agree = 0;
    for (int k = 0; k < n; ++k) {
      const GroupFunction f = k % 2 ? random_pd(t, rng) : random_not_pd(t, rng);
      agree += is_positive_definite(f, 1e-8).is_pd == pd_oracle_gram(f, 1e-8).is_pd;
    }
    pass &= agree == n;
    detail += name + " " + std::to_string(agree) + "/" + std::to_string(n) + " ";
  }
  return {pass, detail};
}

Outcome theta_block_law() {
  const TablePtr t = resolve_group("s3");
  const MapPtr theta = make_inversion(t);
  Rng rng(3);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const GroupFunction f(t, rng.gaussian_vector(t->order()));
    const FourierBlocks fb = fourier_forward(f), tb = fourier_forward(apply_map(*theta, f));
    for (int a = 0; a < t->size(); ++a)
      worst = std::max(worst, max_abs(Matrix(tb.blocks[t->conjugate(a)] - fb.blocks[a].transpose())));
  }
  return {worst <= 1e-10, fmt("max error %.3g", worst)};
}

Outcome ppt_detection() {
  const TablePtr t = resolve_group("s3xs3");
  const DetectionResult bell =
      detect_with_map(characteristic_function(bell_state(), t, 2, 2, true), *make_inversion(resolve_group("s3")));
  bool pass = bell.fired && std::abs(bell.eigenvalue + 0.5) <= 1e-9;
  std::string detail = fmt("bell eigenvalue %.17g; werner", bell.eigenvalue);
  for (const auto& [p, holds] : {std::pair<double, bool>{0.30, true}, {0.35, false}, {0.40, false}}) {
    const PPTResult r = check_ppt(characteristic_function(werner_state(p), t, 2, 2, true));
    pass &= r.holds == holds;
    detail += fmt(" p=%.2f:", p) + (r.holds ? "ppt" : "npt");
  }
  return {pass, detail};
}

Outcome cpd_classification() {
  const TablePtr t = resolve_group("s3");
  const MapClassification theta = classify_map(*make_inversion(t));
  double theta_min = 0.0;
  for (const auto& c : theta.choi)
    if (t->irrep(c.target_irrep).dim == 2 && t->irrep(c.source_irrep).dim == 2) theta_min = c.min_eigenvalue;
  bool pass = !theta.is_cpd && std::abs(theta_min + 1.0) <= 1e-9;
  std::vector<MapPtr> maps;
  for (const auto& p : automorphisms(t->group())) maps.push_back(make_automorphism(t, p));
  const bool six = maps.size() == 6;
  for (std::uint64_t s = 0; s < 20; ++s) maps.push_back(make_convolution(t, random_measure(t, 1 + s % 4, 100 + s)));
  int cpd = 0;
  double worst = 0.0;
  for (const MapPtr& m : maps) {
    const MapClassification c = classify_map(*m);
    cpd += c.is_cpd;
    for (const auto& e : c.choi) worst = std::min(worst, e.min_eigenvalue);
  }
  pass &= six && cpd == 26 && worst >= -1e-9;
  return {pass, fmt("theta choi min %.17g; %g/26 cpd, worst choi eigenvalue %.3g", theta_min, cpd, worst)};
}

Outcome detector_soundness() {
  const TablePtr g = resolve_group("s3"), t = resolve_group("s3xs3");
  const auto library = detector_library(g);
  std::vector<MapClassification> classes;
  for (const MapPtr& m : library) classes.push_back(classify_map(*m));
  int fired = 0;
  for (std::uint64_t s = 0; s < 200; ++s) {
    const GroupFunction f = make_separable_sample(t, 1 + static_cast<int>(s % 4), s);
    for (std::size_t k = 0; k < library.size(); ++k) fired += detect_with_map(f, *library[k], kDefaultTolerance, &classes[k]).fired;
  }
  return {fired == 0, std::to_string(library.size()) + " maps x 200 samples, " + std::to_string(fired) + " fired"};
}

Outcome gns_reconstruction() {
  const TablePtr t = resolve_group("s3");
  Rng rng(7);
  double worst = 0.0;
  int rank_mismatch = 0;
  for (int k = 0; k < 50; ++k) {
    GroupFunction f = random_pd(t, rng);
    while (f.values.norm() < 1e-9) f = random_pd(t, rng);
    const GNSData d = gns_construct(f);
    rank_mismatch += d.dimension != gram_rank(f);
    for (int g = 0; g < t->order(); ++g)
      worst = std::max(worst, std::abs(d.cyclic_vector.dot(d.representation[g] * d.cyclic_vector) - f(g)));
  }
  return {worst <= 1e-10 && rank_mismatch == 0,
          fmt("max error %.3g, %g rank mismatches", worst, rank_mismatch)};
}

Outcome characteristic_bridge() {
  const TablePtr t = resolve_group("s3xs3");
  const int idx = t->factors()->irrep_index(2, 2);
  Rng rng(8);
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const Matrix rho = rng.density_matrix(4);
    const FourierBlocks b = fourier_forward(characteristic_function(rho, t, idx, true));
    for (int a = 0; a < t->size(); ++a)
      worst = std::max(worst, max_abs(Matrix(a == idx ? Matrix(b.blocks[a] - rho) : b.blocks[a])));
  }
  return {worst <= 1e-10, fmt("max error %.3g", worst)};
}

Outcome anti_automorphism_factorization() {
  const TablePtr t = resolve_group("s3");
  const auto autos = automorphisms(t->group());
  const auto antis = anti_automorphisms(t->group());
  const MapPtr theta = make_inversion(t);
  Rng rng(9);
  double worst = 0.0;
  for (std::size_t k = 0; k < antis.size(); ++k) {
    // Each anti-automorphism is g ↦ α(g)⁻¹ for the automorphism α at the same index.
    const MapPtr anti = make_anti_automorphism(t, antis[k]);
    const MapPtr factored = compose(make_automorphism(t, autos[k]), theta);
    for (int n = 0; n < 50; ++n) {
      const GroupFunction f(t, rng.gaussian_vector(t->order()));
      worst = std::max(worst, max_abs(Vector(apply_map(*anti, f).values - apply_map(*factored, f).values)));
    }
  }
  return {worst <= 1e-10 && antis.size() == 6, fmt("%g anti-automorphisms, max error %.3g",
                                                    static_cast<double>(antis.size()), worst)};
}

Outcome two_qubit_exactness() {
  const TablePtr t = resolve_group("s3xs3");
  const int idx = t->factors()->irrep_index(2, 2);
  Rng rng(10);
  int agree = 0, entangled = 0, verified = 0;
  for (int k = 0; k < 500; ++k) {
    const Matrix rho = rng.density_matrix(4);
    const GroupFunction f = characteristic_function(rho, t, idx, true);
    const SeparabilityReport sep = check_separability(f);
    agree += (sep.verdict == SepVerdict::kSeparable) == check_ppt(f).holds && sep.verdict != SepVerdict::kPPTUndecided;
    if (sep.verdict == SepVerdict::kEntangled) {
      ++entangled;
      const double lam = sep.per_block[idx].min_pt_eigenvalue;
      const double again = min_hermitian_eigenvalue(partial_transpose(rho, 2, 2));
      verified += lam < 0.0 && std::abs(lam - again) <= 1e-10;
    }
  }
  return {agree == 500 && verified == entangled,
          fmt("%g/500 agree, %g/%g entangled verdicts re-verified", agree, verified, entangled)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    double limit_seconds;  // 0: no runtime bound
  };
  const std::vector<Criterion> criteria{
      {"fourier bijectivity", fourier_bijectivity, 1.0},
      {"block criterion equals gram oracle", block_gram_equivalence, 5.0},
      {"inversion block law", theta_block_law, 0.0},
      {"ppt detection", ppt_detection, 0.0},
      {"cpd classification", cpd_classification, 5.0},
      {"detector soundness on separable samples", detector_soundness, 0.0},
      {"gns reconstruction", gns_reconstruction, 0.0},
      {"characteristic function bridge", characteristic_bridge, 0.0},
      {"anti-automorphism factorization", anti_automorphism_factorization, 0.0},
      {"two-qubit exactness", two_qubit_exactness, 0.0},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criteria[i].limit_seconds > 0.0 && secs >= criteria[i].limit_seconds) {
      o.pass = false;
      o.detail += fmt(" (over %.0f s limit)", criteria[i].limit_seconds);
    }
    failures += !o.pass;
    std::printf("%s criterion %zu: %s: %s [%.3f s]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name,
                o.detail.c_str(), secs);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures ? 1 : 0;
}
