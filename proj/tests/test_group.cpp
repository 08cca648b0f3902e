#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "groupent/error.hpp"
#include "support.hpp"

using namespace groupent;
using support::s3;

namespace {

FiniteGroup cyclic(int n) {
  std::vector<int> mul(n * n), inv(n);
  for (int a = 0; a < n; ++a) {
    inv[a] = (n - a) % n;
    for (int b = 0; b < n; ++b) mul[a * n + b] = (a + b) % n;
  }
  return FiniteGroup(n, mul, inv, 0, {}, "z" + std::to_string(n));
}

bool has_axiom(const VerificationReport& r, const std::string& axiom) {
  return std::any_of(r.begin(), r.end(), [&](const Violation& v) { return v.axiom == axiom; });
}

}  // namespace

TEST(VerifyGroup, CyclicZ4IsValid) { EXPECT_TRUE(verify_group(cyclic(4)).empty()); }

TEST(VerifyGroup, CorruptedZ4EntryIsReported) {
  std::vector<int> mul = cyclic(4).mul_table();
  mul[1 * 4 + 2] = 0;  // 1+2 should be 3
  const VerificationReport r = verify_group(FiniteGroup(4, mul, cyclic(4).inverse_table(), 0));
  ASSERT_FALSE(r.empty());
  EXPECT_TRUE(has_axiom(r, "associativity") || has_axiom(r, "inverse"));
}

TEST(VerifyGroup, EveryCorruptionOfZ4IsCaught) {
  const FiniteGroup z4 = cyclic(4);
  for (int cell = 0; cell < 16; ++cell) {
    for (int value = 0; value < 4; ++value) {
      std::vector<int> mul = z4.mul_table();
      if (mul[cell] == value) continue;
      mul[cell] = value;
      EXPECT_FALSE(verify_group(FiniteGroup(4, mul, z4.inverse_table(), 0)).empty()) << cell << "->" << value;
    }
  }
}

TEST(VerifyGroup, WrongInverseIsReported) {
  std::vector<int> inv = cyclic(5).inverse_table();
  std::swap(inv[1], inv[2]);
  EXPECT_TRUE(has_axiom(verify_group(FiniteGroup(5, cyclic(5).mul_table(), inv, 0)), "inverse"));
}

TEST(VerifyGroup, ShapeErrorsThrow) {
  EXPECT_THROW(FiniteGroup(3, std::vector<int>(8, 0), {0, 2, 1}, 0), ShapeMismatch);
  EXPECT_THROW(FiniteGroup(2, {0, 1, 1, 2}, {0, 1}, 0), ShapeMismatch);
  EXPECT_THROW(FiniteGroup(2, {0, 1, 1, 0}, {0, 1}, 2), ShapeMismatch);
}

TEST(VerifyIrrepTable, BundledGroupsAreExactAtTightTolerance) {
  for (const std::string& name : bundled_group_names()) {
    const TablePtr t = resolve_group(name);
    EXPECT_TRUE(verify_group(t->group()).empty()) << name;
    const VerificationReport r = verify_irrep_table(*t, 1e-10);
    EXPECT_TRUE(r.empty()) << name << ": " << (r.empty() ? "" : r.front().axiom + " " + r.front().detail);
  }
}

TEST(VerifyIrrepTable, S3DimensionsAndCompleteness) {
  const TablePtr t = s3();
  std::vector<int> dims;
  for (const auto& ir : t->irreps()) dims.push_back(ir.dim);
  EXPECT_EQ(dims, (std::vector<int>{1, 1, 2}));
  EXPECT_EQ(std::accumulate(dims.begin(), dims.end(), 0, [](int s, int d) { return s + d * d; }), 6);
}

TEST(VerifyIrrepTable, Q8DimensionsAndCompleteness) {
  const TablePtr t = resolve_group("q8");
  std::vector<int> dims;
  for (const auto& ir : t->irreps()) dims.push_back(ir.dim);
  EXPECT_EQ(dims, (std::vector<int>{1, 1, 1, 1, 2}));
  EXPECT_TRUE(verify_irrep_table(*t).empty());
}

TEST(VerifyIrrepTable, S3StdCharacterMatchesPermutationOracle) {
  const TablePtr t = s3();
  const Irrep& std2 = t->irrep(t->find_irrep("std"));
  const Irrep& sign = t->irrep(t->find_irrep("sign"));
  for (int g = 0; g < t->order(); ++g) {
    const std::string& label = t->group().labels()[g];
    EXPECT_NEAR(std::abs(std2.character(g) - support::s3_std_character(label)), 0.0, 1e-12) << label;
    EXPECT_NEAR(std::abs(sign.character(g) - support::s3_sign(label)), 0.0, 1e-12) << label;
  }
}

TEST(VerifyIrrepTable, ReducibleReplacementFailsIrreducibility) {
  const TablePtr t = s3();
  std::vector<Irrep> irreps = t->irreps();
  // triv ⊕ sign in place of the 2-dim irrep: character norm 2.
  Irrep reducible{"std", 2, {}};
  for (int g = 0; g < t->order(); ++g) {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = support::s3_sign(t->group().labels()[g]);
    reducible.matrices.push_back(m);
  }
  irreps[t->find_irrep("std")] = reducible;
  const IrrepTable broken(t->group(), irreps);
  const VerificationReport r = verify_irrep_table(broken);
  ASSERT_TRUE(has_axiom(r, "irreducibility"));
  const auto it = std::find_if(r.begin(), r.end(), [](const Violation& v) { return v.axiom == "irreducibility"; });
  EXPECT_NE(it->detail.find("2"), std::string::npos) << it->detail;
}

TEST(VerifyIrrepTable, DimensionMismatchThrows) {
  const TablePtr t = s3();
  std::vector<Irrep> irreps = t->irreps();
  irreps[0].dim = 2;
  EXPECT_THROW(IrrepTable(t->group(), irreps), ShapeMismatch);
}

TEST(VerifyIrrepTable, NonHomomorphismIsReported) {
  const TablePtr t = s3();
  std::vector<Irrep> irreps = t->irreps();
  irreps[t->find_irrep("sign")].matrices[1] *= -1.0;
  EXPECT_TRUE(has_axiom(verify_irrep_table(IrrepTable(t->group(), irreps)), "homomorphism"));
}

TEST(ProductGroup, S3xS3Blocks) {
  const TablePtr p = support::s3s3();
  ASSERT_EQ(p->size(), 9);
  int total = 0;
  std::vector<int> dims;
  for (const auto& ir : p->irreps()) {
    dims.push_back(ir.dim);
    total += ir.dim * ir.dim;
  }
  EXPECT_EQ(dims, (std::vector<int>{1, 1, 2, 1, 1, 2, 2, 2, 4}));
  EXPECT_EQ(total, 36);
  EXPECT_TRUE(verify_irrep_table(*p).empty());
}

TEST(ProductGroup, Z2xZ2IsAbelian) {
  const TablePtr p = resolve_group("z2xz2");
  ASSERT_EQ(p->size(), 4);
  for (const auto& ir : p->irreps()) EXPECT_EQ(ir.dim, 1);
}

TEST(ProductGroup, S3xZ2Dims) {
  const TablePtr p = product_group(s3(), resolve_group("z2"));
  std::vector<int> dims;
  for (const auto& ir : p->irreps()) dims.push_back(ir.dim);
  EXPECT_EQ(dims, (std::vector<int>{1, 1, 1, 1, 2, 2}));
}

TEST(ProductGroup, CharacterFactorizes) {
  const TablePtr p = support::s3s3();
  const ProductFactors& pf = *p->factors();
  for (int idx = 0; idx < p->size(); ++idx) {
    const auto [a, b] = pf.irrep_pairs[idx];
    for (int g1 = 0; g1 < 6; ++g1)
      for (int g2 = 0; g2 < 6; ++g2) {
        const Complex expect = pf.left->irrep(a).character(g1) * pf.right->irrep(b).character(g2);
        EXPECT_NEAR(std::abs(p->irrep(idx).character(pf.element(g1, g2)) - expect), 0.0, 1e-12);
      }
  }
}

TEST(ProductGroup, RejectsUnverifiedFactor) {
  const TablePtr t = s3();
  std::vector<Irrep> irreps = t->irreps();
  irreps[1].matrices[2] *= -1.0;
  const auto broken = std::make_shared<const IrrepTable>(t->group(), irreps);
  EXPECT_THROW(product_group(broken, t), PreconditionError);
}

TEST(Characters, ConstantOnConjugacyClasses) {
  for (const std::string& name : bundled_group_names()) {
    const TablePtr t = resolve_group(name);
    const FiniteGroup& g = t->group();
    for (const auto& ir : t->irreps())
      for (int x = 0; x < g.order(); ++x)
        for (int h = 0; h < g.order(); ++h) {
          const int conj = g.mul(g.mul(h, x), g.inverse(h));
          EXPECT_NEAR(std::abs(ir.character(x) - ir.character(conj)), 0.0, 1e-12) << name;
        }
  }
}

TEST(Conjugates, PairingMatchesConjugateCharacters) {
  for (const std::string& name : {"z3", "z5", "q8", "s3"}) {
    const TablePtr t = resolve_group(name);
    for (int a = 0; a < t->size(); ++a) {
      const int b = t->conjugate(a);
      ASSERT_GE(b, 0);
      for (int g = 0; g < t->order(); ++g) {
        EXPECT_NEAR(std::abs(t->irrep(b).character(g) - std::conj(t->irrep(a).character(g))), 0.0, 1e-12);
      }
    }
  }
  EXPECT_NE(resolve_group("z3")->conjugate(1), 1);
}

TEST(Automorphisms, S3HasSixOfEachKind) {
  const FiniteGroup& g = s3()->group();
  const auto autos = automorphisms(g);
  const auto antis = anti_automorphisms(g);
  ASSERT_EQ(autos.size(), 6u);
  ASSERT_EQ(antis.size(), 6u);
  std::vector<int> id(6);
  std::iota(id.begin(), id.end(), 0);
  EXPECT_EQ(autos.front(), id);
  for (const auto& a : autos) EXPECT_TRUE(is_automorphism(g, a));
  for (const auto& a : antis) EXPECT_TRUE(is_anti_automorphism(g, a));
}

TEST(Automorphisms, CountsForAbelianGroups) {
  // |Aut(Z_n)| = φ(n); |Aut(Z2×Z2)| = 6.
  EXPECT_EQ(automorphisms(resolve_group("z5")->group()).size(), 4u);
  EXPECT_EQ(automorphisms(resolve_group("z6")->group()).size(), 2u);
  EXPECT_EQ(automorphisms(resolve_group("z2xz2")->group()).size(), 6u);
  EXPECT_EQ(automorphisms(resolve_group("d4")->group()).size(), 8u);
  EXPECT_EQ(automorphisms(resolve_group("q8")->group()).size(), 24u);
}

TEST(Automorphisms, RejectsNonHomomorphism) {
  const FiniteGroup& g = s3()->group();
  EXPECT_FALSE(is_automorphism(g, {0, 2, 1, 3, 4, 5}));
  EXPECT_FALSE(is_automorphism(g, {0, 0, 1, 2, 3, 4}));
}
