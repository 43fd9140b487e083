#include "lie/character.hpp"

#include <gtest/gtest.h>

#include <random>
#include <vector>

using namespace lie;

namespace {

FormalCharacter ch(std::initializer_list<std::pair<Weight, std::int64_t>> terms) {
  FormalCharacter out;
  for (auto& [w, c] : terms) out.add(w, c);
  return out;
}

DominantDecomposition dec(std::initializer_list<std::pair<Weight, std::int64_t>> terms) {
  DominantDecomposition out;
  for (auto& [w, c] : terms) out.add(w, c);
  return out;
}

std::vector<Weight> dominant_box(std::size_t rank, int bound) {
  std::vector<Weight> out{Weight(rank)};
  for (std::size_t i = 0; i < rank; ++i) {
    std::vector<Weight> next;
    for (const auto& w : out)
      for (int k = 0; k <= bound; ++k) {
        Weight v = w;
        v[i] = k;
        next.push_back(v);
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST(CharIrreducible, SmallExamples) {
  auto a1 = RootSystem::build("A1");
  CharacterRing r1(a1);
  EXPECT_EQ(r1.char_irreducible(Weight{1}), ch({{Weight{1}, 1}, {Weight{-1}, 1}}));
  EXPECT_EQ(r1.char_irreducible(Weight{2}), ch({{Weight{2}, 1}, {Weight{0}, 1}, {Weight{-2}, 1}}));

  auto a2 = RootSystem::build("A2");
  CharacterRing r2(a2);
  auto adj = r2.char_irreducible(Weight{1, 1});
  EXPECT_EQ(adj.mass(), 8);
  EXPECT_EQ((adj[Weight{0, 0}]), 2);
  EXPECT_EQ((adj[Weight{1, 1}]), 1);

  EXPECT_THROW(r2.char_irreducible(Weight{1, -1}), Error);
}

TEST(CharIrreducible, DimensionCap) {
  auto e8 = RootSystem::build("E8");
  Limits lim;
  lim.max_dim = 1000;
  CharacterRing ring(e8, lim);
  try {
    ring.char_irreducible(Weight{1, 0, 0, 0, 0, 0, 0, 0});  // 3875
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::cap_exceeded);
  }
}

TEST(DimIrreducible, Examples) {
  auto a1 = RootSystem::build("A1");
  CharacterRing r1(a1);
  for (int m = 0; m < 10; ++m) EXPECT_EQ(r1.dim_irreducible(Weight{m}), Integer(m + 1));
  auto d6 = RootSystem::build("D6");
  CharacterRing r6(d6);
  EXPECT_EQ(r6.dim_irreducible(Weight{0, 1, 0, 0, 0, 0}), Integer(66));
  EXPECT_EQ(r6.dim_irreducible(Weight(6)), Integer(1));
  auto e8 = RootSystem::build("E8");
  CharacterRing r8(e8);
  EXPECT_EQ(r8.dim_irreducible(Weight{1, 0, 0, 0, 0, 0, 0, 0}), Integer(3875));
  EXPECT_EQ(r8.dim_irreducible(Weight{0, 0, 0, 0, 0, 0, 0, 1}), Integer(248));
}

TEST(CharIrreducible, MassEqualsWeylDimensionAndOrbitConstancy) {
  for (auto name : {"A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4"}) {
    auto rs = RootSystem::build(name);
    CharacterRing ring(rs);
    for (const auto& lam : dominant_box(rs.rank(), rs.rank() <= 2 ? 3 : 1)) {
      if (ring.dim_irreducible(lam) > 50000) continue;
      auto c = ring.char_irreducible(lam);
      ASSERT_EQ(Integer(c.mass()), ring.dim_irreducible(lam)) << name << lam.str();
      EXPECT_EQ(c[lam], 1);
      for (const auto& [w, m] : c) {
        EXPECT_EQ(c[rs.dominant_representative(w).first], m);
        if (w.is_dominant()) {
          EXPECT_TRUE(rs.dominates(lam, w));
        }
      }
    }
  }
}

TEST(WeylNumerator, Examples) {
  auto a1 = RootSystem::build("A1");
  CharacterRing r1(a1);
  EXPECT_EQ(r1.weyl_numerator(Weight{0}), ch({{Weight{1}, 1}, {Weight{-1}, -1}}));
  EXPECT_EQ(r1.weyl_numerator(Weight{4}), ch({{Weight{5}, 1}, {Weight{-5}, -1}}));

  auto a2 = RootSystem::build("A2");
  CharacterRing r2(a2);
  auto num = r2.weyl_numerator(Weight{0, 0});
  EXPECT_EQ(num.size(), 6u);
  EXPECT_EQ(num.mass(), 0);
  EXPECT_EQ((num[Weight{1, 1}]), 1);
  EXPECT_EQ((num[Weight{-1, 2}]), -1);
  EXPECT_EQ((num[Weight{-1, -1}]), -1);  // w0 has length 3

  // antisymmetric under every simple reflection
  for (const auto& [w, c] : num)
    for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(num[a2.reflect(w, i)], -c);

  auto e8 = RootSystem::build("E8");
  CharacterRing r8(e8);
  EXPECT_THROW(r8.weyl_numerator(Weight(8)), Error);
}

TEST(WeylNumerator, CharacterFormulaIdentity) {
  for (auto name : {"A1", "A2", "B2", "G2", "A3"}) {
    auto rs = RootSystem::build(name);
    CharacterRing ring(rs);
    auto denom = ring.weyl_numerator(Weight(rs.rank()));
    for (const auto& lam : dominant_box(rs.rank(), 2))
      EXPECT_EQ(denom * ring.char_irreducible(lam), ring.weyl_numerator(lam)) << name << lam.str();
  }
}

TEST(TensorDecompose, ClebschGordan) {
  auto a1 = RootSystem::build("A1");
  CharacterRing r1(a1);
  EXPECT_EQ(r1.tensor_decompose(Weight{1}, Weight{1}), dec({{Weight{2}, 1}, {Weight{0}, 1}}));
  EXPECT_EQ(r1.tensor_decompose(Weight{2}, Weight{2}), dec({{Weight{4}, 1}, {Weight{2}, 1}, {Weight{0}, 1}}));

  auto a2 = RootSystem::build("A2");
  CharacterRing r2(a2);
  EXPECT_EQ(r2.tensor_decompose(Weight{1, 0}, Weight{0, 1}), dec({{Weight{1, 1}, 1}, {Weight{0, 0}, 1}}));
}

TEST(TensorDecompose, AgreesWithCharacterProductRoute) {
  std::mt19937 rng(11);
  for (auto name : {"A2", "B2", "G2", "A3", "C3", "B3"}) {
    auto rs = RootSystem::build(name);
    CharacterRing ring(rs);
    auto box = dominant_box(rs.rank(), rs.rank() <= 2 ? 2 : 1);
    for (int k = 0; k < 15; ++k) {
      const auto& lam = box[rng() % box.size()];
      const auto& mu = box[rng() % box.size()];
      auto klimyk = ring.tensor_decompose(lam, mu);
      auto product = ring.decompose(ring.char_irreducible(lam) * ring.char_irreducible(mu));
      ASSERT_EQ(klimyk, product) << name << lam.str() << mu.str();

      Integer total = 0;
      for (const auto& [nu, m] : klimyk) total += m * ring.dim_irreducible(nu);
      EXPECT_EQ(total, ring.dim_irreducible(lam) * ring.dim_irreducible(mu));
      EXPECT_EQ(klimyk, ring.tensor_decompose(mu, lam));
      EXPECT_EQ(ring.expand(klimyk), ring.char_irreducible(lam) * ring.char_irreducible(mu));
    }
  }
}

TEST(TensorDecompose, TrivialFactorAndDualPairing) {
  for (auto name : {"A3", "D4", "E6", "B3"}) {
    auto rs = RootSystem::build(name);
    CharacterRing ring(rs);
    auto box = dominant_box(rs.rank(), 1);
    for (const auto& lam : box) {
      if (ring.dim_irreducible(lam) > 2000) continue;
      DominantDecomposition id;
      id.add(lam, 1);
      EXPECT_EQ(ring.tensor_decompose(lam, Weight(rs.rank())), id);
      for (const auto& mu : box) {
        if (ring.dim_irreducible(mu) > 2000) continue;
        auto d = ring.tensor_decompose(lam, mu);
        EXPECT_EQ(d[Weight(rs.rank())], mu == rs.longest_element_dual(lam) ? 1 : 0) << name << lam.str() << mu.str();
      }
    }
  }
}

TEST(Decompose, ExtractionExamplesAndErrors) {
  auto a1 = RootSystem::build("A1");
  CharacterRing r1(a1);
  EXPECT_EQ(r1.decompose(r1.char_irreducible(Weight{3})), dec({{Weight{3}, 1}}));
  EXPECT_EQ(r1.decompose(r1.char_irreducible(Weight{3}) + r1.char_irreducible(Weight{1})),
            dec({{Weight{3}, 1}, {Weight{1}, 1}}));
  auto adj = r1.adjoint();
  EXPECT_EQ(r1.decompose(adj * adj), dec({{Weight{4}, 1}, {Weight{2}, 1}, {Weight{0}, 1}}));

  // V(2) - V(0) has a negative coefficient after extraction: {2:1, -2:1}
  try {
    r1.decompose(r1.char_irreducible(Weight{0}) - r1.char_irreducible(Weight{2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_module_character);
  }
  // not Weyl-invariant
  EXPECT_THROW(r1.decompose(ch({{Weight{1}, 1}})), Error);
  EXPECT_EQ(r1.decompose(FormalCharacter{}), DominantDecomposition{});
}

TEST(Adams, Examples) {
  auto a1 = RootSystem::build("A1");
  CharacterRing r1(a1);
  auto adj = r1.adjoint();
  EXPECT_EQ(r1.adams(1, adj), adj);
  EXPECT_EQ(r1.adams(2, adj), ch({{Weight{4}, 1}, {Weight{0}, 1}, {Weight{-4}, 1}}));
  EXPECT_THROW(r1.adams(0, adj), Error);

  auto b3 = RootSystem::build("B3");
  CharacterRing r3(b3);
  auto c = r3.char_irreducible(Weight{1, 0, 1});
  for (int k = 1; k < 5; ++k) EXPECT_EQ(r3.adams(k, c).mass(), c.mass());
}

TEST(Powers, ExamplesAndDimensions) {
  auto a1 = RootSystem::build("A1");
  CharacterRing r1(a1);
  auto adj = r1.adjoint();
  auto one = FormalCharacter::monomial(Weight{0});
  EXPECT_EQ(r1.sym_power(0, adj), one);
  EXPECT_EQ(r1.ext_power(0, adj), one);
  EXPECT_EQ(r1.ext_power(2, adj), adj);
  EXPECT_EQ(r1.decompose(r1.sym_power(2, adj)), dec({{Weight{4}, 1}, {Weight{0}, 1}}));
  EXPECT_EQ(r1.sym_power(2, adj).mass(), 6);
  EXPECT_TRUE(r1.ext_power(4, adj).empty());

  auto a2 = RootSystem::build("A2");
  CharacterRing r2(a2);
  auto g = r2.adjoint();
  // binomial dimensions
  const std::int64_t ext_dims[] = {1, 8, 28, 56, 70};
  const std::int64_t sym_dims[] = {1, 8, 36, 120, 330};
  for (std::size_t k = 0; k < 5; ++k) {
    EXPECT_EQ(r2.ext_power(k, g).mass(), ext_dims[k]);
    EXPECT_EQ(r2.sym_power(k, g).mass(), sym_dims[k]);
  }
}

TEST(Powers, GeneratingFunctionsAreInverse) {
  // (sum_k (-1)^k Ext^k t^k)(sum_k Sym^k t^k) = 1
  for (auto name : {"A1", "A2", "B2"}) {
    auto rs = RootSystem::build(name);
    CharacterRing ring(rs);
    auto v = ring.char_irreducible(Weight::unit(rs.rank(), 0));
    for (std::size_t m = 1; m <= 6; ++m) {
      FormalCharacter total;
      for (std::size_t k = 0; k <= m; ++k) {
        auto term = ring.ext_power(k, v) * ring.sym_power(m - k, v);
        if (k % 2 == 1) term *= -1;
        total += term;
      }
      EXPECT_TRUE(total.empty()) << name << " m=" << m;
    }
  }
}

TEST(Casimir, Examples) {
  auto a1 = RootSystem::build("A1");
  CharacterRing r1(a1);
  EXPECT_EQ(r1.casimir(Weight{0}), Rational(0));
  EXPECT_EQ(r1.casimir(Weight{2}), Rational(4));
  EXPECT_EQ(r1.casimir(Weight{1}), Rational(3, 2));
}

TEST(Casimir, StrictlyMonotoneAlongDominance) {
  for (auto name : {"A3", "B3", "C3", "G2", "D4"}) {
    auto rs = RootSystem::build(name);
    CharacterRing ring(rs);
    auto box = dominant_box(rs.rank(), 2);
    for (const auto& lam : box)
      for (const auto& mu : box)
        if (lam != mu && rs.dominates(lam, mu)) EXPECT_GT(ring.casimir(lam), ring.casimir(mu)) << name;
  }
}
