#include "lie/character.hpp"
#include "lie/root_system.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <string>
#include <vector>

using namespace lie;

namespace {

const std::vector<std::string> kAllTypes = {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "B2", "B3", "B4",
                                            "B5", "B6", "B7", "B8", "C2", "C3", "C4", "C5", "C6", "C7", "C8",
                                            "D4", "D5", "D6", "D7", "D8", "E6", "E7", "E8", "F4", "G2"};

// table oracle: number of positive roots
std::size_t expected_positive_roots(const CartanType& t) {
  const std::size_t n = t.rank;
  switch (t.family) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
    case 'F': return 24;
    case 'G': return 6;
  }
  return 0;
}

Weight random_weight(std::mt19937& rng, std::size_t rank, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  Weight w(rank);
  for (std::size_t i = 0; i < rank; ++i) w[i] = d(rng);
  return w;
}

}  // namespace

TEST(CartanType, ParsesAdmissibleTypes) {
  EXPECT_EQ(CartanType::parse("E8").rank, 8);
  EXPECT_EQ(CartanType::parse("g2").family, 'G');
  for (auto bad : {"A0", "B1", "C1", "D3", "E5", "E9", "F3", "G3", "X2", "", "A", "A1x"})
    EXPECT_THROW(CartanType::parse(bad), Error) << bad;
  try {
    RootSystem::build("D3");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::invalid_type);
  }
}

TEST(RootSystem, RankOneData) {
  auto rs = RootSystem::build("A1");
  ASSERT_EQ(rs.positive_roots().size(), 1u);
  EXPECT_EQ(rs.highest_root().simple, (Weight{1}));
  EXPECT_EQ(rs.highest_root().weight, (Weight{2}));
  EXPECT_EQ(rs.rho(), (Weight{1}));
}

TEST(RootSystem, A2AndG2HighestRoots) {
  auto a2 = RootSystem::build("A2");
  EXPECT_EQ(a2.positive_roots().size(), 3u);
  EXPECT_EQ(a2.highest_root().simple, (Weight{1, 1}));

  // node 1 long: theta = 2a1 + 3a2, which is the fundamental weight w1
  auto g2 = RootSystem::build("G2");
  EXPECT_EQ(g2.positive_roots().size(), 6u);
  EXPECT_EQ(g2.highest_root().simple, (Weight{2, 3}));
  EXPECT_EQ(g2.highest_root().weight, (Weight{1, 0}));
}

TEST(RootSystem, InnerProductExamples) {
  auto a2 = RootSystem::build("A2");
  RootVector a1{{1, 0}}, a2v{{0, 1}};
  EXPECT_EQ(a2.inner_product(a1, a2v), Rational(-1));

  auto g2 = RootSystem::build("G2");
  RootVector s{{0, 1}};
  EXPECT_EQ(g2.inner_product(s, s), Rational(2, 3));
}

TEST(RootSystem, TableInvariantsForEveryType) {
  for (const auto& name : kAllTypes) {
    SCOPED_TRACE(name);
    auto rs = RootSystem::build(name);
    const auto n = rs.rank();
    CharacterRing ring(rs);

    EXPECT_EQ(rs.positive_roots().size(), expected_positive_roots(rs.type()));

    // theta has squared length 2 and is the unique maximal positive root
    const auto& theta = rs.highest_root();
    EXPECT_EQ(rs.inner_product(theta.weight, theta.weight), Rational(2));
    for (const auto& a : rs.positive_roots()) {
      EXPECT_TRUE(rs.dominates(theta.weight, a.weight));
      for (auto c : a.simple) EXPECT_GE(c, 0);
    }

    // cartan(i,j) = 2(a_i,a_j)/(a_j,a_j)
    const auto& f = rs.form_matrix();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        EXPECT_EQ(f(i, j), f(j, i));
        EXPECT_EQ(Rational(rs.cartan(i, j)), 2 * f(i, j) / f(j, j));
      }

    // rho = sum of fundamental weights = half the sum of positive roots
    Weight twice_rho(n);
    for (const auto& a : rs.positive_roots()) twice_rho += a.weight;
    EXPECT_EQ(twice_rho, 2 * rs.rho());

    // 2 (w_i, a_j) / (a_j, a_j) = delta_ij
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        auto val = 2 * rs.inner_product(Weight::unit(n, i), rs.simple_root(j)) / f(j, j);
        EXPECT_EQ(val, Rational(i == j ? 1 : 0));
      }

    // dim g from the positive roots agrees with the Weyl dimension of the adjoint
    EXPECT_EQ(ring.dim_irreducible(theta.weight), Integer(rs.dim_algebra()));

    // reflection closure: s_i permutes the roots
    for (const auto& a : rs.positive_roots())
      for (std::size_t i = 0; i < n; ++i) EXPECT_TRUE(rs.is_root(rs.reflect(a.weight, i)));

    // weight <-> simple-root coordinates round trip
    for (const auto& a : rs.positive_roots()) EXPECT_EQ(rs.to_weight(rs.to_root_vector(a.weight)), a.weight);
  }
}

TEST(RootSystem, WeylGroupOrderMatchesOrbitOfRhoInLowRank) {
  for (auto name : {"A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4"}) {
    auto rs = RootSystem::build(name);
    EXPECT_EQ(Integer(rs.weyl_orbit(rs.rho()).size()), rs.weyl_group_order()) << name;
  }
}

TEST(RootSystem, WeylOrbitExamples) {
  auto a1 = RootSystem::build("A1");
  auto orbit = a1.weyl_orbit(Weight{1});
  EXPECT_EQ(std::set<Weight>(orbit.begin(), orbit.end()), (std::set<Weight>{Weight{1}, Weight{-1}}));

  auto a2 = RootSystem::build("A2");
  EXPECT_EQ(a2.weyl_orbit(Weight{1, 0}).size(), 3u);
  EXPECT_EQ(a2.weyl_orbit(Weight{0, 0}).size(), 1u);

  auto e8 = RootSystem::build("E8");
  try {
    e8.weyl_orbit(e8.rho(), 1000);
    FAIL() << "expected cap error";
  } catch (const PartialOrbitError& e) {
    EXPECT_EQ(e.code(), ErrorCode::cap_exceeded);
    EXPECT_GT(e.partial().size(), 1000u);
  }
}

TEST(RootSystem, DominantRepresentativeExamples) {
  auto a1 = RootSystem::build("A1");
  EXPECT_EQ(a1.dominant_representative(Weight{3}), std::make_pair(Weight{3}, std::size_t{0}));
  EXPECT_EQ(a1.dominant_representative(Weight{-1}), std::make_pair(Weight{1}, std::size_t{1}));

  auto a2 = RootSystem::build("A2");
  Weight w = a2.reflect(a2.reflect(Weight{1, 1}, 1), 0);  // s1 s2 (w1 + w2)
  EXPECT_EQ(a2.dominant_representative(w), std::make_pair(Weight{1, 1}, std::size_t{2}));
}

TEST(RootSystem, LongestElementDual) {
  auto a1 = RootSystem::build("A1");
  EXPECT_EQ(a1.longest_element_dual(Weight{5}), Weight{5});
  auto a2 = RootSystem::build("A2");
  EXPECT_EQ(a2.longest_element_dual(Weight{1, 0}), (Weight{0, 1}));
  auto d4 = RootSystem::build("D4");
  EXPECT_EQ(d4.longest_element_dual(Weight{0, 1, 0, 0}), (Weight{0, 1, 0, 0}));
  auto e6 = RootSystem::build("E6");
  EXPECT_EQ(e6.longest_element_dual(Weight{1, 0, 0, 0, 0, 0}), (Weight{0, 0, 0, 0, 0, 1}));
  EXPECT_THROW(a2.longest_element_dual(Weight{1, -1}), Error);

  std::mt19937 rng(7);
  for (auto name : {"A4", "D5", "E6", "B3"}) {
    auto rs = RootSystem::build(name);
    for (int k = 0; k < 30; ++k) {
      Weight lam = rs.dominant_representative(random_weight(rng, rs.rank(), 3)).first;
      Weight dual = rs.longest_element_dual(lam);
      EXPECT_TRUE(dual.is_dominant());
      EXPECT_EQ(rs.longest_element_dual(dual), lam);
    }
  }
}

TEST(RootSystem, OrbitsHaveExactlyOneDominantElement) {
  std::mt19937 rng(42);
  for (auto name : {"A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4"}) {
    auto rs = RootSystem::build(name);
    for (int k = 0; k < 100; ++k) {
      Weight w = random_weight(rng, rs.rank(), 3);
      auto orbit = rs.weyl_orbit(w);
      std::size_t dominant = 0;
      for (const auto& v : orbit) dominant += v.is_dominant();
      ASSERT_EQ(dominant, 1u) << name << " " << w.str();
      EXPECT_EQ(rs.weyl_orbit(orbit.back()).size(), orbit.size());
    }
  }
}

TEST(RootSystem, DominanceIsAPartialOrder) {
  std::mt19937 rng(3);
  auto rs = RootSystem::build("B3");
  std::vector<Weight> sample;
  // draw from a single coset so comparisons actually happen
  for (int k = 0; k < 40; ++k) {
    Weight w = rs.simple_root(0);
    std::uniform_int_distribution<int> d(-2, 2);
    for (std::size_t i = 0; i < rs.rank(); ++i) w += d(rng) * rs.simple_root(i);
    sample.push_back(w);
  }
  for (const auto& a : sample) {
    EXPECT_TRUE(rs.dominates(a, a));
    for (const auto& b : sample) {
      if (a != b && rs.dominates(a, b)) EXPECT_FALSE(rs.dominates(b, a));
      for (const auto& c : sample)
        if (rs.dominates(a, b) && rs.dominates(b, c)) EXPECT_TRUE(rs.dominates(a, c));
    }
  }
}
