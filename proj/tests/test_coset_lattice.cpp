#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "ers/coset_lattice.hpp"
#include "ers/error.hpp"
#include "oracles.hpp"

using namespace ers;
using ers::testing::window_points;

namespace {

constexpr int kWindow = 8;

ResidueSet random_set(std::mt19937& rng, int max_mod = 8) {
  std::vector<int> mods;
  for (int m = 1; m <= max_mod; m *= 2) mods.push_back(m);
  std::uniform_int_distribution<std::size_t> pick(0, mods.size() - 1);
  Modulus mod{mods[pick(rng)], mods[pick(rng)]};
  std::uint64_t mask = 0;
  std::bernoulli_distribution coin(0.5);
  for (int b = 0; b < mod.a * mod.b; ++b) {
    if (coin(rng)) mask |= std::uint64_t{1} << b;
  }
  return ResidueSet::from_mask(mod, mask);
}

RadicalMap random_map(std::mt19937& rng) {
  const RadicalMap gens[] = {RadicalMap::swap(), RadicalMap::shear_a_to_a_plus_b(),
                             RadicalMap(RadicalMap::Entries{{{-1, 0}, {0, 1}}}),
                             RadicalMap(RadicalMap::Entries{{{1, 2}, {0, 1}}})};
  std::uniform_int_distribution<int> len(0, 5);
  std::uniform_int_distribution<int> which(0, 3);
  RadicalMap m;
  for (int i = len(rng); i > 0; --i) m = gens[which(rng)] * m;
  return m;
}

bool in_scaled_l(std::int64_t x, std::int64_t y, int i, int j, int s1, int s2) {
  if (x % s2 != 0 || y % s1 != 0) return false;
  std::int64_t m = x / s2;
  std::int64_t n = y / s1;
  return ers::testing::mod((m - i) * (n - j), 2) == 0;
}

}  // namespace

TEST(ResidueSetMake, FullResidueSetCollapsesToUnitModulus) {
  ResidueSet s = ResidueSet::make({2, 2}, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  EXPECT_EQ(s.modulus(), (Modulus{1, 1}));
  EXPECT_EQ(s, ResidueSet::full());
}

TEST(ResidueSetMake, SingleResidueIsSublattice) {
  EXPECT_EQ(ResidueSet::make({2, 2}, {{0, 0}}), ResidueSet::lattice(2, 2));
}

TEST(ResidueSetMake, DoubledL00AtModulusFour) {
  // Residues mod (4, 4) of {2m a + 2n b : mn even}, found by evaluation.
  std::vector<Residue> residues;
  for (int ra = 0; ra < 4; ++ra) {
    for (int rb = 0; rb < 4; ++rb) {
      if (in_scaled_l(ra, rb, 0, 0, 2, 2)) residues.push_back({ra, rb});
    }
  }
  ResidueSet s = ResidueSet::make({4, 4}, residues);
  EXPECT_EQ(s.modulus(), (Modulus{4, 4}));
  EXPECT_EQ(s.residue_count(), static_cast<int>(residues.size()));
  EXPECT_EQ(s.residue_count(), 3);
  EXPECT_EQ(s, l_set_scaled(0, 0, 2, 2));
}

TEST(ResidueSetMake, RejectsBadInput) {
  EXPECT_THROW(ResidueSet::make({2, 2}, {{2, 0}}), InputError);
  EXPECT_THROW(ResidueSet::make({2, 2}, {{0, -1}}), InputError);
  EXPECT_THROW(ResidueSet::make({3, 1}, {{0, 0}}), InputError);
  EXPECT_THROW(ResidueSet::make({0, 1}, {}), InputError);
}

TEST(ResidueSetMake, EmptySetIsRepresentable) {
  ResidueSet s = ResidueSet::make({2, 2}, {});
  EXPECT_TRUE(s.empty());
  EXPECT_EQ(s, ResidueSet());
  EXPECT_FALSE(s.contains({0, 0}));
}

TEST(LSet, Examples) {
  EXPECT_TRUE(l_set(1, 1).contains({1, 0}));
  EXPECT_FALSE(l_set(1, 1).contains({0, 0}));
  EXPECT_EQ(l_set(0, 0), ResidueSet::make({2, 2}, {{0, 0}, {0, 1}, {1, 0}}));
  EXPECT_TRUE(l_set_scaled(0, 0, 2, 2).contains({2, 4}));
  EXPECT_FALSE(l_set_scaled(0, 0, 2, 2).contains({2, 2}));
  EXPECT_EQ(l_set(1, 0), l_set_scaled(1, 0, 1, 1));
}

TEST(LSet, MatchesCongruenceOnWindow) {
  for (int i : {0, 1}) {
    for (int j : {0, 1}) {
      for (int s1 : {1, 2, 4}) {
        for (int s2 : {1, 2, 4}) {
          ResidueSet s = l_set_scaled(i, j, s1, s2);
          auto expected = window_points(
              [&](std::int64_t x, std::int64_t y) { return in_scaled_l(x, y, i, j, s1, s2); },
              kWindow);
          EXPECT_EQ(window_points(s, kWindow), expected)
              << "i=" << i << " j=" << j << " s1=" << s1 << " s2=" << s2;
        }
      }
    }
  }
}

TEST(LSet, RejectsBadParameters) {
  EXPECT_THROW(l_set(2, 0), InputError);
  EXPECT_THROW(l_set_scaled(0, 0, 3, 1), InputError);
}

TEST(ResidueSetContains, Examples) {
  EXPECT_TRUE(ResidueSet::lattice(2, 1).contains({2, 5}));
  EXPECT_TRUE(l_set(1, 1).contains({3, 7}));
  EXPECT_FALSE(ResidueSet::lattice(4, 4).contains({2, 0}));
  EXPECT_TRUE(ResidueSet::lattice(4, 4).contains({-4, 8}));
}

TEST(ResidueSetOps, Examples) {
  EXPECT_EQ(negate(l_set(1, 1)), l_set(1, 1));
  EXPECT_EQ(set_union(l_set(0, 0), ResidueSet::make({2, 2}, {{1, 1}})), ResidueSet::full());
  std::vector<Residue> lifted;
  for (int ra = 0; ra < 4; ra += 2) {
    for (int rb = 0; rb < 4; rb += 2) lifted.push_back({ra, rb});
  }
  EXPECT_TRUE(equals(ResidueSet::make({4, 4}, lifted), ResidueSet::make({2, 2}, {{0, 0}})));
  EXPECT_EQ(intersect(l_set(0, 0), l_set(1, 1)),
            ResidueSet::make({2, 2}, {{0, 1}, {1, 0}}));
}

TEST(ResidueSetProperty, CanonicalFormIsIdempotentAndPointwise) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    ResidueSet s = random_set(rng);
    ResidueSet again = ResidueSet::from_mask(s.modulus(), s.mask());
    EXPECT_EQ(again, s);
    // The modulus cannot shrink further on either axis.
    if (s.modulus().a > 1 && !s.empty()) {
      EXPECT_NE(s.translated({s.modulus().a / 2, 0}), s);
    }
    if (s.modulus().b > 1 && !s.empty()) {
      EXPECT_NE(s.translated({0, s.modulus().b / 2}), s);
    }
    ResidueSet t = random_set(rng);
    EXPECT_EQ(s == t, window_points(s, kWindow) == window_points(t, kWindow));
  }
}

TEST(ResidueSetProperty, BooleanOpsAgreeWithWindow) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    ResidueSet s = random_set(rng);
    ResidueSet t = random_set(rng);
    auto ws = window_points(s, kWindow);
    auto wt = window_points(t, kWindow);
    auto u = window_points(
        [&](std::int64_t m, std::int64_t n) { return s.contains({m, n}) || t.contains({m, n}); },
        kWindow);
    auto i = window_points(
        [&](std::int64_t m, std::int64_t n) { return s.contains({m, n}) && t.contains({m, n}); },
        kWindow);
    auto neg = window_points([&](std::int64_t m, std::int64_t n) { return s.contains({-m, -n}); },
                             kWindow);
    EXPECT_EQ(window_points(set_union(s, t), kWindow), u);
    EXPECT_EQ(window_points(intersect(s, t), kWindow), i);
    EXPECT_EQ(window_points(negate(s), kWindow), neg);
    bool subset = std::includes(wt.begin(), wt.end(), ws.begin(), ws.end());
    EXPECT_EQ(s.is_subset_of(t), subset);
  }
}

TEST(ResidueSetProperty, PeriodsAgreeWithWindow) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    ResidueSet s = random_set(rng);
    ResidueSet p = s.periods();
    for (std::int64_t m = 0; m < 8; ++m) {
      for (std::int64_t n = 0; n < 8; ++n) {
        EXPECT_EQ(p.contains({m, n}), s.translated({m, n}) == s);
      }
    }
  }
  EXPECT_EQ(l_set(0, 0).periods(), ResidueSet::lattice(2, 2));
}

TEST(ScaleSubtract, Examples) {
  EXPECT_EQ(scale_subtract(ResidueSet::full(), 1, ResidueSet::full()), ResidueSet::full());
  // 2Za + Zb minus twice everything stays 2Za + Zb.
  EXPECT_EQ(scale_subtract(ResidueSet::lattice(2, 1), 2, ResidueSet::full()),
            ResidueSet::lattice(2, 1));
  EXPECT_EQ(scale_subtract(l_set(1, 1), 4, ResidueSet::full()), l_set(1, 1));
  EXPECT_EQ(scale_subtract(l_set(1, 1), 0, ResidueSet()), l_set(1, 1));
  EXPECT_TRUE(scale_subtract(l_set(1, 1), 2, ResidueSet()).empty());
}

TEST(ScaleSubtract, AgreesWithWindowedMinkowski) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    ResidueSet t1 = random_set(rng, 4);
    ResidueSet t2 = random_set(rng, 4);
    if (t1.empty()) continue;
    auto w1 = window_points(t1, kWindow);
    for (int k : {0, 1, 2, 4, -1, -2, -4}) {
      auto expected = window_points(
          [&](std::int64_t m, std::int64_t n) {
            for (const auto& [vm, vn] : w1) {
              if (t2.contains({m + k * vm, n + k * vn})) return true;
            }
            return false;
          },
          kWindow);
      EXPECT_EQ(window_points(scale_subtract(t2, k, t1), kWindow), expected) << "k=" << k;
    }
  }
}

TEST(RadicalMapTest, RejectsNonUnimodular) {
  EXPECT_THROW(RadicalMap(RadicalMap::Entries{{{2, 0}, {0, 1}}}), InputError);
  EXPECT_THROW(RadicalMap(RadicalMap::Entries{{{1, 1}, {1, 1}}}), InputError);
}

TEST(RadicalMapTest, InverseAndDeterminant) {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    RadicalMap m = random_map(rng);
    EXPECT_TRUE(m.determinant() == 1 || m.determinant() == -1);
    EXPECT_EQ(m * m.inverse(), RadicalMap::identity());
  }
}

TEST(ApplyMap, Examples) {
  EXPECT_EQ(apply_map(RadicalMap::swap(), ResidueSet::lattice(2, 1)), ResidueSet::lattice(1, 2));
  EXPECT_EQ(apply_map(RadicalMap::identity(), l_set(1, 0)), l_set(1, 0));
  // a -> a + b sends m a + n b to m a + (m + n) b.
  ResidueSet image = apply_map(RadicalMap::shear_a_to_a_plus_b(), l_set(0, 1));
  auto expected = window_points(
      [](std::int64_t m, std::int64_t n) { return l_set(0, 1).contains({m, n - m}); }, kWindow);
  EXPECT_EQ(window_points(image, kWindow), expected);
  EXPECT_EQ(image, l_set(0, 0));
}

TEST(ApplyMap, GroupActionLawAndWindowOracle) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    RadicalMap m1 = random_map(rng);
    RadicalMap m2 = random_map(rng);
    ResidueSet s = random_set(rng, 4);
    EXPECT_EQ(apply_map(m1 * m2, s), apply_map(m1, apply_map(m2, s)));
    RadicalMap inv = m1.inverse();
    auto expected = window_points(
        [&](std::int64_t m, std::int64_t n) { return s.contains(inv.apply({m, n})); }, kWindow);
    EXPECT_EQ(window_points(apply_map(m1, s), kWindow), expected);
  }
}

TEST(Projection, Examples) {
  EXPECT_EQ(project_to_b(l_set(1, 1)), ResidueSet::full());
  EXPECT_EQ(project_to_b(ResidueSet::lattice(2, 4)), ResidueSet::lattice(1, 4));
  EXPECT_EQ(project_to_a(ResidueSet::lattice(2, 4)), ResidueSet::lattice(2, 1));
  EXPECT_EQ(project_to_b(ResidueSet::make({2, 4}, {{0, 0}, {1, 2}})), ResidueSet::lattice(1, 2));
}

TEST(GeneratedSubgroup, SmallCases) {
  // (2, 0) in (Z/4)^2 generates {(0,0), (2,0)}.
  std::uint64_t g = generated_subgroup(4, std::uint64_t{1} << (2 * 4 + 0));
  EXPECT_EQ(g, (std::uint64_t{1} << 0) | (std::uint64_t{1} << 8));
  // (1, 0) and (0, 1) generate everything.
  EXPECT_EQ(generated_subgroup(4, (std::uint64_t{1} << 4) | 2U), 0xFFFFU);
}
