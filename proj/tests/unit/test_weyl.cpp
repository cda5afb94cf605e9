#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "lieinv/weyl.hpp"
#include "oracles.hpp"

using namespace lieinv;
using testing_util::algebra;

TEST(Reflect, FundamentalWeightMinusSimpleRoot) {
  for (const char* name : {"A3", "B3", "G2", "F4"}) {
    const auto g = algebra(name);
    for (std::size_t j = 0; j < g->rank(); ++j) {
      const Weight& w = g->fundamental_weight(j);
      EXPECT_EQ(weyl::reflect(w, j), w - Weight(*g, g->simple_root(j).labels));
    }
  }
}

TEST(Reflect, IsAnInvolution) {
  std::mt19937_64 rng(11);
  for (const auto& name : testing_util::small_algebras()) {
    const auto g = algebra(name);
    for (int t = 0; t < 40; ++t) {
      const Weight lam = testing_util::random_integral(*g, rng, 5);
      for (std::size_t j = 0; j < g->rank(); ++j) EXPECT_EQ(weyl::reflect(weyl::reflect(lam, j), j), lam);
    }
  }
}

TEST(Reflect, G2Rho) {
  // rows of the Cartan matrix are the simple roots: (1,1) - (2,-1) = (-1,2), (1,1) - (-3,2) = (4,-1).
  const auto g = algebra("G2");
  EXPECT_EQ(weyl::reflect(g->rho(), 0).labels(), (Labels{-1, 2}));
  EXPECT_EQ(weyl::reflect(g->rho(), 1).labels(), (Labels{4, -1}));
}

TEST(Reflect, IndexOutOfRange) {
  const auto g = algebra("A2");
  EXPECT_THROW(weyl::reflect(g->rho(), 2), IndexOutOfRange);
}

TEST(ToDominantShifted, DominantIsFixed) {
  std::mt19937_64 rng(3);
  for (const auto& name : testing_util::small_algebras()) {
    const auto g = algebra(name);
    for (int t = 0; t < 20; ++t) {
      const Weight mu = testing_util::random_dominant(*g, rng, 4);
      const auto r = weyl::to_dominant_shifted(mu);
      EXPECT_EQ(r.weight, mu);
      EXPECT_EQ(r.sign, 1);
      EXPECT_FALSE(r.singular);
    }
  }
}

TEST(ToDominantShifted, A1Examples) {
  const auto g = algebra("A1");
  auto r = weyl::to_dominant_shifted(Weight(*g, {-2}));
  EXPECT_FALSE(r.singular);
  EXPECT_EQ(r.sign, -1);
  EXPECT_EQ(r.weight.labels(), (Labels{0}));
  r = weyl::to_dominant_shifted(Weight(*g, {-1}));
  EXPECT_TRUE(r.singular);
  EXPECT_EQ(r.sign, 1);
  r = weyl::to_dominant_shifted(Weight(*g, {-5}));
  EXPECT_EQ(r.weight.labels(), (Labels{3}));
  EXPECT_EQ(r.sign, -1);
}

TEST(ToDominantShifted, WallIsSingular) {
  const auto g = algebra("A2");
  // lambda + rho = (0, 3) lies on the wall of alpha1
  EXPECT_TRUE(weyl::to_dominant_shifted(Weight(*g, {-1, 2})).singular);
  // a wall crossed transiently: (-2, 1) + rho = (-1, 2) -> s1 -> (1, 1): regular
  const auto r = weyl::to_dominant_shifted(Weight(*g, {-2, 1}));
  EXPECT_FALSE(r.singular);
  EXPECT_EQ(r.sign, -1);
  EXPECT_EQ(r.weight.labels(), (Labels{0, 0}));
}

TEST(ToDominantShifted, OutputStrictlyDominantAfterShift) {
  std::mt19937_64 rng(5);
  for (const auto& name : testing_util::small_algebras()) {
    const auto g = algebra(name);
    for (int t = 0; t < 200; ++t) {
      const auto r = weyl::to_dominant_shifted(testing_util::random_integral(*g, rng, 6));
      if (r.singular) continue;
      const Weight shifted = r.weight + g->rho();
      for (auto x : shifted.labels()) EXPECT_GT(x, 0);
    }
  }
}

TEST(ToDominantShifted, DotActionInvariance) {
  std::mt19937_64 rng(17);
  for (const auto& name : testing_util::small_algebras()) {
    const auto g = algebra(name);
    for (int t = 0; t < 100; ++t) {
      const Weight lam = testing_util::random_integral(*g, rng, 6);
      const auto base = weyl::to_dominant_shifted(lam);
      for (std::size_t j = 0; j < g->rank(); ++j) {
        const Weight moved = weyl::reflect(lam + g->rho(), j) - g->rho();
        const auto r = weyl::to_dominant_shifted(moved);
        EXPECT_EQ(r.singular, base.singular);
        if (!base.singular) {
          EXPECT_EQ(r.weight, base.weight);
          EXPECT_EQ(r.sign, -base.sign);
        }
      }
    }
  }
}

TEST(ToDominant, MatchesIndependentStraightening) {
  std::mt19937_64 rng(19);
  for (const char* name : {"B3", "G2", "F4", "D4"}) {
    const auto g = algebra(name);
    for (int t = 0; t < 50; ++t) {
      const Weight lam = testing_util::random_integral(*g, rng, 5);
      EXPECT_EQ(weyl::to_dominant(lam).labels(), oracle::dominant(g->cartan(), lam.labels()));
    }
  }
}

TEST(Opposition, Examples) {
  const auto a2 = algebra("A2");
  EXPECT_EQ(weyl::opposition(Weight(*a2, {1, 0})).labels(), (Labels{0, 1}));
  EXPECT_EQ(weyl::opposition(Weight(*a2, {2, 1})).labels(), (Labels{1, 2}));
  const auto b3 = algebra("B3");
  for (const Weight& w : b3->fundamental_weights()) EXPECT_EQ(weyl::opposition(w), w);
  const auto e6 = algebra("E6");
  EXPECT_EQ(weyl::opposition_permutation(*e6), (std::vector<std::size_t>{5, 1, 4, 3, 2, 0}));
  EXPECT_EQ(weyl::opposition_permutation(*algebra("A4")), (std::vector<std::size_t>{3, 2, 1, 0}));
  EXPECT_EQ(weyl::opposition_permutation(*algebra("D5")), (std::vector<std::size_t>{0, 1, 2, 4, 3}));
  EXPECT_EQ(weyl::opposition_permutation(*algebra("D4")), (std::vector<std::size_t>{0, 1, 2, 3}));
  for (const char* trivial : {"B4", "C3", "E7", "E8", "F4", "G2", "A1"}) {
    const auto g = algebra(trivial);
    const auto p = weyl::opposition_permutation(*g);
    for (std::size_t j = 0; j < p.size(); ++j) EXPECT_EQ(p[j], j) << trivial;
  }
  EXPECT_THROW(weyl::opposition(Weight(*a2, {1, -1})), NotDominant);
}

TEST(Opposition, InvolutionPreservingLabelMultiset) {
  std::mt19937_64 rng(23);
  for (const char* name : {"A3", "A4", "D5", "E6", "A2xG2", "A2xA3"}) {
    const auto g = algebra(name);
    for (int t = 0; t < 30; ++t) {
      const Weight mu = testing_util::random_dominant(*g, rng, 3);
      const Weight bar = weyl::opposition(mu);
      EXPECT_EQ(weyl::opposition(bar), mu);
      auto a = mu.labels(), b = bar.labels();
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      EXPECT_EQ(a, b);
      EXPECT_EQ(weyl::minus_w0(mu), bar);
    }
  }
}

TEST(Opposition, W0FixesNoRoot) {
  // -w0 maps positive roots to positive roots, so w0 (= -(-w0)) fixes no root.
  for (const char* name : {"A1", "A3", "A4", "B3", "C3", "D4", "D5", "E6", "E7", "F4", "G2", "A2xB2"}) {
    const auto g = algebra(name);
    for (const Root& r : g->roots()) {
      const Weight img = weyl::minus_w0(Weight(*g, r.labels));
      EXPECT_NE(-img, Weight(*g, r.labels)) << name;
      Labels coords;
      ASSERT_TRUE(g->integral_coords(img.labels(), coords));
      const Root* mapped = g->find_root(coords);
      ASSERT_NE(mapped, nullptr);
      EXPECT_EQ(mapped->is_positive(), r.is_positive());
    }
  }
}

TEST(Orbit, Examples) {
  const auto a1 = algebra("A1");
  EXPECT_EQ(weyl::orbit(a1->zero()), (std::vector<Labels>{{0}}));
  auto o = weyl::orbit(a1->fundamental_weight(0));
  std::sort(o.begin(), o.end());
  EXPECT_EQ(o, (std::vector<Labels>{{-1}, {1}}));
  const auto g2 = algebra("G2");
  EXPECT_EQ(weyl::orbit(g2->fundamental_weight(0)).size(), 6u);
  EXPECT_EQ(weyl::orbit(g2->rho()).size(), 12u);
}

TEST(Orbit, SizeMatchesStabilizerFormulaAndDividesGroupOrder) {
  std::mt19937_64 rng(29);
  for (const char* name : {"A3", "B3", "C3", "G2", "D4", "A1xG2"}) {
    const auto g = algebra(name);
    const BigInt order = weyl::group_order(*g);
    for (int t = 0; t < 15; ++t) {
      const Weight mu = testing_util::random_dominant(*g, rng, 2);
      const auto o = weyl::orbit(mu);
      EXPECT_EQ(BigInt(o.size()), weyl::orbit_size(mu)) << name << " " << mu.str();
      EXPECT_EQ(order % BigInt(o.size()), 0);
      std::set<Labels> uniq(o.begin(), o.end());
      EXPECT_EQ(uniq.size(), o.size());
    }
  }
}

TEST(GroupOrder, KnownValues) {
  const std::vector<std::pair<std::string, std::int64_t>> orders{
      {"A1", 2}, {"A3", 24}, {"B3", 48}, {"C4", 384}, {"D4", 192}, {"G2", 12},
      {"F4", 1152}, {"E6", 51840}, {"E7", 2903040}, {"A1xG2", 24}};
  for (const auto& [name, n] : orders) EXPECT_EQ(weyl::group_order(*algebra(name)), BigInt(n)) << name;
  EXPECT_EQ(weyl::group_order(*algebra("E8")), BigInt(696729600));
  // |W| equals the size of the regular orbit of rho, counted independently
  for (const char* name : {"B3", "G2", "A3"}) {
    const auto g = algebra(name);
    EXPECT_EQ(weyl::group_order(*g), BigInt(oracle::signed_rho_orbit(g->cartan()).size())) << name;
  }
}
