#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "group_zoo.hpp"
#include "homalg/bar.hpp"
#include "homalg/errors.hpp"
#include "oracles.hpp"

namespace homalg {
namespace {

using Symbol = BarChain::Symbol;

BarChain random_chain(const FiniteGroup& g, std::size_t degree, std::mt19937& rng, int terms = 4) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(g.order()) - 1);
  std::uniform_int_distribution<int> coef(-5, 5);
  BarChain z(g, degree);
  for (int t = 0; t < terms; ++t) {
    Symbol s(degree);
    for (auto& e : s) e = static_cast<Element>(pick(rng));  // identity allowed; normalization drops it
    z.add(s, coef(rng));
  }
  return z;
}

TEST(BarChain, NormalizationDropsIdentity) {
  FiniteGroup g = cyclic(3);
  BarChain z(g, 2);
  z.add({0, 1}, 5);
  z.add({1, 2}, 0);
  EXPECT_TRUE(z.is_zero());
  z.add({1, 2}, 3);
  z.add({1, 2}, -3);
  EXPECT_TRUE(z.is_zero());
  EXPECT_THROW(z.add({1}, 1), DimensionMismatch);
}

TEST(Boundary, TwoSymbolFormula) {
  FiniteGroup g = cyclic(5);
  BarChain d = boundary(BarChain::symbol(g, {1, 2}));
  BarChain expect(g, 1);
  expect.add({2}, 1);
  expect.add({3}, -1);
  expect.add({1}, 1);
  EXPECT_EQ(d, expect);
}

TEST(Boundary, SigmaSigmaInCyclicTwo) {
  FiniteGroup g = cyclic(2);
  EXPECT_EQ(boundary(BarChain::symbol(g, {1, 1})), BarChain::symbol(g, {1}, 2));
}

TEST(Boundary, DegreeOneIsZeroDegreeZeroRejected) {
  FiniteGroup g = cyclic(4);
  EXPECT_TRUE(boundary(BarChain::symbol(g, {3})).is_zero());
  EXPECT_THROW(boundary(BarChain(g, 0)), DegreeOutOfRange);
}

TEST(BoundaryProperty, SquareIsZero) {
  std::mt19937 rng(1);
  for (const auto& g : zoo::small_groups()) {
    for (std::size_t n = 2; n <= 4; ++n) {
      for (int t = 0; t < 1000 / static_cast<int>(n); ++t) {
        ASSERT_TRUE(boundary(boundary(random_chain(g, n, rng))).is_zero()) << g.name();
      }
    }
  }
}

TEST(Homotopy, ZeroChain) {
  MonomialGroup m = gm2(2);
  EXPECT_TRUE(homotopy_rho(m.s, BarChain(m.group, 2)).is_zero());
}

TEST(Homotopy, DegreeTwoAgainstExplicitFormula) {
  MonomialGroup m = gm2(2);
  const FiniteGroup& g = m.group;
  const Element s = m.s.index;
  for (Element a = 1; a < g.order(); ++a) {
    for (Element b = 1; b < g.order(); ++b) {
      BarChain expect(g, 3);
      expect.add({s, g.conjugate(s, a), g.conjugate(s, b)}, 1);
      expect.add({a, s, g.conjugate(s, b)}, -1);
      expect.add({a, b, s}, 1);
      ASSERT_EQ(homotopy_rho(m.s, BarChain::symbol(g, {a, b})), expect);
    }
  }
}

// d rho_g + rho_g d = c_g - id
TEST(HomotopyProperty, ChainHomotopyIdentity) {
  std::mt19937 rng(3);
  int checked = 0;
  auto groups = zoo::small_groups();
  while (checked < 1200) {
    for (const auto& g : groups) {
      std::uniform_int_distribution<int> pick(0, static_cast<int>(g.order()) - 1);
      GroupElement x{g, static_cast<Element>(pick(rng))};
      for (std::size_t n = 1; n <= 3; ++n) {
        BarChain z = random_chain(g, n, rng);
        BarChain lhs = boundary(homotopy_rho(x, z)) + homotopy_rho(x, boundary(z));
        ASSERT_EQ(lhs, conjugate_chain(x, z) - z) << g.name() << " " << z.to_string();
        ++checked;
      }
    }
  }
}

TEST(Conjugation, Basics) {
  MonomialGroup m = gm2(4);
  std::mt19937 rng(5);
  BarChain z = random_chain(m.group, 3, rng, 6);
  EXPECT_EQ(conjugate_chain(GroupElement{m.group, 0}, z), z);
  BarChain c = conjugate_chain(m.s, z);
  EXPECT_EQ(c.degree(), z.degree());
  std::vector<Integer> a, b;
  for (const auto& [s, k] : z.terms()) a.push_back(k);
  for (const auto& [s, k] : c.terms()) b.push_back(k);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  EXPECT_EQ(a, b);
  EXPECT_THROW(conjugate_chain(GroupElement{cyclic(2), 1}, z), GroupMismatch);
}

// tau(h) for h = [(-1,1)|(1,x)] - [(1,x)|(-1,1)]
TEST(Conjugation, TranspositionOfTorusChain) {
  for (std::size_t n : {2, 4, 8}) {
    MonomialGroup m = gm2(n);
    const long half = static_cast<long>(n / 2);
    BarChain h(m.group, 2);
    h.add({m.torus_element(half, 0), m.torus_element(0, 1)}, 1);
    h.add({m.torus_element(0, 1), m.torus_element(half, 0)}, -1);
    BarChain expect(m.group, 2);
    expect.add({m.torus_element(0, half), m.torus_element(1, 0)}, 1);
    expect.add({m.torus_element(1, 0), m.torus_element(0, half)}, -1);
    EXPECT_EQ(conjugate_chain(m.s, h), expect) << n;
  }
}

TEST(MapChain, TorusEmbedding) {
  MonomialGroup m = gm2(3);
  BarChain z = BarChain::symbol(m.torus, {1, 3});
  BarChain image = map_chain(m.torus_embedding, z);
  EXPECT_EQ(image, BarChain::symbol(m.group, {m.torus_element(0, 1), m.torus_element(1, 0)}));
}

TEST(Literal, RoundTrip) {
  MonomialGroup m = gm2(4);
  std::mt19937 rng(8);
  for (int t = 0; t < 50; ++t) {
    BarChain z = random_chain(m.group, 1 + t % 4, rng, 5);
    if (z.is_zero()) continue;
    ASSERT_EQ(BarChain::parse(m.group, z.to_string()), z);
  }
  BarChain z = BarChain::parse(m.group, "+1 [(1,0;e)|(0,1;s)] -2 [(2,2;e)|(0,0;s)]");
  EXPECT_EQ(z.coefficient({m.element(1, 0, false), m.element(0, 1, true)}), 1);
  EXPECT_EQ(z.coefficient({m.element(2, 2, false), m.element(0, 0, true)}), -2);
  EXPECT_EQ(z.to_string(), "+1 [(1,0;e)|(0,1;s)] -2 [(2,2;e)|(0,0;s)]");
  EXPECT_EQ(BarChain::parse(cyclic(3), "[1|2] + 3 [2|2]").size(), 2u);
  EXPECT_TRUE(BarChain::parse(cyclic(3), "0", 2).is_zero());
  EXPECT_THROW(BarChain::parse(cyclic(3), "0"), ParseError);
  EXPECT_THROW(BarChain::parse(cyclic(3), "[1|7]"), ParseError);
  EXPECT_THROW(BarChain::parse(cyclic(3), "[1|2] [1]"), ParseError);
  EXPECT_THROW(BarChain::parse(cyclic(3), "+2 [1|2"), ParseError);
}

TEST(BarComplex, BasisIsLexicographic) {
  FiniteGroup g = cyclic(4);
  for (std::size_t i = 0; i < 27; ++i) {
    Symbol s = bar_symbol(g, 3, i);
    EXPECT_EQ(bar_index(g, s), i);
    if (i > 0) EXPECT_LT(bar_symbol(g, 3, i - 1), s);
  }
  ChainComplex a = bar_complex(g, 3);
  ChainComplex b = bar_complex(g, 3);
  EXPECT_EQ(a.boundary(3), b.boundary(3));
}

TEST(BarComplex, Budget) {
  EXPECT_THROW(bar_complex(gm2(2).group, 9, 1000), BudgetExceeded);
  try {
    bar_complex(cyclic(11), 4, 100);
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.requested(), 10000u);
    EXPECT_EQ(e.budget(), 100u);
  }
}

TEST(BarHomology, CyclicGroups) {
  for (long n : {2, 3, 4}) {
    FiniteGroup g = cyclic(n);
    ChainComplex c = bar_complex(g, 4);
    EXPECT_EQ(oracle::shape_of(homology(c, 0)), (oracle::Shape{{}, 1}));
    EXPECT_EQ(oracle::shape_of(homology(c, 1)), (oracle::Shape{{n}, 0}));
    EXPECT_TRUE(homology(c, 2).is_trivial());
    EXPECT_EQ(oracle::shape_of(homology(c, 3)), (oracle::Shape{{n}, 0}));
  }
}

TEST(BarHomology, KleinFour) {
  FiniteGroup v = product(cyclic(2), cyclic(2));
  ChainComplex c = bar_complex(v, 4);
  EXPECT_EQ(oracle::shape_of(homology(c, 1)), (oracle::Shape{{2, 2}, 0}));
  EXPECT_EQ(oracle::shape_of(homology(c, 2)), (oracle::Shape{{2}, 0}));
  EXPECT_EQ(oracle::shape_of(homology(c, 3)), (oracle::Shape{{2, 2, 2}, 0}));
}

TEST(BarHomology, NonabelianSmall) {
  // H_1 = abelianization, H_2(S3) = 0, H_2(Q8) = 0, H_2(D8) = Z/2
  EXPECT_EQ(oracle::shape_of(group_homology(zoo::symmetric3(), 1)), (oracle::Shape{{2}, 0}));
  EXPECT_TRUE(group_homology(zoo::symmetric3(), 2).is_trivial());
  EXPECT_EQ(oracle::shape_of(group_homology(zoo::quaternion8(), 1)), (oracle::Shape{{2, 2}, 0}));
  EXPECT_TRUE(group_homology(zoo::quaternion8(), 2).is_trivial());
  EXPECT_EQ(oracle::shape_of(group_homology(gm2(2).group, 2)), (oracle::Shape{{2}, 0}));
}

TEST(BarHomology, BoundariesAndClassesInCyclicTwo) {
  FiniteGroup g = cyclic(2);
  ChainComplex c = bar_complex(g, 3);
  IntVector two_sigma = to_coordinates(BarChain::symbol(g, {1}, 2));
  auto w = boundary_witness(c, 1, two_sigma);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(from_coordinates(g, 2, *w), BarChain::symbol(g, {1, 1}));
  IntVector sigma = to_coordinates(BarChain::symbol(g, {1}));
  EXPECT_FALSE(is_boundary(c, 1, sigma));
  CycleClass k = cycle_class(c, 1, sigma);
  EXPECT_EQ(k.order, 2);
  EXPECT_EQ(oracle::shape_of(homology(c, 3 - 1)), (oracle::Shape{{}, 0}));
}

// Homology classes are invariant under conjugation.
TEST(BarHomologyProperty, ConjugationInvariance) {
  std::mt19937 rng(12);
  for (const auto& g : {gm2(2).group, zoo::symmetric3(), zoo::quaternion8()}) {
    ChainComplex c = bar_complex(g, 4);
    for (int n = 1; n <= 3; ++n) {
      const HomologyGroup& h = c.homology_data(n);
      const IntMatrix& gens = h.generator_cycles();
      std::uniform_int_distribution<int> coef(-3, 3);
      for (int t = 0; t < 5; ++t) {
        IntVector a(gens.cols());
        for (auto& v : a) v = coef(rng);
        BarChain z = from_coordinates(g, n, gens.apply(a));
        for (Element x = 1; x < g.order(); ++x) {
          BarChain cz = conjugate_chain(GroupElement{g, x}, z);
          ASSERT_EQ(cycle_class(c, n, to_coordinates(cz)), cycle_class(c, n, to_coordinates(z)));
        }
      }
    }
  }
}

TEST(BarHomologyProperty, BoundaryIffZeroClass) {
  std::mt19937 rng(21);
  FiniteGroup g = product(cyclic(2), cyclic(2));
  ChainComplex c = bar_complex(g, 4);
  for (int n = 1; n <= 3; ++n) {
    const IntMatrix& gens = c.homology_data(n).generator_cycles();
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int t = 0; t < 40; ++t) {
      IntVector a(gens.cols());
      for (auto& v : a) v = coef(rng);
      IntVector z = gens.apply(a);
      IntVector x(c.rank(n + 1));
      for (auto& v : x) v = coef(rng) * (t % 2);
      IntVector b = c.boundary(n + 1).apply(x);
      for (std::size_t i = 0; i < z.size(); ++i) z[i] += b[i];
      ASSERT_EQ(is_boundary(c, n, z), cycle_class(c, n, z).is_zero());
    }
  }
}

}  // namespace
}  // namespace homalg
