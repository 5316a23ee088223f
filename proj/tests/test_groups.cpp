#include <gtest/gtest.h>

#include <array>
#include <map>

#include "homalg/errors.hpp"
#include "homalg/groups.hpp"

namespace homalg {
namespace {

TEST(Cyclic, Basics) {
  EXPECT_EQ(cyclic(1).order(), 1u);
  EXPECT_EQ(cyclic(6).element_order(1), 6u);
  EXPECT_EQ(cyclic(6).element_order(4), 3u);
  EXPECT_THROW(cyclic(0), InvalidGroup);
  EXPECT_EQ(cyclic(5).find("3"), Element{3});
}

TEST(Product, KleinFour) {
  FiniteGroup v = product(cyclic(2), cyclic(2));
  EXPECT_EQ(v.order(), 4u);
  EXPECT_EQ(v.exponent(), 2u);
  EXPECT_TRUE(v.is_abelian());
  EXPECT_EQ(v.label(3), "(1,1)");
  EXPECT_EQ(v.find("(1,0)"), Element{2});
}

TEST(FromTable, RejectsNonGroups) {
  // identity not at 0
  EXPECT_THROW(FiniteGroup::from_table({{1, 0}, {0, 1}}), InvalidGroup);
  // no inverse: {0,1} with 1*1 = 1
  EXPECT_THROW(FiniteGroup::from_table({{0, 1}, {1, 1}}), InvalidGroup);
  // a loop with inverses that is not associative (order-5 Latin square with identity 0)
  std::vector<std::vector<Element>> loop = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  EXPECT_THROW(FiniteGroup::from_table(loop), InvalidGroup);
  EXPECT_NO_THROW(FiniteGroup::from_table({{0, 1}, {1, 0}}));
}

TEST(Monomial, SmallCases) {
  EXPECT_EQ(gm2(1).group.order(), 2u);
  EXPECT_EQ(gm2(3).group.order(), 18u);
  MonomialGroup g = gm2(2);
  EXPECT_EQ(g.group.order(), 8u);
  EXPECT_EQ(g.group.multiply(g.s.index, g.s.index), 0);
  for (long a = 0; a < 2; ++a) {
    for (long b = 0; b < 2; ++b) {
      EXPECT_EQ(g.group.conjugate(g.s.index, g.torus_element(a, b)), g.torus_element(b, a));
    }
  }
  EXPECT_EQ(g.group.label(g.s.index), "(0,0;s)");
}

TEST(Monomial, DihedralShapeAtTwo) {
  MonomialGroup g = gm2(2);
  std::map<std::size_t, int> by_order;
  for (std::size_t x = 0; x < 8; ++x) ++by_order[g.group.element_order(static_cast<Element>(x))];
  EXPECT_EQ(by_order[4], 2);
  EXPECT_EQ(by_order[2], 5);
  EXPECT_EQ(by_order[1], 1);
  EXPECT_FALSE(g.group.is_abelian());
}

TEST(Monomial, ConjugationSwapsTorus) {
  MonomialGroup g = gm2(2);
  GroupElement xi{g.group, g.torus_element(1, 0)};
  EXPECT_EQ(conjugate(g.s, xi).index, g.torus_element(0, 1));
  GroupElement e{g.group, 0};
  EXPECT_EQ(conjugate(e, xi), xi);
  FiniteGroup z6 = cyclic(6);
  EXPECT_EQ(conjugate(GroupElement{z6, 2}, GroupElement{z6, 5}).index, 5);
  EXPECT_THROW(conjugate(GroupElement{z6, 2}, xi), GroupMismatch);
}

TEST(Monomial, TorusIsIndexTwoSubgroup) {
  for (std::size_t n = 1; n <= 8; ++n) {
    MonomialGroup g = gm2(n);
    EXPECT_TRUE(g.torus_embedding.is_homomorphism());
    EXPECT_TRUE(g.torus_embedding.is_injective());
    EXPECT_TRUE(g.swap_embedding.is_homomorphism());
    EXPECT_EQ(g.group.order(), 2 * g.torus.order());
    // normal: closed under conjugation by s
    for (Element t : g.torus_embedding.images) {
      EXPECT_LT(g.group.conjugate(g.s.index, t), n * n);
    }
  }
}

// (a, b; e) -> diag(z^a, z^b) P^e over F_61, z of order n; P the swap matrix.
TEST(Monomial, MatrixModel) {
  constexpr long p = 61;
  using Mat = std::array<long, 4>;
  auto mul = [](const Mat& x, const Mat& y) {
    return Mat{(x[0] * y[0] + x[1] * y[2]) % p, (x[0] * y[1] + x[1] * y[3]) % p,
               (x[2] * y[0] + x[3] * y[2]) % p, (x[2] * y[1] + x[3] * y[3]) % p};
  };
  auto powmod = [](long b, long e) {
    long r = 1;
    for (long i = 0; i < e; ++i) r = r * b % p;
    return r;
  };
  const long g = 2;  // primitive mod 61
  for (std::size_t n = 1; n <= 6; ++n) {
    MonomialGroup m = gm2(n);
    const long z = powmod(g, 60 / static_cast<long>(n));
    std::vector<Mat> image(m.group.order());
    std::map<Mat, Element> back;
    for (std::size_t x = 0; x < m.group.order(); ++x) {
      const std::size_t e = x / (n * n), a = (x % (n * n)) / n, b = x % n;
      Mat d{powmod(z, a), 0, 0, powmod(z, b)};
      Mat swap{0, 1, 1, 0};
      image[x] = e ? mul(d, swap) : d;
      back[image[x]] = static_cast<Element>(x);
    }
    ASSERT_EQ(back.size(), m.group.order());
    for (std::size_t x = 0; x < m.group.order(); ++x) {
      for (std::size_t y = 0; y < m.group.order(); ++y) {
        ASSERT_EQ(back.at(mul(image[x], image[y])),
                  m.group.multiply(static_cast<Element>(x), static_cast<Element>(y)));
      }
    }
  }
}

TEST(Monomial, LargeOrdersUseLightsTest) {
  MonomialGroup g = gm2(32);  // order 2048, beyond the exhaustive limit
  EXPECT_EQ(g.group.order(), 2048u);
  EXPECT_EQ(g.group.element_order(g.torus_element(1, 0)), 32u);
  EXPECT_THROW(gm2(65), InvalidGroup);
}

TEST(Elements, PowerAndInverse) {
  MonomialGroup g = gm2(4);
  const Element x = g.element(1, 2, true);
  EXPECT_EQ(g.group.multiply(x, g.group.inverse(x)), 0);
  EXPECT_EQ(g.group.power(x, static_cast<long>(g.group.element_order(x))), 0);
  EXPECT_EQ(g.group.power(x, -1), g.group.inverse(x));
}

}  // namespace
}  // namespace homalg
