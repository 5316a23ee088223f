#include <gtest/gtest.h>

#include <random>

#include "homalg/chain_complex.hpp"
#include "homalg/errors.hpp"
#include "oracles.hpp"

namespace homalg {
namespace {

using oracle::Shape;

IntVector vec(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

TEST(ChainComplex, SingleFreeModule) {
  ChainComplex c(0, {1}, {});
  EXPECT_EQ(oracle::shape_of(homology(c, 0)), (Shape{{}, 1}));
  EXPECT_THROW(homology(c, 1), DegreeOutOfRange);
  EXPECT_THROW(homology(c, -1), DegreeOutOfRange);
}

TEST(ChainComplex, MultiplicationByTwo) {
  ChainComplex c(0, {1, 1}, {IntMatrix::from_dense({{2}})});
  EXPECT_EQ(oracle::shape_of(homology(c, 0)), (Shape{{2}, 0}));
  EXPECT_TRUE(homology(c, 1).is_trivial());
  auto w = boundary_witness(c, 0, vec({4}));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, vec({2}));
  EXPECT_FALSE(is_boundary(c, 0, vec({3})));
  CycleClass k = cycle_class(c, 0, vec({3}));
  EXPECT_EQ(k.order, 2);
  EXPECT_EQ(k.coordinates, vec({1}));
}

TEST(ChainComplex, RejectsNonComplex) {
  EXPECT_THROW(ChainComplex(0, {1, 1, 1}, {IntMatrix::from_dense({{1}}), IntMatrix::from_dense({{1}})}),
               NotAComplex);
  EXPECT_THROW(ChainComplex(0, {1, 2}, {IntMatrix::from_dense({{1}})}), DimensionMismatch);
}

TEST(ChainComplex, ZeroChain) {
  ChainComplex c(0, {1, 1}, {IntMatrix::from_dense({{2}})});
  IntVector zero = vec({0});
  auto w = boundary_witness(c, 0, zero);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, vec({0}));
  CycleClass k = cycle_class(c, 0, zero);
  EXPECT_TRUE(k.is_zero());
  EXPECT_EQ(k.order, 1);
}

TEST(ChainComplex, NotACycle) {
  // Z^2 --[1 1]--> Z
  ChainComplex c(0, {1, 2}, {IntMatrix::from_dense({{1, 1}})});
  EXPECT_FALSE(is_cycle(c, 1, vec({1, 0})));
  EXPECT_TRUE(is_cycle(c, 1, vec({1, -1})));
  EXPECT_THROW(cycle_class(c, 1, vec({1, 0})), NotACycle);
  EXPECT_EQ(cycle_class(c, 1, vec({2, -2})).order, 0);
}

// A complex assembled from elementary pieces with known homology, then hidden
// behind random unimodular basis changes in every degree.
struct Elementary {
  struct Piece {
    int top;   // basis element in degree top maps to d times one in top - 1
    long d;
  };
  int top_degree = 0;
  std::vector<std::size_t> free_count;  // per degree
  std::vector<Piece> pieces;

  // per degree: list of (kind, index) for each basis vector
  std::vector<std::vector<std::pair<int, std::size_t>>> layout() const {
    std::vector<std::vector<std::pair<int, std::size_t>>> out(top_degree + 1);
    for (int n = 0; n <= top_degree; ++n) {
      for (std::size_t i = 0; i < free_count[n]; ++i) out[n].push_back({0, i});
      for (std::size_t p = 0; p < pieces.size(); ++p) {
        if (pieces[p].top == n) out[n].push_back({1, p});      // upper end
        if (pieces[p].top - 1 == n) out[n].push_back({2, p});  // lower end
      }
    }
    return out;
  }

  Shape expected(int n) const {
    std::vector<long> orders;
    for (const auto& p : pieces) {
      if (p.top == n + 1) orders.push_back(p.d);
    }
    Shape s = oracle::shape_from_cyclics(orders);
    s.free_rank += free_count[n];
    return s;
  }
};

struct Scrambled {
  Elementary shape;
  ChainComplex complex;
  std::vector<IntMatrix> basis_change;  // P_n: elementary -> scrambled coordinates
};

Scrambled build(const Elementary& e, std::mt19937& rng) {
  auto layout = e.layout();
  std::vector<std::size_t> ranks;
  for (const auto& l : layout) ranks.push_back(l.size());
  std::vector<IntMatrix> p, pinv;
  for (auto r : ranks) {
    auto [a, b] = oracle::random_unimodular_pair(r, rng, 12);
    p.push_back(a);
    pinv.push_back(b);
  }
  std::vector<IntMatrix> boundaries;
  for (int n = 1; n <= e.top_degree; ++n) {
    IntMatrix d(ranks[n - 1], ranks[n]);
    for (std::size_t c = 0; c < layout[n].size(); ++c) {
      auto [kind, idx] = layout[n][c];
      if (kind != 1) continue;
      for (std::size_t r = 0; r < layout[n - 1].size(); ++r) {
        if (layout[n - 1][r] == std::make_pair(2, idx)) d.set(r, c, Integer(e.pieces[idx].d));
      }
    }
    boundaries.push_back(p[n - 1] * d * pinv[n]);
  }
  return Scrambled{e, ChainComplex(0, ranks, boundaries), p};
}

Elementary random_elementary(std::mt19937& rng) {
  Elementary e;
  e.top_degree = 4;
  std::uniform_int_distribution<int> count(0, 2);
  std::uniform_int_distribution<long> dd(1, 12);
  std::uniform_int_distribution<int> deg(1, e.top_degree);
  for (int n = 0; n <= e.top_degree; ++n) e.free_count.push_back(count(rng));
  int pieces = count(rng) + count(rng) + 2;
  for (int i = 0; i < pieces; ++i) e.pieces.push_back({deg(rng), dd(rng)});
  return e;
}

TEST(ChainComplexProperty, HomologyOfScrambledElementaryComplexes) {
  std::mt19937 rng(2024);
  for (int t = 0; t < 60; ++t) {
    Scrambled s = build(random_elementary(rng), rng);
    for (int n = 0; n <= s.shape.top_degree; ++n) {
      ASSERT_EQ(oracle::shape_of(homology(s.complex, n)), s.shape.expected(n)) << t << " " << n;
    }
  }
}

TEST(ChainComplexProperty, ClassesAgreeWithElementaryOracle) {
  std::mt19937 rng(77);
  std::uniform_int_distribution<long> coef(-30, 30);
  int checked = 0;
  for (int t = 0; t < 40; ++t) {
    Scrambled s = build(random_elementary(rng), rng);
    auto layout = s.shape.layout();
    for (int n = 0; n <= s.shape.top_degree; ++n) {
      for (int k = 0; k < 6; ++k) {
        // random cycle: combination of free and lower-end vectors
        IntVector elem(layout[n].size());
        bool zero_expected = true;
        for (std::size_t i = 0; i < layout[n].size(); ++i) {
          auto [kind, idx] = layout[n][i];
          if (kind == 1) continue;
          long c = coef(rng);
          if (k == 0 && kind == 2) c *= s.shape.pieces[idx].d;  // boundary
          if (k == 0 && kind == 0) c = 0;
          elem[i] = c;
          if (kind == 0 && c != 0) zero_expected = false;
          if (kind == 2 && c % s.shape.pieces[idx].d != 0) zero_expected = false;
        }
        IntVector z = s.basis_change[n].apply(elem);
        ASSERT_TRUE(is_cycle(s.complex, n, z));
        CycleClass cls = cycle_class(s.complex, n, z);
        ASSERT_EQ(cls.is_zero(), zero_expected);
        auto w = boundary_witness(s.complex, n, z);
        ASSERT_EQ(w.has_value(), zero_expected);
        if (w && n < s.shape.top_degree) {
          ASSERT_EQ(s.complex.boundary(n + 1).apply(*w), z);
        }
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 1000);
}

TEST(ChainComplexProperty, ClassIsAdditive) {
  std::mt19937 rng(9);
  std::uniform_int_distribution<long> coef(-9, 9);
  for (int t = 0; t < 30; ++t) {
    Scrambled s = build(random_elementary(rng), rng);
    for (int n = 0; n <= s.shape.top_degree; ++n) {
      const IntMatrix& gens = s.complex.homology_data(n).generator_cycles();
      auto random_cycle = [&] {
        IntVector c(gens.cols());
        for (auto& x : c) x = coef(rng);
        IntVector z = gens.apply(c);
        // add a boundary
        if (n < s.shape.top_degree) {
          IntVector x(s.complex.rank(n + 1));
          for (auto& v : x) v = coef(rng);
          IntVector b = s.complex.boundary(n + 1).apply(x);
          for (std::size_t i = 0; i < z.size(); ++i) z[i] += b[i];
        }
        return std::make_pair(z, c);
      };
      auto [z1, c1] = random_cycle();
      auto [z2, c2] = random_cycle();
      IntVector sum(z1.size());
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = z1[i] + z2[i];
      CycleClass a = cycle_class(s.complex, n, z1);
      CycleClass b = cycle_class(s.complex, n, z2);
      ASSERT_EQ(cycle_class(s.complex, n, sum), a + b);
      // generator cycles resolve to their own coordinates
      const auto& moduli = homology(s.complex, n).moduli();
      for (std::size_t j = 0; j < c1.size(); ++j) {
        Integer expect = moduli[j] == 0 ? c1[j] : mod_nonneg(c1[j], moduli[j]);
        ASSERT_EQ(a.coordinates[j], expect);
      }
    }
  }
}

TEST(CycleClass, Arithmetic) {
  ChainComplex c(0, {2, 2}, {IntMatrix::from_dense({{2, 0}, {0, 0}})});  // H_0 = Z/2 + Z
  CycleClass a = cycle_class(c, 0, vec({1, 0}));
  CycleClass b = cycle_class(c, 0, vec({1, 3}));
  EXPECT_EQ(a.order, 2);
  EXPECT_EQ(b.order, 0);
  EXPECT_TRUE((a + a).is_zero());
  EXPECT_EQ((b - a).order, 0);
  EXPECT_EQ(a.scaled(3), a);
}

}  // namespace
}  // namespace homalg
