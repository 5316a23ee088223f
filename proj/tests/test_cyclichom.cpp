#include <gtest/gtest.h>

#include <set>

#include "group_zoo.hpp"
#include "homalg/bar.hpp"
#include "homalg/cyclichom.hpp"
#include "homalg/errors.hpp"
#include "oracles.hpp"

namespace homalg {
namespace {

using oracle::Shape;

FgAbelianGroup Zn(long n) { return FgAbelianGroup::cyclic(Integer(n)); }

TEST(ClosedForm, Examples) {
  EXPECT_EQ(oracle::shape_of(cyclic_homology_closed(6, 5)), (Shape{{6}, 0}));
  EXPECT_TRUE(cyclic_homology_closed(5, 2).is_trivial());
  EXPECT_EQ(oracle::shape_of(cyclic_homology_closed(5, 0)), (Shape{{}, 1}));
}

TEST(ClosedForm, AgreesWithBarComplex) {
  for (std::size_t n = 1; n <= 6; ++n) {
    ChainComplex c = bar_complex(cyclic(n), 4);
    for (int i = 0; i <= 3; ++i) {
      ASSERT_TRUE(homology(c, i).isomorphic_to(cyclic_homology_closed(n, i))) << n << " " << i;
    }
  }
}

TEST(Sigma2Homology, Examples) {
  EXPECT_EQ(oracle::shape_of(sigma2_homology(InvolutionModule::trivial(FgAbelianGroup::free(1)), 1)),
            (Shape{{2}, 0}));
  for (long n : {2, 3, 4, 5}) {
    InvolutionModule t = InvolutionModule::swap(Zn(n));
    EXPECT_EQ(oracle::shape_of(sigma2_homology(t, 0)), (Shape{{n}, 0}));
    for (std::size_t p = 1; p <= 4; ++p) EXPECT_TRUE(sigma2_homology(t, p).is_trivial()) << n << p;
  }
  EXPECT_EQ(oracle::shape_of(sigma2_homology(twisted_tensor(Zn(2)), 1)), (Shape{{2}, 0}));
}

TEST(Sigma2Homology, RejectsNonInvolution) {
  EXPECT_THROW(InvolutionModule(Zn(5), IntMatrix::from_dense({{2}})), IllDefinedHomomorphism);
  EXPECT_NO_THROW(InvolutionModule(Zn(5), IntMatrix::from_dense({{4}})));
}

TEST(TwistedTensor, Examples) {
  EXPECT_TRUE(twisted_tensor(FgAbelianGroup()).module.is_trivial());
  InvolutionModule z2 = twisted_tensor(Zn(2));
  EXPECT_EQ(z2.module.order(), 2);
  EXPECT_TRUE(AbHom(z2.module, z2.module, z2.involution.matrix() - IntMatrix::identity(1)).is_zero());
  InvolutionModule free2 = twisted_tensor(FgAbelianGroup::free(2));
  EXPECT_EQ(free2.involution.matrix(),
            IntMatrix::from_dense({{-1, 0, 0, 0}, {0, 0, -1, 0}, {0, -1, 0, 0}, {0, 0, 0, -1}}));
}

TEST(LemmaH1, Examples) {
  auto c3 = lemma_h1_check(Zn(3));
  EXPECT_TRUE(c3.lhs.is_trivial());
  EXPECT_TRUE(c3.equal);
  for (std::size_t r = 1; r <= 3; ++r) {
    auto f = lemma_h1_check(FgAbelianGroup::free(r));
    EXPECT_TRUE(f.lhs.is_trivial());
    EXPECT_TRUE(f.rhs.is_trivial());
    EXPECT_TRUE(f.equal);
  }
  auto c4 = lemma_h1_check(Zn(4));
  EXPECT_EQ(oracle::shape_of(c4.lhs), (Shape{{2}, 0}));
  EXPECT_EQ(oracle::shape_of(c4.rhs), (Shape{{2}, 0}));
  EXPECT_THROW(lemma_h1_check(FgAbelianGroup::free(4)), InvalidGroup);
}

TEST(LemmaH1Property, AllGroupsOfOrderAtMost16) {
  std::mt19937 rng(4);
  for (long n = 1; n <= 16; ++n) {
    for (const auto& shape : oracle::abelian_groups_of_order(n)) {
      FgAbelianGroup a = oracle::scrambled(oracle::diagonal_group(shape), rng);
      ASSERT_TRUE(lemma_h1_check(a).equal) << n;
      // mixed with a free part
      ASSERT_TRUE(lemma_h1_check(FgAbelianGroup::direct_sum(a, FgAbelianGroup::free(1))).equal) << n;
    }
  }
}

TEST(Kunneth, Examples) {
  EXPECT_EQ(oracle::shape_of(kunneth_h3_t2(2).total()), (Shape{{2, 2, 2}, 0}));
  EXPECT_TRUE(kunneth_h3_t2(1).total().is_trivial());
  KunnethH3 k3 = kunneth_h3_t2(3);
  EXPECT_EQ(oracle::shape_of(k3.total()), (Shape{{3, 3, 3}, 0}));
  EXPECT_EQ(oracle::shape_of(k3.tensor_part()), (Shape{{3, 3}, 0}));
  EXPECT_TRUE(k3.h1_h2.is_trivial());
  EXPECT_TRUE(k3.h2_h1.is_trivial());
  EXPECT_EQ(oracle::shape_of(k3.tor), (Shape{{3}, 0}));
}

TEST(Kunneth, AgreesWithBarComplex) {
  for (std::size_t n : {2, 3}) {
    FgAbelianGroup h3 = group_homology(product(cyclic(n), cyclic(n)), 3);
    EXPECT_TRUE(h3.isomorphic_to(kunneth_h3_t2(n).total())) << n;
  }
}

TEST(E2Page, Displays) {
  for (std::size_t n : {2, 3, 4, 8}) {
    for (std::size_t p = 0; p <= 3; ++p) {
      Shape row0 = p == 0 ? Shape{{}, 1} : (p % 2 ? Shape{{2}, 0} : Shape{{}, 0});
      EXPECT_EQ(oracle::shape_of(e2_page_gm2(n, p, 0)), row0);
      Shape row1 = p == 0 ? Shape{{static_cast<long>(n)}, 0} : Shape{{}, 0};
      EXPECT_EQ(oracle::shape_of(e2_page_gm2(n, p, 1)), row1);
    }
  }
  for (std::size_t n : {2, 4, 8, 16}) EXPECT_EQ(oracle::shape_of(e2_page_gm2(n, 1, 2)), (Shape{{2}, 0}));
  for (std::size_t n : {3, 5, 9}) EXPECT_TRUE(e2_page_gm2(n, 1, 2).is_trivial());
  EXPECT_THROW(e2_page_gm2(2, 1, 3), DegreeOutOfRange);
}

// E^2_{1,2} is the 2-torsion of (2-part of Z/n) tensored with itself.
TEST(E2PageProperty, TwoTorsionOfTwoPrimaryTensorSquare) {
  for (long n = 1; n <= 16; ++n) {
    long two = 1;
    while (n % (two * 2) == 0) two *= 2;
    // Z/two (x) Z/two = Z/two; its 2-torsion has order gcd(two, 2)
    long expected = std::min<long>(two, 2);
    FgAbelianGroup e = e2_page_gm2(static_cast<std::size_t>(n), 1, 2);
    EXPECT_EQ(e.order(), expected) << n;
  }
}

TEST(Cohomology, SecondCohomologyIsExt) {
  for (std::size_t n = 1; n <= 8; ++n) {
    FgAbelianGroup h2 = cohomology_trivial(cyclic(2), 2, n);
    EXPECT_TRUE(h2.isomorphic_to(ext(Zn(2), Zn(static_cast<long>(n))))) << n;
  }
  // H^1(G; Z/m) = Hom(G_ab, Z/m)
  EXPECT_TRUE(cohomology_trivial(cyclic(6), 1, 4).isomorphic_to(hom(Zn(6), Zn(4))));
  EXPECT_TRUE(cohomology_trivial(zoo::symmetric3(), 1, 6).isomorphic_to(Zn(2)));
}

// Elementwise oracle: H_p of the order-2 group acting on M = Z/d_1 + ... by S,
// computed with explicit element sets.
struct Module {
  std::vector<long> d;
  std::vector<std::vector<long>> s;

  std::vector<std::vector<long>> elements() const {
    std::vector<std::vector<long>> out{{}};
    for (long di : d) {
      std::vector<std::vector<long>> next;
      for (const auto& x : out) {
        for (long v = 0; v < di; ++v) {
          auto y = x;
          y.push_back(v);
          next.push_back(y);
        }
      }
      out = std::move(next);
    }
    return out;
  }
  std::vector<long> act(const std::vector<long>& x, int sign_id) const {  // S x + sign_id * x
    std::vector<long> y(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
      long v = sign_id * x[i];
      for (std::size_t j = 0; j < d.size(); ++j) v += s[i][j] * x[j];
      y[i] = ((v % d[i]) + d[i]) % d[i];
    }
    return y;
  }
};

// counts[k] = #{ x in ker g : k x in im f } / |im f|
std::vector<long> brute_force_counts(const Module& m, std::size_t p) {
  int f_sign = 0, g_sign = 0;  // S + sign * id
  if (p == 0) {
    f_sign = -1;
  } else if (p % 2 == 1) {
    f_sign = 1;
    g_sign = -1;
  } else {
    f_sign = -1;
    g_sign = 1;
  }
  auto elems = m.elements();
  std::set<std::vector<long>> image, kernel;
  for (const auto& x : elems) {
    image.insert(m.act(x, f_sign));
    std::vector<long> gx = p == 0 ? std::vector<long>(m.d.size(), 0) : m.act(x, g_sign);
    if (std::all_of(gx.begin(), gx.end(), [](long v) { return v == 0; })) kernel.insert(x);
  }
  std::vector<long> counts;
  for (long k = 1; k <= 16; ++k) {
    long c = 0;
    for (const auto& x : kernel) {
      std::vector<long> kx(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) kx[i] = (k * x[i]) % m.d[i];
      if (image.count(kx)) ++c;
    }
    counts.push_back(c / static_cast<long>(image.size()));
  }
  return counts;
}

std::vector<Module> involution_modules(const std::vector<long>& d, std::mt19937& rng) {
  const std::size_t k = d.size();
  // entry (i, j) ranges over multiples of d_i / gcd(d_i, d_j) mod d_i
  std::vector<long> step(k * k), choices(k * k);
  long total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      long g = std::gcd(d[i], d[j]);
      step[i * k + j] = d[i] / g;
      choices[i * k + j] = g;
      total *= g;
    }
  }
  std::vector<Module> out;
  auto try_index = [&](long code) {
    Module m{d, std::vector<std::vector<long>>(k, std::vector<long>(k))};
    for (std::size_t e = 0; e < k * k; ++e) {
      m.s[e / k][e % k] = (code % choices[e]) * step[e];
      code /= choices[e];
    }
    // involution check on generators
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<long> ej(k, 0);
      ej[j] = 1;
      if (m.act(m.act(ej, 0), 0) != ej) return;
    }
    out.push_back(m);
  };
  if (total <= 70000) {
    for (long c = 0; c < total; ++c) try_index(c);
  } else {
    std::uniform_int_distribution<long> pick(0, total - 1);
    for (int t = 0; t < 20000; ++t) try_index(pick(rng));
  }
  return out;
}

TEST(Sigma2HomologyProperty, AgreesWithElementwiseOracle) {
  std::mt19937 rng(16);
  int checked = 0;
  for (long n = 2; n <= 16; ++n) {
    for (const auto& shape : oracle::abelian_groups_of_order(n)) {
      for (const Module& m : involution_modules(shape.torsion, rng)) {
        std::vector<Integer> diag(m.d.begin(), m.d.end());
        FgAbelianGroup g(IntMatrix::diagonal(diag, m.d.size(), m.d.size()));
        std::vector<std::vector<Integer>> dense;
        for (const auto& row : m.s) dense.emplace_back(row.begin(), row.end());
        InvolutionModule im(g, IntMatrix::from_dense(dense, m.d.size()));
        for (std::size_t p = 0; p <= 2; ++p) {
          Shape h = oracle::shape_of(sigma2_homology(im, p));
          auto counts = brute_force_counts(m, p);
          for (long k = 1; k <= 16; ++k) {
            ASSERT_EQ(oracle::count_killed_by(h, k), counts[k - 1]) << n << " p=" << p << " k=" << k;
          }
          ++checked;
        }
      }
    }
  }
  EXPECT_GT(checked, 500);
}

}  // namespace
}  // namespace homalg
