#include "homalg/cyclichom.hpp"

#include "homalg/bar.hpp"
#include "homalg/errors.hpp"

namespace homalg {

namespace {

FgAbelianGroup z_mod(std::size_t n) { return FgAbelianGroup::cyclic(Integer(static_cast<unsigned long>(n))); }

}  // namespace

InvolutionModule::InvolutionModule(FgAbelianGroup m, IntMatrix sigma)
    : module(m), involution(m, m, std::move(sigma)) {
  const IntMatrix& s = involution.matrix();
  AbHom square_minus_id(module, module, s * s - IntMatrix::identity(module.generator_count()));
  if (!square_minus_id.is_zero()) throw IllDefinedHomomorphism("module map does not square to the identity");
}

InvolutionModule InvolutionModule::trivial(const FgAbelianGroup& m) {
  return InvolutionModule(m, IntMatrix::identity(m.generator_count()));
}

InvolutionModule InvolutionModule::swap(const FgAbelianGroup& m) {
  const std::size_t k = m.generator_count();
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < k; ++i) {
    t.push_back({i, k + i, Integer(1)});
    t.push_back({k + i, i, Integer(1)});
  }
  return InvolutionModule(FgAbelianGroup::direct_sum(m, m), IntMatrix::from_triplets(2 * k, 2 * k, t));
}

FgAbelianGroup cyclic_homology_closed(std::size_t n, std::size_t i) {
  if (n == 0) throw InvalidGroup("cyclic group of order 0");
  if (i == 0) return FgAbelianGroup::free(1);
  if (i % 2 == 1) return z_mod(n);
  return FgAbelianGroup();
}

FgAbelianGroup sigma2_homology(const InvolutionModule& m, std::size_t p) {
  const FgAbelianGroup& g = m.module;
  const IntMatrix id = IntMatrix::identity(g.generator_count());
  AbHom minus(g, g, m.involution.matrix() - id);  // s - 1
  AbHom plus(g, g, m.involution.matrix() + id);   // 1 + s
  if (p == 0) return cokernel(minus).group;
  if (p % 2 == 1) return homology_at(plus, minus);
  return homology_at(minus, plus);
}

InvolutionModule twisted_tensor(const FgAbelianGroup& a) {
  const std::size_t n = a.generator_count();
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t.push_back({j * n + i, i * n + j, Integer(-1)});
  }
  return InvolutionModule(tensor_square(a), IntMatrix::from_triplets(n * n, n * n, t));
}

TwistedH1Comparison lemma_h1_check(const FgAbelianGroup& a) {
  if (a.free_rank() > 3) {
    throw InvalidGroup("free rank " + std::to_string(a.free_rank()) + " above the supported 3");
  }
  TwistedH1Comparison out;
  out.lhs = sigma2_homology(twisted_tensor(a), 1);
  out.rhs = sigma2_homology(twisted_tensor(primary_parts(a).two_primary), 1);
  out.equal = out.lhs.isomorphic_to(out.rhs);
  return out;
}

FgAbelianGroup KunnethH3::tensor_part() const {
  return FgAbelianGroup::direct_sum(FgAbelianGroup::direct_sum(h3_h0, h0_h3),
                                    FgAbelianGroup::direct_sum(h1_h2, h2_h1));
}

FgAbelianGroup KunnethH3::total() const { return FgAbelianGroup::direct_sum(tensor_part(), tor); }

KunnethH3 kunneth_h3_t2(std::size_t n) {
  auto h = [n](std::size_t i) { return cyclic_homology_closed(n, i); };
  KunnethH3 k;
  k.h3_h0 = tensor(h(3), h(0));
  k.h0_h3 = tensor(h(0), h(3));
  k.h1_h2 = tensor(h(1), h(2));
  k.h2_h1 = tensor(h(2), h(1));
  k.tor = FgAbelianGroup::direct_sum(FgAbelianGroup::direct_sum(tor(h(0), h(2)), tor(h(1), h(1))),
                                     tor(h(2), h(0)));
  return k;
}

InvolutionModule torus_homology_module(std::size_t n, std::size_t q) {
  switch (q) {
    case 0:
      return InvolutionModule::trivial(FgAbelianGroup::free(1));
    case 1:
      return InvolutionModule::swap(z_mod(n));
    case 2:
      // H_2(T) = H_1 (x) H_1 for cyclic factors; the swap acts as a(x)b -> -b(x)a
      return twisted_tensor(z_mod(n));
    default:
      throw DegreeOutOfRange("torus homology module only available for q <= 2");
  }
}

FgAbelianGroup e2_page_gm2(std::size_t n, std::size_t p, std::size_t q) {
  if (q > 2) throw DegreeOutOfRange("E2 entries with q > 2 are not computed");
  return sigma2_homology(torus_homology_module(n, q), p);
}

FgAbelianGroup cohomology_trivial(const FiniteGroup& g, std::size_t p, std::size_t m) {
  ChainComplex c = bar_complex(g, p + 1);
  const FgAbelianGroup coeff = z_mod(m);
  auto cochains = [&](std::size_t k) { return FgAbelianGroup::power(coeff, c.rank(static_cast<int>(k))); };
  // delta^k : C^k -> C^{k+1} is the transpose of d_{k+1}
  auto delta = [&](std::size_t k) {
    return AbHom(cochains(k), cochains(k + 1), c.boundary(static_cast<int>(k) + 1).transpose());
  };
  AbHom incoming = p == 0 ? AbHom::zero(FgAbelianGroup(), cochains(0)) : delta(p - 1);
  return homology_at(incoming, delta(p));
}

}  // namespace homalg
