#pragma once

#include <cstddef>

#include "homalg/abgroup.hpp"
#include "homalg/groups.hpp"

namespace homalg {

/// A finitely generated abelian group with an action of the group of order 2.
struct InvolutionModule {
  FgAbelianGroup module;
  AbHom involution;

  /// Throws IllDefinedHomomorphism unless involution o involution = id.
  InvolutionModule(FgAbelianGroup m, IntMatrix sigma);

  static InvolutionModule trivial(const FgAbelianGroup& m);
  /// M + M with the two summands exchanged.
  static InvolutionModule swap(const FgAbelianGroup& m);
};

/// H_i(Z/n; Z): Z in degree 0, Z/n in odd degrees, 0 in positive even degrees.
FgAbelianGroup cyclic_homology_closed(std::size_t n, std::size_t i);

/// H_p of the order-2 group with coefficients in M, from the periodic
/// resolution: M/(s-1)M for p = 0, ker(s-1)/(1+s)M for odd p and
/// ker(1+s)/(s-1)M for even p >= 2.
FgAbelianGroup sigma2_homology(const InvolutionModule& m, std::size_t p);

/// A (x) A with s(a (x) b) = -b (x) a, on the generators of tensor_square(a).
InvolutionModule twisted_tensor(const FgAbelianGroup& a);

/// H_1 of the twisted tensor square of A against that of its 2-primary part.
struct TwistedH1Comparison {
  FgAbelianGroup lhs;
  FgAbelianGroup rhs;
  bool equal = false;
};
/// A must be finite or have free rank at most 3 (InvalidGroup otherwise).
TwistedH1Comparison lemma_h1_check(const FgAbelianGroup& a);

/// Kunneth decomposition of H_3(Z/n x Z/n).
struct KunnethH3 {
  FgAbelianGroup h3_h0;   // H_3 (x) H_0
  FgAbelianGroup h0_h3;   // H_0 (x) H_3
  FgAbelianGroup h1_h2;   // H_1 (x) H_2
  FgAbelianGroup h2_h1;   // H_2 (x) H_1
  FgAbelianGroup tor;     // sum of Tor(H_i, H_j), i + j = 2

  /// The four tensor summands.
  FgAbelianGroup tensor_part() const;
  FgAbelianGroup total() const;
};
KunnethH3 kunneth_h3_t2(std::size_t n);

/// H_q(Z/n x Z/n) as a module over the swap, for q <= 2.
InvolutionModule torus_homology_module(std::size_t n, std::size_t q);

/// E^2_{p,q} = H_p(Z/2, H_q(T)) for T = Z/n x Z/n under the swap, q <= 2.
/// Throws DegreeOutOfRange for q > 2.
FgAbelianGroup e2_page_gm2(std::size_t n, std::size_t p, std::size_t q);

/// H^p(G; Z/m) with trivial action, from the dual of the bar complex.
FgAbelianGroup cohomology_trivial(const FiniteGroup& g, std::size_t p, std::size_t m);

}  // namespace homalg
