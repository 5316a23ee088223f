#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "homalg/abgroup.hpp"
#include "homalg/bar.hpp"
#include "homalg/chain_complex.hpp"
#include "homalg/groups.hpp"

namespace homalg {

/// Roots of unity of order n inside the monomial group GM2(n).
///
/// The generator xi is exponent 1 of the cyclic factor, so (xi^a, xi^b) is
/// the torus element (a, b).  For even n = 2m, -1 = xi^m.
class CyclotomicContext {
 public:
  explicit CyclotomicContext(std::size_t n);

  std::size_t n() const { return n_; }
  bool even() const { return n_ % 2 == 0; }
  /// n / 2; throws OddOrder for odd n.
  std::size_t half() const;

  const MonomialGroup& monomial() const { return gm2_; }
  const FiniteGroup& torus() const { return gm2_.torus; }
  const FiniteGroup& group() const { return gm2_.group; }

  /// (xi^a, xi^b) in the torus.
  Element torus_element(long a, long b) const;
  /// The swap automorphism (x, y) -> (y, x) of the torus.
  const GroupHom& torus_swap() const { return swap_; }

  /// Torus chain pushed into GM2(n).
  BarChain to_monomial(const BarChain& torus_chain) const;

  /// Label of the Tor generator, "<xi,n,xi>".
  std::string tor_label() const;

 private:
  std::size_t n_;
  MonomialGroup gm2_;
  GroupHom swap_;
};

/// Which third symbol the middle correction term carries.
///
/// `middle_summand` is [(1,xi)|(1,-1)|(xi,1)], the i = m summand of the
/// splitting cycle; `swapped_entry` has (xi,1) in the first slot instead.
/// Only the former makes the upsilon identity and the splitting decomposition
/// hold; the latter is kept to exhibit the residual.
enum class MiddleTermForm { middle_summand, swapped_entry };

/// [(-1,1)|(1,xi)] - [(1,xi)|(-1,1)], a 2-cycle of the torus.
BarChain chain_h(const CyclotomicContext& ctx);

/// Splitting cycle for the Tor summand of H3 of the torus, summed over
/// i = first..last.  The default range is 1..n.
BarChain chain_chi(const CyclotomicContext& ctx);
BarChain chain_chi_range(const CyclotomicContext& ctx, long first, long last);

/// The correction terms 1..6, all torus chains of degree 3 (n even).
BarChain chain_chi_k(const CyclotomicContext& ctx, int k,
                     MiddleTermForm form = MiddleTermForm::middle_summand);

/// chi_1 + chi_3 (torus, degree 3).
BarChain chain_b(const CyclotomicContext& ctx);
/// Twelve-term degree-4 chain in GM2(n).
BarChain chain_eta(const CyclotomicContext& ctx);
/// Degree-4 torus chain with 8 terms per i = 0..m-1.
BarChain chain_upsilon(const CyclotomicContext& ctx);
/// b - rho_s(h) in GM2(n), the cycle representing (-1) (x) xi.
BarChain chain_omega(const CyclotomicContext& ctx);

struct IdentityCheck {
  std::string name;
  std::string statement;
  bool holds = false;
  BarChain residual{FiniteGroup(), 0};  // lhs - rhs
};

struct WitnessReport {
  std::size_t n = 0;
  std::vector<IdentityCheck> identities;  // the four boundary identities
  IdentityCheck decomposition;            // chi = chi_1 + chi_5 + chi_6 + chi_2
  bool omega_is_cycle = false;

  bool all_hold() const;
};

/// Checks, for even n:
///   d b = tau(h) - h                               (torus)
///   d eta = -2 rho_s(h) + chi_3 - chi_4            (GM2)
///   d upsilon = chi_1 - chi_2 + chi_3 - chi_5 - chi_6 + chi_4
///   2 omega - chi = d(eta + upsilon)
/// plus the decomposition of chi and the cycle property of omega.
WitnessReport verify_identities(const CyclotomicContext& ctx,
                                MiddleTermForm form = MiddleTermForm::middle_summand);

/// Size of the degree-4 bar basis of GM2(2).
inline constexpr std::uint64_t kClassBudget = 2401;

struct ResolvedClasses {
  std::size_t n = 0;
  CycleClass omega;        // in H3(GM2)
  CycleClass chi;          // in H3(GM2)
  CycleClass chi_torus;    // in H3(T2)
  FgAbelianGroup h3_monomial;
  FgAbelianGroup h3_torus;
  bool twice_omega_is_chi = false;
  bool chi_nonzero_in_monomial = false;
};

/// Homology classes from the full bar complexes through degree 4.  Throws
/// BudgetExceeded when the degree-4 basis of GM2(n) exceeds `budget`, which
/// by default admits n = 2 only.
ResolvedClasses resolve_classes(const CyclotomicContext& ctx, std::uint64_t budget = kClassBudget);

}  // namespace homalg
