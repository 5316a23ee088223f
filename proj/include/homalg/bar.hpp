#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "homalg/chain_complex.hpp"
#include "homalg/groups.hpp"
#include "homalg/integer.hpp"

namespace homalg {

/// Element of the normalized bar complex with trivial coefficients:
/// a sparse integer combination of symbols [g_1|...|g_n].
///
/// Symbols containing the identity are dropped on insertion and zero
/// coefficients are never stored, so equal chains compare equal.
class BarChain {
 public:
  using Symbol = std::vector<Element>;

  BarChain(FiniteGroup group, std::size_t degree);
  static BarChain symbol(FiniteGroup group, Symbol s, const Integer& coefficient = 1);

  const FiniteGroup& group() const { return group_; }
  std::size_t degree() const { return degree_; }
  const std::map<Symbol, Integer>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const Symbol& s) const;

  /// Adds c [s]; throws DimensionMismatch on a symbol of the wrong length.
  void add(const Symbol& s, const Integer& c);

  BarChain& operator+=(const BarChain& rhs);
  BarChain& operator-=(const BarChain& rhs);
  BarChain operator+(const BarChain& rhs) const;
  BarChain operator-(const BarChain& rhs) const;
  BarChain operator-() const;
  BarChain scaled(const Integer& k) const;
  bool operator==(const BarChain& rhs) const;

  /// "+1 [a|b] -2 [c|d]" with element labels; "0" for the zero chain.
  std::string to_string() const;
  /// Inverse of to_string.  The degree is read from the symbols; a zero
  /// chain needs `degree`.
  static BarChain parse(const FiniteGroup& group, std::string_view text,
                        std::optional<std::size_t> degree = std::nullopt);

 private:
  void require_compatible(const BarChain& rhs) const;

  FiniteGroup group_;
  std::size_t degree_;
  std::map<Symbol, Integer> terms_;
};

/// d[g1|...|gn] = [g2|...|gn] + sum_i (-1)^i [..|g_i g_{i+1}|..] + (-1)^n [g1|...|g_{n-1}];
/// zero in degree 1.  Degree-0 chains are rejected.
BarChain boundary(const BarChain& z);

/// Chain homotopy between conjugation by g and the identity:
/// rho_g[g1|...|gn] = sum_j (-1)^j [g1|...|gj|g^-1|g g_{j+1} g^-1|...|g gn g^-1].
BarChain homotopy_rho(const GroupElement& g, const BarChain& z);

/// [g1|...|gn] -> [g g1 g^-1|...|g gn g^-1].
BarChain conjugate_chain(const GroupElement& g, const BarChain& z);

/// Image of a chain under a group homomorphism.
BarChain map_chain(const GroupHom& f, const BarChain& z);

/// (order - 1)^n, saturating.
std::uint64_t bar_rank(const FiniteGroup& g, std::size_t n);

/// Position of a symbol in the lexicographic basis of degree n, and back.
std::size_t bar_index(const FiniteGroup& g, const BarChain::Symbol& s);
BarChain::Symbol bar_symbol(const FiniteGroup& g, std::size_t n, std::size_t index);

IntVector to_coordinates(const BarChain& z);
BarChain from_coordinates(const FiniteGroup& g, std::size_t degree, std::span<const Integer> x);

inline constexpr std::uint64_t kDefaultBarBudget = 10'000'000;

/// Normalized coinvariant bar complex in degrees 0..top.  Throws
/// BudgetExceeded when (order - 1)^top exceeds the budget.
ChainComplex bar_complex(const FiniteGroup& g, std::size_t top,
                         std::uint64_t budget = kDefaultBarBudget);

/// H_n(G; Z) from the bar complex through degree n + 1.
FgAbelianGroup group_homology(const FiniteGroup& g, std::size_t n,
                              std::uint64_t budget = kDefaultBarBudget);

}  // namespace homalg
