#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "homalg/abgroup.hpp"
#include "homalg/finite_field.hpp"

namespace homalg {

/// Generators [a] for a not in {0, 1}, and one five-term relator per
/// admissible pair (a, b):
///   [a] - [b] + [b/a] - [(1 - 1/a)/(1 - 1/b)] + [(1 - a)/(1 - b)].
struct PreBlochPresentation {
  std::vector<FieldElement> generators;
  std::vector<std::pair<FieldElement, FieldElement>> pairs;  // one per relator column
  IntMatrix relators;                                        // generators x pairs

  std::size_t generator_index(FieldElement a) const;
};

inline constexpr std::uint64_t kDefaultRelatorBudget = 20'000;

bool is_admissible(const FiniteField& f, FieldElement a, FieldElement b);

/// Throws BudgetExceeded when the number of relators exceeds the budget.
PreBlochPresentation pre_bloch_presentation(const FiniteField& f,
                                            std::uint64_t budget = kDefaultRelatorBudget);

struct PreBloch {
  FgAbelianGroup group;
  PreBlochPresentation presentation;
};
PreBloch pre_bloch(const FiniteField& f, std::uint64_t budget = kDefaultRelatorBudget);

/// F* (x) F* = Z/(q-1) on g (x) g, so a (x) b has coordinate log a * log b.
FgAbelianGroup unit_tensor_square(const FiniteField& f);
/// (F* (x) F*)_sigma with its projection from unit_tensor_square.
Quotient unit_tensor_sigma(const FiniteField& f);

/// [a] -> a (x) (1 - a) into (F* (x) F*)_sigma.  Throws
/// WellDefinednessFailure if a relator has a nonzero image.
AbHom lambda_map(const FiniteField& f, const PreBloch& p);
FgAbelianGroup bloch_group(const FiniteField& f, const PreBloch& p);

/// Evaluates the image of the five-term relator in F* (x) F* and compares it
/// with a (x) c + c (x) a, c = (1 - a)/(1 - b).  Throws InadmissiblePair.
bool lambda_prime_relator_check(const FiniteField& f, FieldElement a, FieldElement b);

/// K_2 via F*(x)F* / <a (x) (1 - a)> and via (F*(x)F*)_sigma / <a (x) (1 - a)>.
struct MilnorK2 {
  Quotient from_tensor;
  Quotient from_sigma;
};
/// Throws PresentationMismatch if the two quotients are not isomorphic.
MilnorK2 milnor_k2(const FiniteField& f);

/// Exactness of 0 -> B -> P -> (F*(x)F*)_sigma -> K_2 -> 0 at B, P,
/// (F*(x)F*)_sigma and K_2, in that order.
struct FourTermReport {
  FgAbelianGroup pre_bloch;
  FgAbelianGroup bloch;
  FgAbelianGroup tensor_sigma;
  FgAbelianGroup lambda_image;
  FgAbelianGroup k2;
  std::array<bool, 4> exact{};

  bool all_exact() const { return exact[0] && exact[1] && exact[2] && exact[3]; }
};
FourTermReport verify_four_term(const FiniteField& f, std::uint64_t budget = kDefaultRelatorBudget);

/// Tor(mu, mu) = Z/(q-1) for odd q extended non-trivially by Z/2; Tor itself
/// in characteristic 2.
struct TorTilde {
  FgAbelianGroup group;
  FgAbelianGroup tor;
  std::optional<ExtensionDatum> extension;  // present for odd q
};
TorTilde tor_tilde(const FiniteField& f);

}  // namespace homalg
