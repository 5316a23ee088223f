#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "homalg/int_matrix.hpp"

namespace homalg {

/// A finitely generated abelian group, presented as the cokernel of an
/// integer relation matrix (generators = rows, relations = columns).
///
/// The canonical form (invariant factors d_1 | d_2 | ... with every d_i >= 2,
/// plus a free rank) is computed once at construction.  Canonical coordinates
/// of an element list its torsion components (reduced mod d_i) followed by its
/// free components.  Copies share the immutable state.
class FgAbelianGroup {
 public:
  /// The trivial group on no generators.
  FgAbelianGroup();
  explicit FgAbelianGroup(IntMatrix relations);

  /// Z/n, or Z when n == 0.
  static FgAbelianGroup cyclic(const Integer& n);
  static FgAbelianGroup free(std::size_t rank);
  static FgAbelianGroup from_invariants(std::span<const Integer> factors, std::size_t free_rank);
  static FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b);
  /// A^k as a block-diagonal presentation.
  static FgAbelianGroup power(const FgAbelianGroup& a, std::size_t k);

  std::size_t generator_count() const;
  const IntMatrix& relations() const;

  const std::vector<Integer>& invariant_factors() const;
  std::size_t free_rank() const;
  bool is_finite() const { return free_rank() == 0; }
  bool is_trivial() const { return invariant_factors().empty() && free_rank() == 0; }
  /// Throws InfiniteGroup when the free rank is positive.
  Integer order() const;
  Integer exponent() const;

  /// Number of canonical coordinates (torsion summands + free rank).
  std::size_t canonical_rank() const;
  /// Modulus of each canonical coordinate; 0 marks a free coordinate.
  const std::vector<Integer>& moduli() const;
  /// canonical_rank x generator_count matrix sending generator coordinates to
  /// (unreduced) canonical coordinates.
  const IntMatrix& to_canonical() const;
  /// generator_count x canonical_rank matrix of canonical generator lifts.
  const IntMatrix& canonical_generators() const;

  IntVector coordinates(std::span<const Integer> x) const;
  bool is_zero_element(std::span<const Integer> x) const;
  bool equal_elements(std::span<const Integer> x, std::span<const Integer> y) const;
  /// Element with the given canonical coordinates, in generator coordinates.
  IntVector lift(std::span<const Integer> canonical) const;
  /// Order of an element (0 for infinite order).
  Integer element_order(std::span<const Integer> x) const;

  /// Every element as a canonical coordinate tuple, lexicographically.
  std::vector<IntVector> elements(std::size_t budget = 10'000'000) const;

  bool isomorphic_to(const FgAbelianGroup& other) const;
  /// Same presentation (generators and relation matrix).
  bool same_presentation(const FgAbelianGroup& other) const;
  std::string to_string() const;

 private:
  struct State;
  static std::shared_ptr<const State> build_state(IntMatrix relations);

  std::shared_ptr<const State> state_;
};

/// Group homomorphism given by its matrix on generators
/// (target generators x source generators).  Checked on construction.
class AbHom {
 public:
  AbHom(FgAbelianGroup source, FgAbelianGroup target, IntMatrix matrix);

  static AbHom identity(const FgAbelianGroup& a);
  static AbHom zero(const FgAbelianGroup& source, const FgAbelianGroup& target);

  const FgAbelianGroup& source() const { return source_; }
  const FgAbelianGroup& target() const { return target_; }
  const IntMatrix& matrix() const { return matrix_; }

  IntVector apply(std::span<const Integer> x) const { return matrix_.apply(x); }
  bool is_zero() const;
  /// this o first
  AbHom after(const AbHom& first) const;

 private:
  FgAbelianGroup source_;
  FgAbelianGroup target_;
  IntMatrix matrix_;
};

struct Subgroup {
  FgAbelianGroup group;
  AbHom inclusion;
};

struct Quotient {
  FgAbelianGroup group;
  AbHom projection;
};

Subgroup kernel(const AbHom& f);
Subgroup image(const AbHom& f);
Quotient cokernel(const AbHom& f);
/// ker(f) / im(g) for A --g--> B --f--> C; throws unless f o g = 0.
FgAbelianGroup homology_at(const AbHom& g, const AbHom& f);

bool is_injective(const AbHom& f);
bool is_surjective(const AbHom& f);

/// Length-one free resolution 0 -> Z^k -> Z^n -> A -> 0 read off the
/// presentation (the relation columns replaced by a basis of their span).
struct FreeResolution {
  std::size_t generators = 0;
  IntMatrix relations;  // generators x k, injective
};
FreeResolution free_resolution(const FgAbelianGroup& a);

FgAbelianGroup tensor(const FgAbelianGroup& a, const FgAbelianGroup& b);
FgAbelianGroup tor(const FgAbelianGroup& a, const FgAbelianGroup& b);
FgAbelianGroup hom(const FgAbelianGroup& a, const FgAbelianGroup& b);
FgAbelianGroup ext(const FgAbelianGroup& a, const FgAbelianGroup& b);

/// A ~ A_2 + A_odd + Z^r.
struct PrimaryParts {
  FgAbelianGroup two_primary;
  FgAbelianGroup odd;
  std::size_t free_rank = 0;
};
PrimaryParts primary_parts(const FgAbelianGroup& a);

/// A (x) A on generator pairs e_i (x) e_j (index i * n + j).
FgAbelianGroup tensor_square(const FgAbelianGroup& a);

/// (A (x) A) / <a(x)b + b(x)a>, with the projection from tensor_square(a).
Quotient tensor_sigma(const FgAbelianGroup& a);

/// 0 -> kernel -> total -> quotient -> 0.
struct ExtensionDatum {
  FgAbelianGroup kernel;
  FgAbelianGroup total;
  FgAbelianGroup quotient;
  AbHom inclusion;
  AbHom projection;

  /// Injective inclusion, surjective projection, exact in the middle.
  bool is_exact() const;
  /// Brute-force search for a section of the projection (finite groups).
  bool has_section() const;
};

struct ExtensionClass {
  ExtensionDatum datum;
  bool split = false;
  /// Canonical coordinates of the class in Ext(quotient, kernel).
  IntVector ext_coordinates;
};

/// One representative per element of Ext(quotient, kernel).  Both groups
/// must be finite (InfiniteGroup otherwise).
std::vector<ExtensionClass> classify_extensions(const FgAbelianGroup& kernel,
                                                const FgAbelianGroup& quotient);

}  // namespace homalg
