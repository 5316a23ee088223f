#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "homalg/abgroup.hpp"
#include "homalg/int_matrix.hpp"
#include "homalg/smith.hpp"

namespace homalg {

/// Bounded complex of free Z-modules C_lo, ..., C_hi.  Degrees outside the
/// range are zero.  boundary(n) is the rank(n-1) x rank(n) matrix of
/// d_n : C_n -> C_{n-1}; d_lo is the zero map.
///
/// Immutable.  Homology data per degree is computed on first use and shared
/// between copies.
class ChainComplex {
 public:
  ChainComplex();
  /// boundaries[i] is d_{lowest + i + 1}.  Throws NotAComplex if d o d != 0
  /// and DimensionMismatch on inconsistent shapes.
  ChainComplex(int lowest, std::vector<std::size_t> ranks, std::vector<IntMatrix> boundaries);

  int lowest_degree() const;
  int highest_degree() const;
  bool in_range(int n) const { return n >= lowest_degree() && n <= highest_degree(); }
  std::size_t rank(int n) const;
  /// d_n for lowest <= n <= highest + 1 (both ends are zero maps).
  const IntMatrix& boundary(int n) const;

  /// Homology data for degree n; throws DegreeOutOfRange.
  const class HomologyGroup& homology_data(int n) const;
  /// Some x with d_{n+1} x = z, if one exists.
  std::optional<IntVector> solve_boundary(int n, std::span<const Integer> z) const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

/// H_n = ker d_n / im d_{n+1}, together with the basis change that resolves
/// cycles into canonical coordinates.
///
/// With U d_{n+1} V = diag(d_1, ..., d_r), cycle coordinates y = U z split into
/// torsion coordinates y_i mod d_i (i < r, d_i >= 2) and a free part obtained
/// from the cycle lattice inside the last coordinates.
class HomologyGroup {
 public:
  int degree() const { return degree_; }
  const FgAbelianGroup& group() const { return group_; }

  /// Canonical coordinates of the class of z; throws NotACycle.
  IntVector class_coordinates(std::span<const Integer> z) const;
  /// Columns are cycles representing the canonical generators of group().
  const IntMatrix& generator_cycles() const { return generator_cycles_; }

 private:
  friend class ChainComplex;
  HomologyGroup() = default;

  int degree_ = 0;
  IntMatrix outgoing_;           // d_n
  IntMatrix left_;               // U
  std::vector<Integer> torsion_; // d_i >= 2, with their positions
  std::vector<std::size_t> torsion_index_;
  std::size_t rank_ = 0;         // rank of d_{n+1}
  LatticeBasis free_cycles_;     // cycle lattice in coordinates >= rank_
  FgAbelianGroup group_;
  IntMatrix generator_cycles_;
};

FgAbelianGroup homology(const ChainComplex& c, int n);

bool is_cycle(const ChainComplex& c, int n, std::span<const Integer> z);
/// Witness x with d_{n+1} x = z when z is a boundary.
std::optional<IntVector> boundary_witness(const ChainComplex& c, int n, std::span<const Integer> z);
bool is_boundary(const ChainComplex& c, int n, std::span<const Integer> z);

/// Homology class of a cycle, in canonical coordinates of H_n.
struct CycleClass {
  int degree = 0;
  IntVector coordinates;
  std::vector<Integer> moduli;  // 0 marks a free coordinate
  Integer order;                // 0 for infinite order

  bool is_zero() const;
  CycleClass operator+(const CycleClass& rhs) const;
  CycleClass operator-(const CycleClass& rhs) const;
  CycleClass scaled(const Integer& k) const;
  bool operator==(const CycleClass& rhs) const;
  std::string to_string() const;
};

/// Throws NotACycle when d_n z != 0.
CycleClass cycle_class(const ChainComplex& c, int n, std::span<const Integer> z);

}  // namespace homalg
