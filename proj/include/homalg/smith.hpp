#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "homalg/int_matrix.hpp"

namespace homalg {

/// Which change-of-basis matrices the elimination should accumulate.
struct SmithOptions {
  bool left = false;           // U
  bool left_inverse = false;   // U^-1
  bool right = false;          // V
  bool right_inverse = false;  // V^-1

  static SmithOptions all() { return {true, true, true, true}; }
};

/// Result of diagonalising M: U * M * V = diag(d_1, ..., d_rank, 0, ...).
///
/// The nonzero diagonal is positive and forms a divisibility chain.
/// Transforms that were not requested are left empty.
struct SmithDecomposition {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Integer> diagonal;
  std::optional<IntMatrix> left;
  std::optional<IntMatrix> left_inverse;
  std::optional<IntMatrix> right;
  std::optional<IntMatrix> right_inverse;

  std::size_t rank() const { return diagonal.size(); }
  IntMatrix diagonal_matrix() const;
};

/// Fraction-free elimination with smallest-magnitude pivots; ties go to the
/// lowest (row, col).  The output is a deterministic function of the input.
SmithDecomposition smith_decompose(const IntMatrix& m, const SmithOptions& options = {});

struct SmithNormalForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
};

SmithNormalForm smith_normal_form(const IntMatrix& m);

std::size_t matrix_rank(const IntMatrix& m);

/// Z-basis for the lattice spanned by the columns of a generating matrix,
/// with exact coordinate solving.
class LatticeBasis {
 public:
  LatticeBasis() = default;
  explicit LatticeBasis(const IntMatrix& generators);

  /// Ambient-by-rank matrix whose columns form the basis.
  const IntMatrix& basis() const { return basis_; }
  std::size_t rank() const { return basis_.cols(); }
  std::size_t ambient_dimension() const { return basis_.rows(); }

  /// Coordinates of x in the basis, or nullopt when x is outside the lattice.
  std::optional<IntVector> coordinates(std::span<const Integer> x) const;
  /// Coordinates of every column of m; throws if a column is outside.
  IntMatrix coordinates_of_columns(const IntMatrix& m) const;

 private:
  IntMatrix basis_;
  IntMatrix left_;  // U from the decomposition of the generators
  std::vector<Integer> diagonal_;
};

/// Z-basis of the integer kernel {x : m x = 0}, as columns.
IntMatrix kernel_basis(const IntMatrix& m);

}  // namespace homalg
