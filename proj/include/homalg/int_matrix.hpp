#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "homalg/integer.hpp"

namespace homalg {

struct Entry {
  std::size_t col;
  Integer value;

  bool operator==(const Entry&) const = default;
};

/// Sparse row: entries sorted by column, no stored zeros.
using SparseRow = std::vector<Entry>;

/// target += factor * source, keeping target sorted and zero-free.
void add_scaled_row(SparseRow& target, const SparseRow& source, const Integer& factor);

/// Entry value at `col`, or zero.
const Integer& row_value(const SparseRow& row, std::size_t col);

struct Triplet {
  std::size_t row;
  std::size_t col;
  Integer value;
};

/// Exact integer matrix in compressed sparse-row layout.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(std::span<const Integer> values, std::size_t rows, std::size_t cols);
  /// Duplicate (row, col) pairs are summed.
  static IntMatrix from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets);
  static IntMatrix from_rows(std::size_t rows, std::size_t cols, std::vector<SparseRow> data);
  static IntMatrix from_dense(const std::vector<std::vector<Integer>>& dense, std::size_t cols);
  static IntMatrix from_dense(std::initializer_list<std::initializer_list<long>> dense);
  /// Column-vector matrix (rows = v.size(), cols = 1).
  static IntMatrix column(std::span<const Integer> v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const;
  bool is_zero() const;

  const Integer& at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Integer& v);
  const SparseRow& row(std::size_t r) const { return data_[r]; }
  IntVector column_vector(std::size_t c) const;

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntVector apply(std::span<const Integer> x) const;
  IntMatrix operator+(const IntMatrix& rhs) const;
  IntMatrix operator-(const IntMatrix& rhs) const;
  IntMatrix scaled(const Integer& factor) const;
  bool operator==(const IntMatrix& rhs) const;

  IntMatrix select_rows(std::span<const std::size_t> indices) const;
  IntMatrix select_cols(std::span<const std::size_t> indices) const;
  IntMatrix row_range(std::size_t begin, std::size_t end) const;
  IntMatrix col_range(std::size_t begin, std::size_t end) const;

  /// Side-by-side [this | rhs]; row counts must agree.
  IntMatrix hstack(const IntMatrix& rhs) const;
  /// Stacked [this ; rhs]; column counts must agree.
  IntMatrix vstack(const IntMatrix& rhs) const;
  /// this (x) I_k, the Kronecker product with an identity.
  IntMatrix kron_identity(std::size_t k) const;
  /// I_k (x) this, i.e. k diagonal copies.
  IntMatrix block_repeat(std::size_t k) const;

  std::vector<std::vector<Integer>> to_dense() const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseRow> data_;
};

/// Determinant by fraction-free (Bareiss) elimination; square matrices only.
Integer determinant(const IntMatrix& m);

}  // namespace homalg
