#include "homalg/int_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "homalg/errors.hpp"

namespace homalg {

namespace {

const Integer kZero{0};

void check_bounds(std::size_t r, std::size_t c, std::size_t rows, std::size_t cols) {
  if (r >= rows || c >= cols) {
    throw DimensionMismatch("matrix index (" + std::to_string(r) + "," + std::to_string(c) +
                            ") out of range for " + std::to_string(rows) + "x" +
                            std::to_string(cols));
  }
}

}  // namespace

void add_scaled_row(SparseRow& target, const SparseRow& source, const Integer& factor) {
  if (factor == 0 || source.empty()) return;
  SparseRow merged;
  merged.reserve(target.size() + source.size());
  auto t = target.begin();
  auto s = source.begin();
  while (t != target.end() || s != source.end()) {
    if (s == source.end() || (t != target.end() && t->col < s->col)) {
      merged.push_back(std::move(*t));
      ++t;
    } else if (t == target.end() || s->col < t->col) {
      merged.push_back(Entry{s->col, factor * s->value});
      ++s;
    } else {
      Integer v = t->value;
      mpz_addmul(v.get_mpz_t(), factor.get_mpz_t(), s->value.get_mpz_t());
      if (v != 0) merged.push_back(Entry{t->col, std::move(v)});
      ++t;
      ++s;
    }
  }
  target = std::move(merged);
}

const Integer& row_value(const SparseRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const Entry& e, std::size_t c) { return e.col < c; });
  if (it != row.end() && it->col == col) return it->value;
  return kZero;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].push_back(Entry{i, Integer(1)});
  return m;
}

IntMatrix IntMatrix::diagonal(std::span<const Integer> values, std::size_t rows, std::size_t cols) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < values.size(); ++i) {
    check_bounds(i, i, rows, cols);
    if (values[i] != 0) m.data_[i].push_back(Entry{i, values[i]});
  }
  return m;
}

IntMatrix IntMatrix::from_triplets(std::size_t rows, std::size_t cols,
                                   std::vector<Triplet> triplets) {
  std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  IntMatrix m(rows, cols);
  for (auto& t : triplets) {
    check_bounds(t.row, t.col, rows, cols);
    auto& row = m.data_[t.row];
    if (!row.empty() && row.back().col == t.col) {
      row.back().value += t.value;
    } else {
      row.push_back(Entry{t.col, std::move(t.value)});
    }
  }
  for (auto& row : m.data_) {
    std::erase_if(row, [](const Entry& e) { return e.value == 0; });
  }
  return m;
}

IntMatrix IntMatrix::from_rows(std::size_t rows, std::size_t cols, std::vector<SparseRow> data) {
  if (data.size() != rows) throw DimensionMismatch("row count mismatch in from_rows");
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (const auto& e : data[r]) check_bounds(r, e.col, rows, cols);
    m.data_[r] = std::move(data[r]);
  }
  return m;
}

IntMatrix IntMatrix::from_dense(const std::vector<std::vector<Integer>>& dense, std::size_t cols) {
  IntMatrix m(dense.size(), cols);
  for (std::size_t r = 0; r < dense.size(); ++r) {
    if (dense[r].size() != cols) throw DimensionMismatch("ragged dense matrix");
    for (std::size_t c = 0; c < cols; ++c) {
      if (dense[r][c] != 0) m.data_[r].push_back(Entry{c, dense[r][c]});
    }
  }
  return m;
}

IntMatrix IntMatrix::from_dense(std::initializer_list<std::initializer_list<long>> dense) {
  std::size_t cols = dense.size() == 0 ? 0 : dense.begin()->size();
  std::vector<std::vector<Integer>> rows;
  for (const auto& r : dense) {
    std::vector<Integer> row;
    for (long v : r) row.emplace_back(v);
    rows.push_back(std::move(row));
  }
  return from_dense(rows, cols);
}

IntMatrix IntMatrix::column(std::span<const Integer> v) {
  IntMatrix m(v.size(), 1);
  for (std::size_t r = 0; r < v.size(); ++r) {
    if (v[r] != 0) m.data_[r].push_back(Entry{0, v[r]});
  }
  return m;
}

std::size_t IntMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& row : data_) n += row.size();
  return n;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const SparseRow& r) { return r.empty(); });
}

const Integer& IntMatrix::at(std::size_t r, std::size_t c) const {
  check_bounds(r, c, rows_, cols_);
  return row_value(data_[r], c);
}

void IntMatrix::set(std::size_t r, std::size_t c, const Integer& v) {
  check_bounds(r, c, rows_, cols_);
  auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.col < col; });
  if (it != row.end() && it->col == c) {
    if (v == 0) {
      row.erase(it);
    } else {
      it->value = v;
    }
  } else if (v != 0) {
    row.insert(it, Entry{c, v});
  }
}

IntVector IntMatrix::column_vector(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = row_value(data_[r], c);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& e : data_[r]) t.data_[e.col].push_back(Entry{r, e.value});
  }
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) {
    throw DimensionMismatch("matrix product " + std::to_string(rows_) + "x" +
                            std::to_string(cols_) + " * " + std::to_string(rhs.rows_) + "x" +
                            std::to_string(rhs.cols_));
  }
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    SparseRow acc;
    for (const auto& e : data_[r]) add_scaled_row(acc, rhs.data_[e.col], e.value);
    out.data_[r] = std::move(acc);
  }
  return out;
}

IntVector IntMatrix::apply(std::span<const Integer> x) const {
  if (x.size() != cols_) throw DimensionMismatch("vector length does not match column count");
  IntVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Integer acc = 0;
    for (const auto& e : data_[r]) {
      mpz_addmul(acc.get_mpz_t(), e.value.get_mpz_t(), x[e.col].get_mpz_t());
    }
    y[r] = std::move(acc);
  }
  return y;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix sum shape");
  IntMatrix out = *this;
  for (std::size_t r = 0; r < rows_; ++r) add_scaled_row(out.data_[r], rhs.data_[r], Integer(1));
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix difference shape");
  IntMatrix out = *this;
  for (std::size_t r = 0; r < rows_; ++r) add_scaled_row(out.data_[r], rhs.data_[r], Integer(-1));
  return out;
}

IntMatrix IntMatrix::scaled(const Integer& factor) const {
  if (factor == 0) return IntMatrix(rows_, cols_);
  IntMatrix out = *this;
  for (auto& row : out.data_) {
    for (auto& e : row) e.value *= factor;
  }
  return out;
}

bool IntMatrix::operator==(const IntMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

IntMatrix IntMatrix::select_rows(std::span<const std::size_t> indices) const {
  IntMatrix out(indices.size(), cols_);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    check_bounds(indices[i], 0, rows_, cols_ == 0 ? 1 : cols_);
    out.data_[i] = data_[indices[i]];
  }
  return out;
}

IntMatrix IntMatrix::select_cols(std::span<const std::size_t> indices) const {
  std::vector<std::ptrdiff_t> position(cols_, -1);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    check_bounds(0, indices[i], rows_ == 0 ? 1 : rows_, cols_);
    position[indices[i]] = static_cast<std::ptrdiff_t>(i);
  }
  std::vector<Triplet> triplets;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& e : data_[r]) {
      if (position[e.col] >= 0) {
        triplets.push_back(Triplet{r, static_cast<std::size_t>(position[e.col]), e.value});
      }
    }
  }
  return from_triplets(rows_, indices.size(), std::move(triplets));
}

IntMatrix IntMatrix::row_range(std::size_t begin, std::size_t end) const {
  if (begin > end || end > rows_) throw DimensionMismatch("row range out of bounds");
  IntMatrix out(end - begin, cols_);
  for (std::size_t r = begin; r < end; ++r) out.data_[r - begin] = data_[r];
  return out;
}

IntMatrix IntMatrix::col_range(std::size_t begin, std::size_t end) const {
  if (begin > end || end > cols_) throw DimensionMismatch("column range out of bounds");
  IntMatrix out(rows_, end - begin);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& e : data_[r]) {
      if (e.col >= begin && e.col < end) out.data_[r].push_back(Entry{e.col - begin, e.value});
    }
  }
  return out;
}

IntMatrix IntMatrix::hstack(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_) throw DimensionMismatch("hstack row counts differ");
  IntMatrix out(rows_, cols_ + rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    out.data_[r] = data_[r];
    for (const auto& e : rhs.data_[r]) out.data_[r].push_back(Entry{e.col + cols_, e.value});
  }
  return out;
}

IntMatrix IntMatrix::vstack(const IntMatrix& rhs) const {
  if (cols_ != rhs.cols_) throw DimensionMismatch("vstack column counts differ");
  IntMatrix out(rows_ + rhs.rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) out.data_[r] = data_[r];
  for (std::size_t r = 0; r < rhs.rows_; ++r) out.data_[rows_ + r] = rhs.data_[r];
  return out;
}

IntMatrix IntMatrix::kron_identity(std::size_t k) const {
  IntMatrix out(rows_ * k, cols_ * k);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t i = 0; i < k; ++i) {
      auto& row = out.data_[r * k + i];
      for (const auto& e : data_[r]) row.push_back(Entry{e.col * k + i, e.value});
    }
  }
  return out;
}

IntMatrix IntMatrix::block_repeat(std::size_t k) const {
  IntMatrix out(rows_ * k, cols_ * k);
  for (std::size_t b = 0; b < k; ++b) {
    for (std::size_t r = 0; r < rows_; ++r) {
      auto& row = out.data_[b * rows_ + r];
      for (const auto& e : data_[r]) row.push_back(Entry{b * cols_ + e.col, e.value});
    }
  }
  return out;
}

std::vector<std::vector<Integer>> IntMatrix::to_dense() const {
  std::vector<std::vector<Integer>> dense(rows_, std::vector<Integer>(cols_, Integer(0)));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& e : data_[r]) dense[r][e.col] = e.value;
  }
  return dense;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << "[";
  auto dense = to_dense();
  for (std::size_t r = 0; r < rows_; ++r) {
    out << (r == 0 ? "[" : ",[");
    for (std::size_t c = 0; c < cols_; ++c) out << (c == 0 ? "" : ",") << dense[r][c].get_str();
    out << "]";
  }
  out << "]";
  return out.str();
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Integer(1);
  auto a = m.to_dense();
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return Integer(0);
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(v);
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace homalg
