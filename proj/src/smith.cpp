#include "homalg/smith.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "homalg/errors.hpp"

namespace homalg {

namespace {

std::vector<SparseRow> identity_rows(std::size_t n) {
  std::vector<SparseRow> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i].push_back(Entry{i, Integer(1)});
  return rows;
}

void negate_row(SparseRow& row) {
  for (auto& e : row) e.value = -e.value;
}

// new_i = p*v_i + q*v_j ; new_j = r*v_i + s*v_j
void combine_rows(std::vector<SparseRow>& v, std::size_t i, std::size_t j, const Integer& p,
                  const Integer& q, const Integer& r, const Integer& s) {
  SparseRow new_i;
  add_scaled_row(new_i, v[i], p);
  add_scaled_row(new_i, v[j], q);
  SparseRow new_j;
  add_scaled_row(new_j, v[i], r);
  add_scaled_row(new_j, v[j], s);
  v[i] = std::move(new_i);
  v[j] = std::move(new_j);
}

class Eliminator {
 public:
  Eliminator(const IntMatrix& m, const SmithOptions& opts)
      : rows_(m.rows()), cols_(m.cols()), row_active_(m.rows(), true), col_active_(m.cols(), true) {
    a_.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) a_.push_back(m.row(r));
    if (opts.left) u_ = identity_rows(rows_);
    if (opts.left_inverse) u_inv_t_ = identity_rows(rows_);
    if (opts.right) v_t_ = identity_rows(cols_);
    if (opts.right_inverse) v_inv_ = identity_rows(cols_);
  }

  SmithDecomposition run() {
    while (auto pivot = find_pivot()) {
      auto [r, c] = *pivot;
      reduce_pivot(r, c);
      if (value(r, c) < 0) negate(r);
      pivots_.push_back({r, c});
      diag_.push_back(value(r, c));
      row_active_[r] = false;
      col_active_[c] = false;
    }
    fix_divisibility_chain();
    return assemble();
  }

 private:
  struct Pivot {
    std::size_t row;
    std::size_t col;
  };

  const Integer& value(std::size_t r, std::size_t c) const { return row_value(a_[r], c); }

  std::optional<std::pair<std::size_t, std::size_t>> find_pivot() const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    const Integer* best_value = nullptr;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (!row_active_[r]) continue;
      for (const auto& e : a_[r]) {
        if (best_value == nullptr || cmp_abs(e.value, *best_value) < 0) {
          best = std::make_pair(r, e.col);
          best_value = &e.value;
          if (is_unit(e.value)) return best;
        }
      }
    }
    return best;
  }

  // row r += q * row p
  void row_axpy(std::size_t r, std::size_t p, const Integer& q) {
    add_scaled_row(a_[r], a_[p], q);
    if (u_) add_scaled_row((*u_)[r], (*u_)[p], q);
    if (u_inv_t_) add_scaled_row((*u_inv_t_)[p], (*u_inv_t_)[r], -q);
  }

  // col j += q * col c, where column c is nonzero only in row r
  void col_axpy_single(std::size_t r, std::size_t j, std::size_t c, const Integer& q) {
    Integer updated = value(r, j);
    mpz_addmul(updated.get_mpz_t(), q.get_mpz_t(), value(r, c).get_mpz_t());
    set_entry(a_[r], j, updated);
    if (v_t_) add_scaled_row((*v_t_)[j], (*v_t_)[c], q);
    if (v_inv_) add_scaled_row((*v_inv_)[c], (*v_inv_)[j], -q);
  }

  static void set_entry(SparseRow& row, std::size_t col, const Integer& v) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const Entry& e, std::size_t c) { return e.col < c; });
    if (it != row.end() && it->col == col) {
      if (v == 0) {
        row.erase(it);
      } else {
        it->value = v;
      }
    } else if (v != 0) {
      row.insert(it, Entry{col, v});
    }
  }

  void negate(std::size_t r) {
    negate_row(a_[r]);
    if (u_) negate_row((*u_)[r]);
    if (u_inv_t_) negate_row((*u_inv_t_)[r]);
  }

  // Clears row r and column c apart from the pivot, moving the pivot to a
  // smaller remainder whenever division leaves one.
  void reduce_pivot(std::size_t& r, std::size_t& c) {
    for (;;) {
      bool residue = false;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || !row_active_[i]) continue;
        const Integer& entry = value(i, c);
        if (entry == 0) continue;
        Integer q = floor_div(entry, value(r, c));
        row_axpy(i, r, -q);
        if (value(i, c) != 0) residue = true;
      }
      if (residue) {
        std::optional<std::size_t> best;
        for (std::size_t i = 0; i < rows_; ++i) {
          if (i == r || !row_active_[i]) continue;
          const Integer& entry = value(i, c);
          if (entry != 0 && (!best || cmp_abs(entry, value(*best, c)) < 0)) best = i;
        }
        r = *best;
        continue;
      }

      std::vector<std::size_t> others;
      for (const auto& e : a_[r]) {
        if (e.col != c) others.push_back(e.col);
      }
      for (std::size_t j : others) {
        Integer q = floor_div(value(r, j), value(r, c));
        if (q != 0) col_axpy_single(r, j, c, -q);
      }
      std::optional<std::size_t> next;
      for (const auto& e : a_[r]) {
        if (e.col == c) continue;
        if (!next || cmp_abs(e.value, value(r, *next)) < 0) next = e.col;
      }
      if (!next) return;
      c = *next;
    }
  }

  void fix_divisibility_chain() {
    const std::size_t k = diag_.size();
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        if (divides(diag_[i], diag_[j])) continue;
        const Integer a = diag_[i];
        const Integer b = diag_[j];
        Integer x;
        Integer y;
        const Integer g = gcd_ext(a, b, x, y);
        const Integer ag = a / g;
        const Integer bg = b / g;
        const std::size_t ri = pivots_[i].row;
        const std::size_t rj = pivots_[j].row;
        const std::size_t ci = pivots_[i].col;
        const std::size_t cj = pivots_[j].col;
        // L = [[x, y], [-b/g, a/g]] on rows, R = [[1, -y b/g], [1, x a/g]] on columns.
        if (u_) combine_rows(*u_, ri, rj, x, y, -bg, ag);
        if (u_inv_t_) combine_rows(*u_inv_t_, ri, rj, ag, bg, -y, x);
        if (v_t_) combine_rows(*v_t_, ci, cj, Integer(1), Integer(1), -y * bg, x * ag);
        if (v_inv_) combine_rows(*v_inv_, ci, cj, x * ag, y * bg, Integer(-1), Integer(1));
        diag_[i] = g;
        diag_[j] = a * bg;
      }
    }
  }

  static std::vector<SparseRow> permuted(std::vector<SparseRow>& rows,
                                         const std::vector<std::size_t>& order) {
    std::vector<SparseRow> out;
    out.reserve(order.size());
    for (std::size_t idx : order) out.push_back(std::move(rows[idx]));
    return out;
  }

  SmithDecomposition assemble() {
    std::vector<std::size_t> row_order;
    std::vector<std::size_t> col_order;
    std::vector<bool> row_used(rows_, false);
    std::vector<bool> col_used(cols_, false);
    for (const auto& p : pivots_) {
      row_order.push_back(p.row);
      col_order.push_back(p.col);
      row_used[p.row] = true;
      col_used[p.col] = true;
    }
    for (std::size_t r = 0; r < rows_; ++r) {
      if (!row_used[r]) row_order.push_back(r);
    }
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!col_used[c]) col_order.push_back(c);
    }

    SmithDecomposition out;
    out.rows = rows_;
    out.cols = cols_;
    out.diagonal = diag_;
    if (u_) out.left = IntMatrix::from_rows(rows_, rows_, permuted(*u_, row_order));
    if (u_inv_t_) {
      out.left_inverse =
          IntMatrix::from_rows(rows_, rows_, permuted(*u_inv_t_, row_order)).transpose();
    }
    if (v_t_) out.right = IntMatrix::from_rows(cols_, cols_, permuted(*v_t_, col_order)).transpose();
    if (v_inv_) out.right_inverse = IntMatrix::from_rows(cols_, cols_, permuted(*v_inv_, col_order));
    return out;
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<SparseRow> a_;
  std::vector<bool> row_active_;
  std::vector<bool> col_active_;
  std::optional<std::vector<SparseRow>> u_;
  std::optional<std::vector<SparseRow>> u_inv_t_;
  std::optional<std::vector<SparseRow>> v_t_;
  std::optional<std::vector<SparseRow>> v_inv_;
  std::vector<Pivot> pivots_;
  std::vector<Integer> diag_;
};

}  // namespace

IntMatrix SmithDecomposition::diagonal_matrix() const {
  return IntMatrix::diagonal(diagonal, rows, cols);
}

SmithDecomposition smith_decompose(const IntMatrix& m, const SmithOptions& options) {
  return Eliminator(m, options).run();
}

SmithNormalForm smith_normal_form(const IntMatrix& m) {
  SmithDecomposition d = smith_decompose(m, SmithOptions{true, false, true, false});
  return SmithNormalForm{std::move(*d.left), d.diagonal_matrix(), std::move(*d.right)};
}

std::size_t matrix_rank(const IntMatrix& m) { return smith_decompose(m).rank(); }

LatticeBasis::LatticeBasis(const IntMatrix& generators) {
  SmithDecomposition d = smith_decompose(generators, SmithOptions{true, true, false, false});
  diagonal_ = d.diagonal;
  left_ = std::move(*d.left);
  const IntMatrix& u_inv = *d.left_inverse;
  // columns of U^-1 scaled by the diagonal span the same lattice
  std::vector<std::size_t> leading(d.rank());
  std::iota(leading.begin(), leading.end(), 0);
  basis_ = u_inv.select_cols(leading);
  IntMatrix scale = IntMatrix::diagonal(diagonal_, d.rank(), d.rank());
  basis_ = basis_ * scale;
}

std::optional<IntVector> LatticeBasis::coordinates(std::span<const Integer> x) const {
  if (x.size() != ambient_dimension()) throw DimensionMismatch("lattice coordinate length");
  IntVector y = left_.apply(x);
  IntVector coords(rank());
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i < rank()) {
      if (!divides(diagonal_[i], y[i])) return std::nullopt;
      coords[i] = y[i] / diagonal_[i];
    } else if (y[i] != 0) {
      return std::nullopt;
    }
  }
  return coords;
}

IntMatrix LatticeBasis::coordinates_of_columns(const IntMatrix& m) const {
  IntMatrix t = m.transpose();
  std::vector<Triplet> triplets;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    IntVector x(m.rows());
    for (const auto& e : t.row(c)) x[e.col] = e.value;
    auto coords = coordinates(x);
    if (!coords) throw DimensionMismatch("column lies outside the lattice");
    for (std::size_t i = 0; i < coords->size(); ++i) {
      if ((*coords)[i] != 0) triplets.push_back(Triplet{i, c, (*coords)[i]});
    }
  }
  return IntMatrix::from_triplets(rank(), m.cols(), std::move(triplets));
}

IntMatrix kernel_basis(const IntMatrix& m) {
  SmithDecomposition d = smith_decompose(m, SmithOptions{false, false, true, false});
  return d.right->col_range(d.rank(), m.cols());
}

}  // namespace homalg
