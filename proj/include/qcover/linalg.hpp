#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "qcover/error.hpp"

namespace qcover {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& rhs) const = default;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
  /// col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void negate_row(std::size_t r);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// left * M * right = diag(diagonal), with d_1 | d_2 | ... and d_i >= 0.
struct SmithForm {
  std::vector<Integer> diagonal;  // min(rows, cols) entries
  IntMatrix left;
  IntMatrix right;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Exact rationals.
struct RationalField {
  using Scalar = Rational;
  Scalar from_int(long v) const { return Scalar(v); }
  bool is_zero(const Scalar& x) const { return sgn(x) == 0; }
  Scalar inverse(const Scalar& x) const { return 1 / x; }
  /// dst -= k * x
  void sub_mul(Scalar& dst, const Scalar& k, const Scalar& x) const { dst -= k * x; }
  Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
  Scalar neg(const Scalar& x) const { return -x; }
};

/// Integers modulo an odd prime p < 2^31.
class PrimeField {
 public:
  using Scalar = std::uint32_t;
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }
  Scalar from_int(long v) const {
    long r = v % static_cast<long>(p_);
    return static_cast<Scalar>(r < 0 ? r + p_ : r);
  }
  bool is_zero(Scalar x) const { return x == 0; }
  Scalar inverse(Scalar x) const;
  void sub_mul(Scalar& dst, Scalar k, Scalar x) const {
    auto prod = static_cast<std::uint64_t>(k) * x % p_;
    dst = static_cast<Scalar>((dst + p_ - prod) % p_);
  }
  Scalar mul(Scalar a, Scalar b) const {
    return static_cast<Scalar>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Scalar neg(Scalar x) const { return x == 0 ? 0 : p_ - x; }

 private:
  std::uint32_t p_;
};

/// Incremental sparse Gaussian elimination over a field.
///
/// Rows are kept in echelon form with leading coefficient 1; the pivot of a
/// new row is its leading column after reduction, so results depend only on
/// insertion order.
template <class Field>
class RowReducer {
 public:
  using Scalar = typename Field::Scalar;
  using Row = std::vector<std::pair<std::uint32_t, Scalar>>;

  RowReducer(Field field, std::size_t columns)
      : field_(std::move(field)), columns_(columns), pivot_row_(columns, -1) {}

  std::size_t columns() const { return columns_; }
  std::size_t rank() const { return rows_.size(); }
  const Field& field() const { return field_; }

  /// Returns true when the row was independent of the rows inserted so far.
  bool insert(Row row) {
    reduce_in_place(row, /*leading_only=*/true);
    if (row.empty()) return false;
    const auto inv = field_.inverse(row.front().second);
    for (auto& [c, v] : row) v = field_.mul(v, inv);
    pivot_row_[row.front().first] = static_cast<std::int64_t>(rows_.size());
    rows_.push_back(std::move(row));
    reduced_ = false;
    return true;
  }

  /// Remainder of `row` after eliminating every pivot column.
  Row reduce(Row row) const {
    reduce_in_place(row, /*leading_only=*/false);
    return row;
  }

  bool in_span(Row row) const { return reduce(std::move(row)).empty(); }

  /// Back-substitutes so that every pivot column is zero outside its row.
  void make_reduced() {
    if (reduced_) return;
    std::vector<std::pair<std::uint32_t, std::size_t>> order;
    for (std::size_t i = 0; i < rows_.size(); ++i) order.emplace_back(rows_[i].front().first, i);
    std::sort(order.rbegin(), order.rend());
    for (auto [col, i] : order) {
      Row row = std::move(rows_[i]);
      rows_[i].clear();
      // Leading entry has no pivot elsewhere; reduce only the tail.
      Row tail(row.begin() + 1, row.end());
      reduce_in_place(tail, false);
      tail.insert(tail.begin(), row.front());
      rows_[i] = std::move(tail);
    }
    reduced_ = true;
  }

  /// Basis of the right kernel, one vector per free column (ascending).
  std::vector<Row> nullspace() {
    make_reduced();
    std::vector<Row> basis;
    std::vector<std::int64_t> slot(columns_, -1);
    for (std::uint32_t c = 0; c < columns_; ++c) {
      if (pivot_row_[c] < 0) {
        slot[c] = static_cast<std::int64_t>(basis.size());
        basis.push_back({});
      }
    }
    std::vector<std::vector<std::pair<std::uint32_t, Scalar>>> pivots_for(basis.size());
    for (const auto& row : rows_) {
      const auto p = row.front().first;
      for (std::size_t k = 1; k < row.size(); ++k) {
        pivots_for[slot[row[k].first]].emplace_back(p, field_.neg(row[k].second));
      }
    }
    for (std::uint32_t c = 0; c < columns_; ++c) {
      if (slot[c] < 0) continue;
      auto& v = basis[slot[c]];
      v = std::move(pivots_for[slot[c]]);
      v.emplace_back(c, field_.from_int(1));
      std::sort(v.begin(), v.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    return basis;
  }

  const std::vector<Row>& rows() const { return rows_; }

 private:
  // row -= k * pivot, both sorted by column.
  void axpy(Row& row, const Scalar& k, const Row& pivot) const {
    Row out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < pivot.size()) {
      if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
        out.push_back(std::move(row[i++]));
      } else if (i == row.size() || pivot[j].first < row[i].first) {
        Scalar v = field_.from_int(0);
        field_.sub_mul(v, k, pivot[j].second);
        out.emplace_back(pivot[j].first, std::move(v));
        ++j;
      } else {
        field_.sub_mul(row[i].second, k, pivot[j].second);
        if (!field_.is_zero(row[i].second)) out.push_back(std::move(row[i]));
        ++i;
        ++j;
      }
    }
    row = std::move(out);
  }

  void reduce_in_place(Row& row, bool leading_only) const {
    std::size_t pos = 0;
    while (pos < row.size()) {
      const auto c = row[pos].first;
      const auto p = pivot_row_[c];
      if (p < 0) {
        if (leading_only) return;
        ++pos;
        continue;
      }
      const Scalar k = row[pos].second;
      axpy(row, k, rows_[p]);
      // Entries before `pos` are untouched: pivot rows start at their pivot.
    }
  }

  Field field_;
  std::size_t columns_;
  std::vector<Row> rows_;
  std::vector<std::int64_t> pivot_row_;
  bool reduced_ = false;
};

/// Multiplies a rational vector by the positive scalar that makes its
/// entries coprime integers.
std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& v);

}  // namespace qcover
