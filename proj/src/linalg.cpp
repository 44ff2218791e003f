#include "qcover/linalg.hpp"

#include <cstdlib>

namespace qcover {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidParameter("ragged matrix literal");
    for (auto v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw InvalidParameter("matrix shapes do not match");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const auto& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  for (std::size_t c = 0; c < cols_; ++c) {
    if (sgn((*this)(src, c)) != 0) (*this)(dst, c) += k * (*this)(src, c);
  }
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  for (std::size_t r = 0; r < rows_; ++r) {
    if (sgn((*this)(r, src)) != 0) (*this)(r, dst) += k * (*this)(r, src);
  }
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

SmithForm smith_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t diag = std::min(rows, cols);

  auto row_op = [&](std::size_t dst, std::size_t src, const Integer& k) {
    a.add_row_multiple(dst, src, k);
    u.add_row_multiple(dst, src, k);
  };
  auto col_op = [&](std::size_t dst, std::size_t src, const Integer& k) {
    a.add_col_multiple(dst, src, k);
    v.add_col_multiple(dst, src, k);
  };

  for (std::size_t t = 0; t < diag; ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (sgn(a(i, j)) != 0 && (pr == rows || abs(a(i, j)) < abs(a(pr, pc)))) {
          pr = i;
          pc = j;
        }
      }
    }
    if (pr == rows) break;
    a.swap_rows(t, pr);
    u.swap_rows(t, pr);
    a.swap_cols(t, pc);
    v.swap_cols(t, pc);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(a(i, t)) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        row_op(i, t, -q);
        if (sgn(a(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(a(t, j)) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        col_op(j, t, -q);
        if (sgn(a(t, j)) != 0) clean = false;
      }
      if (!clean) {
        // Move the smallest remainder in row t or column t onto the diagonal.
        std::size_t best_r = t, best_c = t;
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (sgn(a(i, t)) != 0 && abs(a(i, t)) < abs(a(best_r, best_c))) {
            best_r = i;
            best_c = t;
          }
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (sgn(a(t, j)) != 0 && abs(a(t, j)) < abs(a(best_r, best_c))) {
            best_r = t;
            best_c = j;
          }
        }
        a.swap_rows(t, best_r);
        u.swap_rows(t, best_r);
        a.swap_cols(t, best_c);
        v.swap_cols(t, best_c);
        continue;
      }
      // Row and column are clear; enforce divisibility of the remainder.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
        }
      }
      if (bad == rows) break;
      row_op(t, bad, Integer(1));
    }
    if (sgn(a(t, t)) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
  }

  SmithForm out;
  for (std::size_t k = 0; k < diag; ++k) out.diagonal.push_back(a(k, k));
  out.left = std::move(u);
  out.right = std::move(v);
  return out;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 3 || p >= (1u << 31)) throw InvalidParameter("prime modulus out of range");
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d) {
    if (p % d == 0) throw InvalidParameter("modulus " + std::to_string(p) + " is not prime");
  }
}

PrimeField::Scalar PrimeField::inverse(Scalar x) const {
  // Fermat: x^(p-2).
  std::uint64_t result = 1, base = x, e = p_ - 2;
  while (e) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<Scalar>(result);
}

std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& v) {
  Integer lcm_den = 1;
  for (const auto& x : v) {
    if (sgn(x) != 0) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
  }
  std::vector<Integer> out;
  out.reserve(v.size());
  Integer g = 0;
  for (const auto& x : v) {
    Integer n = x.get_num() * (lcm_den / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    out.push_back(std::move(n));
  }
  if (g > 1) {
    for (auto& n : out) n /= g;
  }
  return out;
}

}  // namespace qcover
