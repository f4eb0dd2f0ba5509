#include <algorithm>
#include <sstream>
#include <utility>

#include "gentor/exact.hpp"

namespace gentor {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DomainError("ragged matrix literal");
    for (long x : row) entries_.emplace_back(x);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix product dimension mismatch");
  IntegerMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

bool IntegerMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i != j && (*this)(i, j) != 0) return false;
    }
  }
  return true;
}

std::string IntegerMatrix::str() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? "," : "") << (*this)(i, j);
    out << ']';
  }
  out << ']';
  return out.str();
}

BigInt determinant(const IntegerMatrix& input) {
  if (input.rows() != input.cols()) throw DomainError("determinant of non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntegerMatrix a = input;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(t);
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::vector<BigInt> SnfDecomposition::diagonal() const {
  std::vector<BigInt> d;
  const std::size_t r = std::min(D.rows(), D.cols());
  d.reserve(r);
  for (std::size_t i = 0; i < r; ++i) d.push_back(D(i, i));
  return d;
}

namespace {

// Elementary operations mirrored onto the transform that tracks them.
struct SnfState {
  IntegerMatrix a;
  IntegerMatrix u;
  IntegerMatrix v;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
  }
  // row_dst += k * row_src
  void add_row(std::size_t dst, std::size_t src, const BigInt& k) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(dst, c) += k * a(src, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(dst, c) += k * u(src, c);
  }
  // col_dst += k * col_src
  void add_col(std::size_t dst, std::size_t src, const BigInt& k) {
    for (std::size_t r = 0; r < a.rows(); ++r) a(r, dst) += k * a(r, src);
    for (std::size_t r = 0; r < v.rows(); ++r) v(r, dst) += k * v(r, src);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
  }
};

}  // namespace

SnfDecomposition snf(const IntegerMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  SnfState s{m, IntegerMatrix::identity(rows), IntegerMatrix::identity(cols)};
  const std::size_t r = std::min(rows, cols);

  for (std::size_t t = 0; t < r; ++t) {
    bool exhausted = false;
    for (;;) {
      // Smallest nonzero |entry| in the active block, first in (row, col) order.
      std::size_t pr = rows, pc = cols;
      BigInt best;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          const BigInt& x = s.a(i, j);
          if (x == 0) continue;
          if (pr == rows || mpz_cmpabs(x.get_mpz_t(), best.get_mpz_t()) < 0) {
            best = abs(x);
            pr = i;
            pc = j;
          }
        }
      }
      if (pr == rows) {
        exhausted = true;
        break;
      }
      s.swap_rows(t, pr);
      s.swap_cols(t, pc);

      bool clean = true;
      BigInt q;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s.a(i, t) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), s.a(i, t).get_mpz_t(), s.a(t, t).get_mpz_t());
        s.add_row(i, t, -q);
        if (s.a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s.a(t, j) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), s.a(t, j).get_mpz_t(), s.a(t, t).get_mpz_t());
        s.add_col(j, t, -q);
        if (s.a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility chain: fold an offending row into the pivot row.
      std::size_t bad_row = rows;
      for (std::size_t i = t + 1; i < rows && bad_row == rows; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!mpz_divisible_p(s.a(i, j).get_mpz_t(), s.a(t, t).get_mpz_t())) {
            bad_row = i;
            break;
          }
        }
      }
      if (bad_row == rows) break;
      s.add_row(t, bad_row, 1);
    }
    if (exhausted) break;
    if (s.a(t, t) < 0) s.negate_row(t);
  }
  return SnfDecomposition{std::move(s.u), std::move(s.a), std::move(s.v)};
}

BigInt coker_element_order(const IntegerMatrix& m, std::span<const BigInt> v) {
  if (v.size() != m.rows()) {
    throw DomainError("coker_element_order: vector length " + std::to_string(v.size()) +
                      " does not match " + std::to_string(m.rows()) + " rows");
  }
  const SnfDecomposition dec = snf(m);
  const std::size_t r = std::min(m.rows(), m.cols());
  BigInt order = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BigInt w = 0;
    for (std::size_t k = 0; k < m.rows(); ++k) w += dec.U(i, k) * v[k];
    if (w == 0) continue;
    if (i >= r || dec.D(i, i) == 0) return 0;
    const BigInt& d = dec.D(i, i);
    BigInt local = d / gcd(d, w);
    order = lcm(order, local);
  }
  return order;
}

}  // namespace gentor
