// Exact arithmetic: big rationals, integer matrices with Smith normal form,
// integer polynomials and Sturm root counting.
#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gentor {

using BigInt = mpz_class;

/// Raised when an argument violates an operation's precondition.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an evaluation hits a division by zero partway through.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// ---------------------------------------------------------------------------
// Fraction

/// Reduced rational number; the sign lives on the numerator.
class Fraction {
 public:
  Fraction() : num_(0), den_(1) {}
  Fraction(long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Fraction(BigInt num, BigInt den);

  /// Accepts "p/q" or "p" with optional leading sign on either part.
  static Fraction parse(std::string_view text);

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_ == 0; }
  bool is_integer() const noexcept { return den_ == 1; }

  Fraction reciprocal() const;

  Fraction operator-() const;
  friend Fraction operator+(const Fraction& a, const Fraction& b);
  friend Fraction operator-(const Fraction& a, const Fraction& b);
  friend Fraction operator*(const Fraction& a, const Fraction& b);
  friend Fraction operator/(const Fraction& a, const Fraction& b);

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b);

  /// Always "p/q", e.g. "5/1".
  std::string str() const;

 private:
  BigInt num_;
  BigInt den_;
};

/// Surgery slope p/q. Unlike Fraction it admits q = 0 (the meridian 1/0) and
/// keeps whatever signs it was given; reduced() reports gcd(p, q) == 1.
struct Slope {
  long p = 1;
  long q = 0;

  /// Accepts "p/q" or "p".
  static Slope parse(std::string_view text);

  bool reduced() const noexcept;
  /// p/q as an exact fraction; requires q != 0.
  Fraction value() const;
  std::string str() const { return std::to_string(p) + "/" + std::to_string(q); }

  friend bool operator==(const Slope&, const Slope&) = default;
};

// ---------------------------------------------------------------------------
// IntegerMatrix

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, BigInt(0)) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  const std::vector<BigInt>& entries() const noexcept { return entries_; }

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) = default;

  bool is_diagonal() const;
  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
};

/// Exact determinant (fraction-free Bareiss elimination).
BigInt determinant(const IntegerMatrix& m);

struct SnfDecomposition {
  IntegerMatrix U;
  IntegerMatrix D;
  IntegerMatrix V;

  /// d_1, ..., d_min(rows, cols) read off D.
  std::vector<BigInt> diagonal() const;
};

/// Smith normal form: D = U * M * V with U, V unimodular and d_1 | d_2 | ...
///
/// Pivoting always takes the smallest nonzero absolute value in the active
/// submatrix, ties broken by lowest (row, col). Invariant factors come out
/// non-negative.
SnfDecomposition snf(const IntegerMatrix& m);

/// Order of v in Z^rows / (column lattice of m); 0 means infinite order.
BigInt coker_element_order(const IntegerMatrix& m, std::span<const BigInt> v);

// ---------------------------------------------------------------------------
// IntPolynomial

/// Polynomial over Z in one variable t, constant term first.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  /// c * t^k
  static IntPolynomial monomial(BigInt c, std::size_t k);

  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const BigInt& leading() const;
  /// Lowest-index nonzero coefficient.
  const BigInt& lowest_nonzero() const;
  /// Index of the lowest nonzero coefficient (power of t dividing the polynomial).
  std::size_t valuation() const;
  BigInt coefficient(std::size_t k) const;

  BigInt operator()(const BigInt& x) const;
  mpq_class operator()(const mpq_class& x) const;

  IntPolynomial derivative() const;
  BigInt content() const;
  IntPolynomial primitive_part() const;
  /// Drops the factor t^valuation().
  IntPolynomial shift_down() const;
  IntPolynomial shift_up(std::size_t k) const;

  IntPolynomial operator-() const;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const BigInt& c, const IntPolynomial& p);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

  /// "t^2 - 3t + 1"
  std::string str() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Pseudo-division: lc(b)^(deg a - deg b + 1) * a = q * b + r.
struct PseudoDivision {
  IntPolynomial quotient;
  IntPolynomial remainder;
  BigInt multiplier;
};
PseudoDivision pseudo_divide(const IntPolynomial& a, const IntPolynomial& b);

/// a / b when b divides a over Z[t]; throws DomainError otherwise.
IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b);

/// Greatest common divisor over Z[t], normalized to positive leading coefficient.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// p / gcd(p, p'), primitive with positive leading coefficient.
IntPolynomial square_free_part(const IntPolynomial& p);

/// Sturm chain of the square-free part of p (positive rescalings only).
std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& p);

/// Number of distinct real roots in (0, inf). Throws DomainError on zero.
std::size_t positive_real_root_count(const IntPolynomial& p);

}  // namespace gentor
