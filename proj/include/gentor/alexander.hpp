// Alexander polynomials by Fox calculus, and the root-sign flags used as a
// bi-orderability obstruction for rationally homologically fibered knots.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "gentor/exact.hpp"
#include "gentor/groups.hpp"

namespace gentor {

/// Element of Z[t, t^-1]; zero coefficients are never stored.
class GroupRingElement {
 public:
  GroupRingElement() = default;
  static GroupRingElement monomial(long exponent, BigInt c = 1);

  const std::map<long, BigInt>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  BigInt coefficient(long exponent) const;
  long min_exponent() const;

  void add(long exponent, const BigInt& c);
  GroupRingElement& operator+=(const GroupRingElement& rhs);
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

  /// Multiplied by t^-min_exponent; requires a nonzero element.
  IntPolynomial to_polynomial() const;
  /// Polynomial of this times t^shift; every exponent must become >= 0.
  IntPolynomial to_polynomial(long shift) const;
  std::string str() const;

 private:
  std::map<long, BigInt> terms_;
};

/// d w / d x_gen under x_i -> t^{weights[i]}.
GroupRingElement fox_derivative(const Word& w, std::size_t gen, const std::vector<long>& weights);
/// d w / d x under every generator -> t.
GroupRingElement fox_derivative(const GroupPresentation& p, const Word& w, std::string_view x);

/// Surjection H_1 -> Z as generator weights; throws when H_1 is not Z.
/// The meridian, when marked, maps to +1.
std::vector<long> abelianization_weights(const GroupPresentation& p);

/// Fox Jacobian rows (relators) by columns (generators) under the weights.
std::vector<std::vector<GroupRingElement>> fox_jacobian(const GroupPresentation& p,
                                                        const std::vector<long>& weights);

/// Normalized: multiplied by +-t^k so the constant term is positive.
IntPolynomial normalize_alexander(const IntPolynomial& p);

/// gcd of the maximal minors of the Jacobian with the column of the
/// highest-index generator of weight +-1 deleted, normalized. Without such a
/// generator, a column of weight w is deleted and (t^w - 1)/(t - 1) divided out.
IntPolynomial alexander_polynomial(const GroupPresentation& p);
/// Same computation with every minor evaluated on one thread.
IntPolynomial alexander_polynomial_serial(const GroupPresentation& p);
/// Same computation deleting the given column instead.
IntPolynomial alexander_polynomial_deleting(const GroupPresentation& p, std::size_t column);

/// |delta(-1)|.
BigInt knot_determinant(const IntPolynomial& delta);

/// Determinant of a square matrix over Z[t] (Bareiss, exact division).
IntPolynomial polynomial_determinant(std::vector<std::vector<IntPolynomial>> m);

struct ObstructionReport {
  IntPolynomial delta;
  long degree = 0;
  std::size_t positive_real_roots = 0;
  bool no_positive_roots_not_biorderable = false;
  bool all_roots_positive_candidate = false;
  std::vector<std::string> unchecked_hypotheses;
  std::vector<std::string> notes;
};

/// Throws DomainError on the zero polynomial.
ObstructionReport biorder_flags(const IntPolynomial& delta);

}  // namespace gentor
