#include <algorithm>
#include <sstream>
#include <utility>

#include "gentor/exact.hpp"

namespace gentor {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::monomial(BigInt c, std::size_t k) {
  std::vector<BigInt> v(k + 1, BigInt(0));
  v[k] = std::move(c);
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& IntPolynomial::leading() const {
  if (coeffs_.empty()) throw DomainError("leading coefficient of zero polynomial");
  return coeffs_.back();
}

std::size_t IntPolynomial::valuation() const {
  if (coeffs_.empty()) throw DomainError("valuation of zero polynomial");
  std::size_t k = 0;
  while (coeffs_[k] == 0) ++k;
  return k;
}

const BigInt& IntPolynomial::lowest_nonzero() const { return coeffs_[valuation()]; }

BigInt IntPolynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : BigInt(0);
}

BigInt IntPolynomial::operator()(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

mpq_class IntPolynomial::operator()(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + mpq_class(*it);
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return IntPolynomial(std::move(d));
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) g = gcd(g, c);
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (leading() < 0) g = -g;
  std::vector<BigInt> v = coeffs_;
  for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::shift_down() const {
  if (is_zero()) return {};
  std::size_t k = valuation();
  return IntPolynomial(std::vector<BigInt>(coeffs_.begin() + static_cast<long>(k), coeffs_.end()));
}

IntPolynomial IntPolynomial::shift_up(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<BigInt> v(k, BigInt(0));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<BigInt> v = coeffs_;
  for (auto& c : v) c = -c;
  return IntPolynomial(std::move(v));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const BigInt& c, const IntPolynomial& p) {
  std::vector<BigInt> v = p.coeffs_;
  for (auto& x : v) x *= c;
  return IntPolynomial(std::move(v));
}

std::string IntPolynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || k == 0) out << mag;
    if (k >= 1) out << 't';
    if (k >= 2) out << '^' << k;
    first = false;
  }
  return out.str();
}

PseudoDivision pseudo_divide(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw DomainError("pseudo-division by zero polynomial");
  if (a.degree() < b.degree()) return {IntPolynomial{}, a, BigInt(1)};
  const long delta = a.degree() - b.degree();
  const BigInt& lc = b.leading();
  std::vector<BigInt> r = a.coefficients();
  std::vector<BigInt> q(static_cast<std::size_t>(delta) + 1, BigInt(0));
  const auto& bc = b.coefficients();
  const std::size_t bd = bc.size() - 1;
  // Classic pseudo-division: scale by lc at each of the delta + 1 steps.
  for (long step = delta; step >= 0; --step) {
    const std::size_t top = bd + static_cast<std::size_t>(step);
    BigInt coef = top < r.size() ? r[top] : BigInt(0);
    for (auto& x : q) x *= lc;
    for (auto& x : r) x *= lc;
    q[static_cast<std::size_t>(step)] += coef;
    if (coef != 0) {
      for (std::size_t i = 0; i <= bd; ++i) r[i + static_cast<std::size_t>(step)] -= coef * bc[i];
    }
  }
  BigInt mult;
  mpz_pow_ui(mult.get_mpz_t(), lc.get_mpz_t(), static_cast<unsigned long>(delta + 1));
  return {IntPolynomial(std::move(q)), IntPolynomial(std::move(r)), mult};
}

IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw DomainError("division by zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw DomainError("inexact polynomial division");
  std::vector<BigInt> r = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t bd = bc.size() - 1;
  std::vector<BigInt> q(r.size() - bd, BigInt(0));
  for (std::size_t step = q.size(); step-- > 0;) {
    BigInt& top = r[step + bd];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.leading().get_mpz_t())) {
      throw DomainError("inexact polynomial division");
    }
    BigInt c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), b.leading().get_mpz_t());
    for (std::size_t i = 0; i <= bd; ++i) r[i + step] -= c * bc[i];
    q[step] = std::move(c);
  }
  for (const auto& x : r) {
    if (x != 0) throw DomainError("inexact polynomial division");
  }
  return IntPolynomial(std::move(q));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return b.content() * b.primitive_part();
  if (b.is_zero()) return a.content() * a.primitive_part();
  BigInt content = gcd(a.content(), b.content());
  IntPolynomial x = a.primitive_part();
  IntPolynomial y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_divide(x, y).remainder;
    x = std::move(y);
    y = r.primitive_part();
  }
  return content * x.primitive_part();
}

IntPolynomial square_free_part(const IntPolynomial& p) {
  if (p.is_zero()) throw DomainError("square-free part of zero polynomial");
  IntPolynomial pp = p.primitive_part();
  if (pp.degree() <= 0) return pp;
  IntPolynomial g = gcd(pp, pp.derivative());
  return divide_exact(pp, g).primitive_part();
}

std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& p) {
  std::vector<IntPolynomial> seq;
  seq.push_back(square_free_part(p));
  if (seq.back().degree() <= 0) return seq;
  seq.push_back(seq.back().derivative().primitive_part());
  while (seq.back().degree() > 0) {
    const IntPolynomial& a = seq[seq.size() - 2];
    const IntPolynomial& b = seq.back();
    PseudoDivision pd = pseudo_divide(a, b);
    // Keep only a positive rescaling of the true remainder, then negate.
    IntPolynomial r = pd.multiplier < 0 ? pd.remainder : -pd.remainder;
    if (r.is_zero()) break;
    BigInt c = r.content();
    std::vector<BigInt> v = r.coefficients();
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    seq.emplace_back(std::move(v));
  }
  return seq;
}

namespace {

std::size_t sign_changes(const std::vector<int>& signs) {
  std::size_t changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::size_t positive_real_root_count(const IntPolynomial& p) {
  if (p.is_zero()) throw DomainError("positive_real_root_count of zero polynomial");
  const std::vector<IntPolynomial> seq = sturm_sequence(p);
  std::vector<int> at_zero_plus;
  std::vector<int> at_infinity;
  for (const auto& s : seq) {
    at_zero_plus.push_back(sgn(s.lowest_nonzero()));
    at_infinity.push_back(sgn(s.leading()));
  }
  return sign_changes(at_zero_plus) - sign_changes(at_infinity);
}

}  // namespace gentor
