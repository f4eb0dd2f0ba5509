// Rational tangles, Montesinos descriptors and two-bridge classification.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gentor/exact.hpp"

namespace gentor {

/// How a bracket word is read as a continued fraction.
enum class Convention {
  Default,   ///< a1 + 1/(a2 + 1/(... + 1/ak))
  Reversed,  ///< Default applied to (ak, ..., a1)
  Negative,  ///< a1 - 1/(a2 - 1/(... - 1/ak))
};

std::string_view convention_name(Convention c);
Convention parse_convention(std::string_view name);

/// Nonzero integer twist sequence, e.g. [2,-2,2]@default.
struct TangleWord {
  std::vector<long> entries;
  Convention convention = Convention::Default;

  /// Validates: non-empty, entries nonzero.
  explicit TangleWord(std::vector<long> entries, Convention convention = Convention::Default);

  /// "[2,-2,2]" or "[2,-2,2]@reversed"
  static TangleWord parse(std::string_view text);
  /// Always prints the convention suffix unless it is Default.
  std::string str() const;

  friend bool operator==(const TangleWord&, const TangleWord&) = default;
};

/// Continued-fraction value of a word under its convention.
/// Throws EvaluationError (1-based position of the zero tail) on division by zero.
Fraction cf_eval(const TangleWord& w);

/// Floor-based expansion x = a1 + 1/(a2 + ...) with a2..ak >= 1 and, when
/// k > 1, ak >= 2. a1 may be zero or negative.
std::vector<long> cf_expand(const Fraction& x);

/// Fractions beta_i/alpha_i stored verbatim (not reduced mod 1).
class MontesinosDescriptor {
 public:
  /// Each fraction must have denominator >= 2.
  explicit MontesinosDescriptor(std::vector<Fraction> fractions);

  /// "M(5/3,5/3,17/6)"
  static MontesinosDescriptor parse(std::string_view text);
  std::string str() const;

  const std::vector<Fraction>& fractions() const noexcept { return fractions_; }
  std::size_t size() const noexcept { return fractions_.size(); }
  bool empty() const noexcept { return fractions_.empty(); }

  friend bool operator==(const MontesinosDescriptor&, const MontesinosDescriptor&) = default;

 private:
  std::vector<Fraction> fractions_;
};

/// K_n = M(5/3, ..., 5/3, 17/6) with n - 1 copies of 5/3. Requires n >= 2.
MontesinosDescriptor kn_descriptor(long n);

/// The bracket words that accompany the K_n fractions as annotation.
inline const std::vector<long> kKnTangleWord{2, -2, 2};
inline const std::vector<long> kKnLastTangleWord{-6, 4};
/// Conway word of the two-bridge form quoted for K_2.
inline const std::vector<long> kK2ConwayWord{2, -2, 6, -7, 1};

/// gcd of the denominators alpha_i.
BigInt gcd_alpha(const MontesinosDescriptor& d);

struct Conclusion {
  std::string statement;
  std::string citation;
  std::vector<std::string> hypotheses;
  bool holds = false;
};

struct CriteriaReport {
  std::map<std::string, bool> hypothesis_checks;
  std::vector<Conclusion> conclusions;
};

/// Hypothesis check for the gcd(alpha) tunnel-number and rank criteria.
/// The conclusions are citations, not independent computations.
CriteriaReport lm_criteria(const MontesinosDescriptor& d, const std::optional<Slope>& slope);

/// p/q -> p/q' with p = |num| odd >= 3 and 0 < q' < p, q' = q (mod p).
Fraction two_bridge_normalize(const Fraction& f);

/// Same two-bridge knot: p1 = p2 and q2 = q1^(+-1) (mod p). With
/// allow_mirror, q2 = -q1^(+-1) is accepted as well.
bool two_bridge_equivalent(const Fraction& f1, const Fraction& f2, bool allow_mirror = false);

/// True when f is the torus knot T(2, p) of either chirality.
bool is_two_bridge_torus(const Fraction& f);

}  // namespace gentor
