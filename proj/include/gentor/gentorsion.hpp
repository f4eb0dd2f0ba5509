// Generalized torsion certificates from singular spanning disk data.
//
// A knot bounding a singular disk whose interior it pierces positively in n
// points satisfies mu^n lambda = prod_i a_i mu a_i^-1 for suitable a_i. With
// the filling relator mu^p lambda^q this gives the one-relator group
//
//   U(n, p, q) = < m, a1..an | m^p (m^-n a1 m A1 ... an m An)^q >
//
// which maps to pi_1 of the p/q filling. For p/q >= n the relator is, as a
// free-group word, a product of exactly p conjugates of m; that product is
// the certificate, and a checker re-verifies it by free reduction alone.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gentor/groups.hpp"
#include "gentor/tangles.hpp"

namespace gentor {

/// The slope fails the p/q >= n hypothesis the construction needs.
class ThresholdError : public DomainError {
 public:
  using DomainError::DomainError;
};

struct SingularDiskDatum {
  long positive_punctures = 0;
  long negative_punctures = 0;
  std::string provenance;

  /// All punctures of one sign.
  bool coherent() const noexcept { return positive_punctures == 0 || negative_punctures == 0; }
  friend bool operator==(const SingularDiskDatum&, const SingularDiskDatum&) = default;
};

struct CanonicalDisk {
  SingularDiskDatum datum;
  Slope slope;
  bool mirrored = false;
};

/// Mirrors (0, n) data with p/q <= -n onto (n, 0) data with p/q >= n.
CanonicalDisk canonicalize(const SingularDiskDatum& d, const Slope& slope);

struct DerivationStep {
  std::size_t relator = 0;
  Word conjugator;
  int sign = 1;
  friend bool operator==(const DerivationStep&, const DerivationStep&) = default;
};

/// Claims prod_i c_i g c_i^-1 == prod_j w_j r_j^(+-1) w_j^-1 in the free group.
struct GenTorsionCertificate {
  GroupPresentation group;
  Word element;
  std::vector<Word> conjugators;
  std::vector<DerivationStep> derivation;
};

struct Verdict {
  bool pass = false;
  std::string reason;
  Word residual;  // free reduction of lhs * rhs^-1 on failure
};

/// U(n, p, q) with "meridian" = m. Requires p >= 1, q >= 1.
GroupPresentation universal_presentation(long n, const Slope& slope);

/// p conjugates of m: (p - qn) trivial conjugators, then m^{kn} a_i for
/// k = q-1 .. 0 and i = 1 .. n. Throws ThresholdError when p/q < n and
/// DomainError when p < 2.
GenTorsionCertificate derive_certificate(long n, const Slope& slope);

/// Checks the certificate by free reduction. Sound for any presentation.
Verdict check_certificate(const GenTorsionCertificate& c);

/// Conjugate product prod c_i g c_i^-1 (unreduced).
Word conjugate_product(const Word& element, const std::vector<Word>& conjugators);
/// Derivation product prod w_j r_j^(+-1) w_j^-1 (unreduced).
Word derivation_product(const GroupPresentation& group, const std::vector<DerivationStep>& steps);

struct GenTorsionReport {
  bool element_nontrivial = false;
  std::string nontrivial_reason;
  std::optional<BigInt> order_upper;
  std::string upper_witness;
  std::optional<BigInt> order_lower;
  /// Image in H_1 has infinite order: no product of conjugates can vanish.
  bool order_lower_infinite = false;
  std::string lower_witness;
  std::optional<BigInt> order_exact;
  std::optional<Fraction> threshold_used;
  std::vector<std::string> notes;
};

/// Upper bound from a passing certificate, lower bound from H_1.
GenTorsionReport order_bounds(const GroupPresentation& p, const Word& g,
                              const std::optional<GenTorsionCertificate>& c);

struct SearchLimits {
  std::size_t max_factors = 1;
  std::size_t max_conjugator_length = 0;
  /// Conjugator tuples examined before giving up.
  std::size_t max_candidates = 2'000'000;
};

/// Bounded breadth-first search for a vanishing product of conjugates of g.
/// nullopt is not a proof that none exists.
std::optional<GenTorsionCertificate> search_certificate(const GroupPresentation& p, const Word& g,
                                                        const SearchLimits& limits);
/// Single-threaded reference for search_certificate; returns the same result.
std::optional<GenTorsionCertificate> search_certificate_serial(const GroupPresentation& p, const Word& g,
                                                               const SearchLimits& limits);

/// Number of positive punctures of the coherent disk bounded by K_n.
inline long kn_punctures(long n) { return 2 * (n - 1) + 6; }

struct KnReport {
  long n = 0;
  Slope slope;
  SingularDiskDatum disk;
  GenTorsionCertificate certificate;
  Verdict verdict;
  GenTorsionReport report;
  CriteriaReport criteria;
};

/// Full K_n pipeline at slope p/q: requires q >= 1, p >= 2, p/q >= 2n + 4.
KnReport kn_report(long n, const Slope& slope);

/// Note attached to every K_n report about the two threshold figures.
std::string threshold_note(long n);

}  // namespace gentor
