#include "gentor/gentorsion.hpp"

namespace gentor {

namespace {

// Same alphabet size and relators; generator names and markings may differ.
bool same_group(const GroupPresentation& a, const GroupPresentation& b) {
  if (a.generators().size() != b.generators().size()) return false;
  if (a.relators().size() != b.relators().size()) return false;
  for (std::size_t i = 0; i < a.relators().size(); ++i) {
    if (!(free_reduce(a.relators()[i]) == free_reduce(b.relators()[i]))) return false;
  }
  return true;
}

}  // namespace

CanonicalDisk canonicalize(const SingularDiskDatum& d, const Slope& slope) {
  if (!d.coherent()) {
    throw DomainError("non-coherent disk: " + std::to_string(d.positive_punctures) + " positive and " +
                      std::to_string(d.negative_punctures) + " negative punctures");
  }
  if (d.negative_punctures == 0) return {d, slope, false};
  SingularDiskDatum m = d;
  std::swap(m.positive_punctures, m.negative_punctures);
  return {m, Slope{slope.p, -slope.q}, true};
}

GroupPresentation universal_presentation(long n, const Slope& slope) {
  if (n < 0) throw DomainError("puncture count must be non-negative");
  if (slope.q <= 0) throw DomainError("universal presentation needs q >= 1 (canonicalize first), got " + slope.str());
  if (slope.p < 1) throw DomainError("universal presentation needs p >= 1, got " + slope.str());
  if (!slope.reduced()) throw DomainError("slope " + slope.str() + " is not reduced");
  std::vector<std::string> gens{"m"};
  for (long i = 1; i <= n; ++i) gens.push_back("a" + std::to_string(i));
  Word disk = Word::generator(0, -n);
  for (long i = 1; i <= n; ++i) {
    const auto a = static_cast<std::size_t>(i);
    disk *= Word({{a, 1}, {0, 1}, {a, -1}});
  }
  Word relator = free_reduce(Word::generator(0, slope.p) * disk.power(slope.q));
  return GroupPresentation(std::move(gens), {relator}, {{"meridian", Word::generator(0)}});
}

GenTorsionCertificate derive_certificate(long n, const Slope& slope) {
  if (slope.p < 2) throw DomainError("order undefined below 2 (p = " + std::to_string(slope.p) + ")");
  if (slope.q < 1) throw DomainError("derive_certificate needs q >= 1, got " + slope.str());
  if (slope.p < n * slope.q) {
    throw ThresholdError("slope below threshold: " + slope.str() + " < " + std::to_string(n));
  }
  GenTorsionCertificate c;
  c.group = universal_presentation(n, slope);
  c.element = Word::generator(0);
  const long trivial = slope.p - slope.q * n;
  c.conjugators.assign(static_cast<std::size_t>(trivial), Word{});
  for (long k = slope.q - 1; k >= 0; --k) {
    for (long i = 1; i <= n; ++i) {
      c.conjugators.push_back(Word({{0, k * n}, {static_cast<std::size_t>(i), 1}}));
    }
  }
  c.derivation.push_back({0, Word{}, 1});
  return c;
}

Word conjugate_product(const Word& element, const std::vector<Word>& conjugators) {
  Word out;
  for (const auto& c : conjugators) {
    out *= c;
    out *= element;
    out *= c.inverse();
  }
  return out;
}

Word derivation_product(const GroupPresentation& group, const std::vector<DerivationStep>& steps) {
  Word out;
  for (const auto& s : steps) {
    out *= s.conjugator;
    out *= s.sign > 0 ? group.relators()[s.relator] : group.relators()[s.relator].inverse();
    out *= s.conjugator.inverse();
  }
  return out;
}

Verdict check_certificate(const GenTorsionCertificate& c) {
  Verdict v;
  try {
    c.group.check_word(c.element);
    for (const auto& w : c.conjugators) c.group.check_word(w);
    for (const auto& s : c.derivation) {
      if (s.relator >= c.group.relators().size()) {
        v.reason = "derivation refers to relator " + std::to_string(s.relator) + " which does not exist";
        return v;
      }
      if (s.sign != 1 && s.sign != -1) {
        v.reason = "derivation sign must be +1 or -1";
        return v;
      }
      c.group.check_word(s.conjugator);
    }
  } catch (const DomainError& e) {
    v.reason = std::string("malformed certificate: ") + e.what();
    return v;
  }
  if (c.conjugators.empty()) {
    v.reason = "no conjugators";
    return v;
  }
  if (free_reduce(c.element).empty()) {
    v.reason = "element trivial";
    return v;
  }
  const Word lhs = conjugate_product(c.element, c.conjugators);
  const Word rhs = derivation_product(c.group, c.derivation);
  v.residual = free_reduce(lhs * rhs.inverse());
  if (!v.residual.empty()) {
    v.reason = "product of conjugates differs from the relator product; residual " +
               c.group.format(v.residual);
    return v;
  }
  v.pass = true;
  v.reason = "product of " + std::to_string(c.conjugators.size()) +
             " conjugates freely equals a product of relator conjugates";
  return v;
}

GenTorsionReport order_bounds(const GroupPresentation& p, const Word& g,
                              const std::optional<GenTorsionCertificate>& c) {
  p.check_word(g);
  GenTorsionReport r;
  const BigInt h = element_h1_order(p, g);
  if (h == 0) {
    r.element_nontrivial = true;
    r.nontrivial_reason = "image in H_1 has infinite order";
    r.order_lower_infinite = true;
    r.lower_witness = "k[g] != 0 in H_1 for every k >= 1, so no product of conjugates of g vanishes";
  } else if (h >= 2) {
    r.element_nontrivial = true;
    r.nontrivial_reason = "image in H_1 has order " + h.get_str();
    r.order_lower = h;
    r.lower_witness = "a vanishing product of k conjugates forces " + h.get_str() + " | k";
  } else {
    r.nontrivial_reason = "image in H_1 is trivial; nontriviality not certified";
    r.order_lower = 2;
    r.lower_witness = "order is defined as a minimum over k >= 2";
  }

  if (c) {
    Verdict v = check_certificate(*c);
    if (!v.pass) {
      r.notes.push_back("certificate rejected: " + v.reason);
    } else if (!same_group(c->group, p) || !(free_reduce(c->element) == free_reduce(g))) {
      r.notes.push_back("certificate does not concern this group and element; ignored");
    } else {
      r.order_upper = BigInt(static_cast<unsigned long>(c->conjugators.size()));
      r.upper_witness = "checked product of " + std::to_string(c->conjugators.size()) + " conjugates";
      if (r.order_lower_infinite) r.notes.push_back("inconsistent: certificate passes but H_1 order is infinite");
    }
  }
  if (r.element_nontrivial && r.order_upper && r.order_lower && *r.order_upper == *r.order_lower) {
    r.order_exact = r.order_upper;
  }
  if (!r.order_upper && r.order_lower_infinite) r.notes.push_back("no generalized torsion detected");
  return r;
}

std::string threshold_note(long n) {
  return "threshold: the claim is stated for p/q >= 2n-4 = " + std::to_string(2 * n - 4) +
         " but the puncture count 2(n-1)+6 only supports p/q >= 2n+4 = " + std::to_string(2 * n + 4) +
         "; certificates use " + std::to_string(2 * n + 4);
}

KnReport kn_report(long n, const Slope& slope) {
  if (n < 2) throw DomainError("K_n is defined for n >= 2, got n = " + std::to_string(n));
  if (!slope.reduced()) throw DomainError("slope " + slope.str() + " is not reduced");
  if (slope.q < 1) throw DomainError("kn_report needs q >= 1, got " + slope.str());
  if (slope.p < 2) throw DomainError("order undefined below 2 (p = " + std::to_string(slope.p) + ")");
  const long punctures = kn_punctures(n);
  if (slope.p < punctures * slope.q) {
    throw ThresholdError("slope " + slope.str() + " is below the threshold p/q >= 2n+4 = " +
                         std::to_string(punctures) + " for n = " + std::to_string(n));
  }
  KnReport k;
  k.n = n;
  k.slope = slope;
  k.disk = {punctures, 0,
            "coherent clasp disk for K_" + std::to_string(n) + " with 2(n-1)+6 positive punctures (assumed)"};
  k.certificate = derive_certificate(punctures, canonicalize(k.disk, slope).slope);
  k.verdict = check_certificate(k.certificate);
  k.report = order_bounds(k.certificate.group, k.certificate.element, k.certificate);
  k.report.threshold_used = Fraction(punctures);
  k.report.notes.push_back(threshold_note(n));
  k.report.notes.push_back("certificate is built in U(" + std::to_string(punctures) + "," +
                           std::to_string(slope.p) + "," + std::to_string(slope.q) +
                           "), which maps to pi_1(K_n(p/q)) through the assumed disk relation");
  k.criteria = lm_criteria(kn_descriptor(n), slope);
  return k;
}

}  // namespace gentor
