#include "gentor/tangles.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace gentor {

std::string_view convention_name(Convention c) {
  switch (c) {
    case Convention::Default:
      return "default";
    case Convention::Reversed:
      return "reversed";
    case Convention::Negative:
      return "negative";
  }
  return "default";
}

Convention parse_convention(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "default") return Convention::Default;
  if (lower == "reversed") return Convention::Reversed;
  if (lower == "negative") return Convention::Negative;
  throw DomainError("unknown tangle convention '" + std::string(name) + "'");
}

TangleWord::TangleWord(std::vector<long> e, Convention c) : entries(std::move(e)), convention(c) {
  if (entries.empty()) throw DomainError("tangle word must be non-empty");
  for (long a : entries) {
    if (a == 0) throw DomainError("tangle word entries must be nonzero");
  }
}

TangleWord TangleWord::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  Convention conv = Convention::Default;
  if (auto at = s.find('@'); at != std::string::npos) {
    conv = parse_convention(s.substr(at + 1));
    s.erase(at);
  }
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
    throw DomainError("tangle word must look like [a1,...,ak]: '" + std::string(text) + "'");
  }
  std::vector<long> entries;
  std::stringstream body(s.substr(1, s.size() - 2));
  std::string item;
  while (std::getline(body, item, ',')) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      throw DomainError("bad tangle entry '" + item + "'");
    }
    if (used != item.size()) throw DomainError("bad tangle entry '" + item + "'");
    entries.push_back(v);
  }
  return TangleWord(std::move(entries), conv);
}

std::string TangleWord::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries[i]);
  }
  out += ']';
  if (convention != Convention::Default) {
    out += '@';
    out += convention_name(convention);
  }
  return out;
}

namespace {

// Right-nested evaluation; `position_of` maps a sequence index back to the
// caller's 1-based entry position for error messages.
template <typename PositionOf>
Fraction nested(const std::vector<long>& a, int sign, PositionOf position_of) {
  Fraction v(a.back());
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    if (v.is_zero()) {
      throw EvaluationError("continued fraction tail starting at entry " +
                                std::to_string(position_of(i + 1)) + " evaluates to 0",
                            position_of(i + 1));
    }
    v = Fraction(a[i]) + Fraction(sign) * v.reciprocal();
  }
  return v;
}

}  // namespace

Fraction cf_eval(const TangleWord& w) {
  const auto& a = w.entries;
  switch (w.convention) {
    case Convention::Default:
      return nested(a, 1, [](std::size_t i) { return i + 1; });
    case Convention::Negative:
      return nested(a, -1, [](std::size_t i) { return i + 1; });
    case Convention::Reversed: {
      std::vector<long> r(a.rbegin(), a.rend());
      const std::size_t k = a.size();
      return nested(r, 1, [k](std::size_t i) { return k - i; });
    }
  }
  return {};
}

std::vector<long> cf_expand(const Fraction& x) {
  std::vector<long> out;
  BigInt num = x.num();
  BigInt den = x.den();
  while (den != 0) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (!q.fits_slong_p()) throw DomainError("continued fraction term out of range");
    out.push_back(q.get_si());
    BigInt r = num - q * den;
    num = den;
    den = r;
  }
  return out;
}

MontesinosDescriptor::MontesinosDescriptor(std::vector<Fraction> fractions)
    : fractions_(std::move(fractions)) {
  for (const auto& f : fractions_) {
    if (f.den() < 2) {
      throw DomainError("Montesinos fraction " + f.str() + " needs denominator >= 2");
    }
  }
}

MontesinosDescriptor MontesinosDescriptor::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.size() < 3 || s.substr(0, 2) != "M(" || s.back() != ')') {
    throw DomainError("descriptor must look like M(b1/a1,...): '" + std::string(text) + "'");
  }
  std::vector<Fraction> fractions;
  std::stringstream body(s.substr(2, s.size() - 3));
  std::string item;
  while (std::getline(body, item, ',')) fractions.push_back(Fraction::parse(item));
  return MontesinosDescriptor(std::move(fractions));
}

std::string MontesinosDescriptor::str() const {
  std::string out = "M(";
  for (std::size_t i = 0; i < fractions_.size(); ++i) {
    if (i) out += ',';
    out += fractions_[i].str();
  }
  return out + ")";
}

MontesinosDescriptor kn_descriptor(long n) {
  if (n < 2) throw DomainError("K_n is defined for n >= 2, got n = " + std::to_string(n));
  std::vector<Fraction> f(static_cast<std::size_t>(n - 1), Fraction(5, 3));
  f.emplace_back(17, 6);
  return MontesinosDescriptor(std::move(f));
}

BigInt gcd_alpha(const MontesinosDescriptor& d) {
  if (d.empty()) throw DomainError("gcd_alpha of an empty descriptor");
  BigInt g = 0;
  for (const auto& f : d.fractions()) g = gcd(g, f.den());
  return g;
}

CriteriaReport lm_criteria(const MontesinosDescriptor& d, const std::optional<Slope>& slope) {
  if (d.empty()) throw DomainError("lm_criteria of an empty descriptor");
  if (slope && !slope->reduced()) {
    throw DomainError("slope " + slope->str() + " is not reduced");
  }
  CriteriaReport report;
  const std::string length = std::to_string(d.size());
  const bool gcd_ok = gcd_alpha(d) != 1;
  report.hypothesis_checks["gcd_alpha_nontrivial"] = gcd_ok;
  report.conclusions.push_back(
      {"tunnel number = " + std::to_string(d.size() - 1) + ", Heegaard genus of the exterior = " + length,
       "Lustig-Moriah, Theorem 0.1(1)",
       {"gcd_alpha_nontrivial"},
       gcd_ok});
  if (slope) {
    const bool even = slope->p % 2 == 0;
    report.hypothesis_checks["p_even"] = even;
    report.conclusions.push_back(
        {"Heegaard genus = rank of pi_1 = " + length + " for the " + slope->str() + " filling",
         "Lustig-Moriah, Theorem 0.1(3)",
         {"gcd_alpha_nontrivial", "p_even"},
         gcd_ok && even});
  }
  return report;
}

namespace {

struct TwoBridge {
  BigInt p;
  BigInt q;
};

TwoBridge normalized(const Fraction& f) {
  BigInt p = abs(f.num());
  if (p < 3 || p % 2 == 0) {
    throw DomainError(f.str() + " is not a two-bridge knot fraction (numerator must be odd and >= 3)");
  }
  BigInt q = sgn(f.num()) * f.den();
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  return {p, r};
}

BigInt inverse_mod(const BigInt& q, const BigInt& p) {
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  return inv;
}

}  // namespace

Fraction two_bridge_normalize(const Fraction& f) {
  TwoBridge t = normalized(f);
  return Fraction(t.p, t.q);
}

bool two_bridge_equivalent(const Fraction& f1, const Fraction& f2, bool allow_mirror) {
  TwoBridge a = normalized(f1);
  TwoBridge b = normalized(f2);
  if (a.p != b.p) return false;
  const BigInt& p = a.p;
  std::vector<BigInt> targets{a.q, inverse_mod(a.q, p)};
  if (allow_mirror) {
    targets.push_back(p - a.q);
    targets.push_back(p - targets[1]);
  }
  return std::find(targets.begin(), targets.end(), b.q) != targets.end();
}

bool is_two_bridge_torus(const Fraction& f) {
  TwoBridge t = normalized(f);
  return two_bridge_equivalent(f, Fraction(t.p, 1)) || two_bridge_equivalent(f, Fraction(t.p, t.p - 1));
}

}  // namespace gentor
