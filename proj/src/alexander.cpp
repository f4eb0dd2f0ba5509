#include "gentor/alexander.hpp"

#include <algorithm>

namespace gentor {

GroupRingElement GroupRingElement::monomial(long exponent, BigInt c) {
  GroupRingElement e;
  e.add(exponent, c);
  return e;
}

BigInt GroupRingElement::coefficient(long exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

long GroupRingElement::min_exponent() const {
  if (terms_.empty()) throw DomainError("min_exponent of zero group ring element");
  return terms_.begin()->first;
}

void GroupRingElement::add(long exponent, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& rhs) {
  for (const auto& [e, c] : rhs.terms_) add(e, c);
  return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  GroupRingElement out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add(ea + eb, ca * cb);
  }
  return out;
}

IntPolynomial GroupRingElement::to_polynomial() const { return to_polynomial(-min_exponent()); }

IntPolynomial GroupRingElement::to_polynomial(long shift) const {
  if (terms_.empty()) return {};
  if (terms_.begin()->first + shift < 0) throw DomainError("negative exponent after shift");
  std::vector<BigInt> v(static_cast<std::size_t>(terms_.rbegin()->first + shift) + 1, BigInt(0));
  for (const auto& [e, c] : terms_) v[static_cast<std::size_t>(e + shift)] = c;
  return IntPolynomial(std::move(v));
}

std::string GroupRingElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const BigInt mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const bool unit = mag == 1;
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (!unit) out += mag.get_str();
    out += "t";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

GroupRingElement fox_derivative(const Word& w, std::size_t gen, const std::vector<long>& weights) {
  if (gen >= weights.size()) throw DomainError("fox_derivative: unknown generator index " + std::to_string(gen));
  if (auto m = w.max_generator(); m && *m >= weights.size()) {
    throw DomainError("fox_derivative: word uses an undeclared generator");
  }
  // d(x^k)/dx = 1 + t + ... + t^{k-1}, d(x^-k)/dx = -(t^-1 + ... + t^-k), with t = x's weight.
  GroupRingElement out;
  long prefix = 0;
  for (const auto& s : w.syllables()) {
    const long t = weights[s.gen];
    if (s.gen == gen) {
      if (s.exp > 0) {
        for (long i = 0; i < s.exp; ++i) out.add(prefix + i * t, 1);
      } else {
        for (long i = 1; i <= -s.exp; ++i) out.add(prefix - i * t, -1);
      }
    }
    prefix += s.exp * t;
  }
  return out;
}

GroupRingElement fox_derivative(const GroupPresentation& p, const Word& w, std::string_view x) {
  const std::size_t gen = p.generator_index(x);
  p.check_word(w);
  return fox_derivative(w, gen, std::vector<long>(p.generators().size(), 1));
}

std::vector<long> abelianization_weights(const GroupPresentation& p) {
  const std::size_t g = p.generators().size();
  if (g == 0) throw DomainError("abelianization is trivial, not Z");
  const IntegerMatrix m = relation_matrix(p);
  const SnfDecomposition dec = snf(m);
  const std::vector<BigInt> diag = dec.diagonal();
  std::optional<std::size_t> free_row;
  for (std::size_t i = 0; i < g; ++i) {
    const BigInt d = i < diag.size() ? diag[i] : BigInt(0);
    if (d == 0) {
      if (free_row) throw DomainError("abelianization has rank > 1, not Z");
      free_row = i;
    } else if (d != 1) {
      throw DomainError("abelianization has torsion " + d.get_str() + ", not Z");
    }
  }
  if (!free_row) throw DomainError("abelianization is finite, not Z");
  std::vector<long> w(g);
  for (std::size_t j = 0; j < g; ++j) {
    const BigInt& u = dec.U(*free_row, j);
    if (!u.fits_slong_p()) throw DomainError("abelianization weight out of range");
    w[j] = u.get_si();
  }
  Word reference = Word::generator(0);
  if (const Word* mu = p.marking("meridian")) reference = *mu;
  long image = 0;
  for (const auto& s : reference.syllables()) image += s.exp * w[s.gen];
  if (image == 0) {
    for (long x : w) {
      if (x != 0) {
        image = x;
        break;
      }
    }
  }
  if (image < 0) {
    for (auto& x : w) x = -x;
  }
  return w;
}

std::vector<std::vector<GroupRingElement>> fox_jacobian(const GroupPresentation& p,
                                                        const std::vector<long>& weights) {
  std::vector<std::vector<GroupRingElement>> j;
  for (const auto& r : p.relators()) {
    std::vector<GroupRingElement> row;
    for (std::size_t g = 0; g < p.generators().size(); ++g) row.push_back(fox_derivative(r, g, weights));
    j.push_back(std::move(row));
  }
  return j;
}

IntPolynomial normalize_alexander(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  IntPolynomial q = p.shift_down();
  return q.coefficient(0) < 0 ? -q : q;
}

BigInt knot_determinant(const IntPolynomial& delta) { return abs(delta(BigInt(-1))); }

IntPolynomial polynomial_determinant(std::vector<std::vector<IntPolynomial>> m) {
  const std::size_t n = m.size();
  if (n == 0) return IntPolynomial{1};
  bool negate = false;
  IntPolynomial prev{1};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return {};
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    const bool unit = prev == IntPolynomial{1};
    for (std::size_t i = k + 1; i < n; ++i) {
      const bool pivot_row_zero = m[i][k].is_zero();
      for (std::size_t j = k + 1; j < n; ++j) {
        // Wirtinger Jacobians are sparse: skip products with a zero factor.
        const bool cross_zero = pivot_row_zero || m[k][j].is_zero();
        if (cross_zero && m[i][j].is_zero()) continue;
        IntPolynomial x = m[k][k] * m[i][j];
        if (!cross_zero) x = x - m[i][k] * m[k][j];
        m[i][j] = unit ? std::move(x) : divide_exact(x, prev);
      }
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

namespace {

struct MinorProblem {
  std::vector<std::vector<IntPolynomial>> rows;  // relators x kept columns
  std::size_t size = 0;                          // minor dimension
  std::vector<std::vector<std::size_t>> choices; // row subsets
  long weight = 1;                               // abelianized exponent of the deleted generator
};

MinorProblem prepare(const GroupPresentation& p, std::optional<std::size_t> deleted) {
  const std::vector<long> weights = abelianization_weights(p);
  const std::size_t g = p.generators().size();
  std::size_t column;
  if (deleted) {
    if (*deleted >= g) throw DomainError("column index out of range");
    if (weights[*deleted] == 0) throw DomainError("deleted column must have nonzero weight");
    column = *deleted;
  } else {
    std::optional<std::size_t> pick;
    for (std::size_t j = g; j-- > 0;) {
      if (std::abs(weights[j]) == 1) {
        pick = j;
        break;
      }
    }
    // Otherwise any generator of nonzero weight, corrected for in combine().
    for (std::size_t j = g; !pick && j-- > 0;) {
      if (weights[j] != 0) pick = j;
    }
    if (!pick) throw DomainError("no generator of nonzero weight to delete");
    column = *pick;
  }

  MinorProblem mp;
  mp.size = g - 1;
  mp.weight = std::abs(weights[column]);
  for (const auto& row : fox_jacobian(p, weights)) {
    long shift = 0;
    bool any = false;
    for (std::size_t j = 0; j < g; ++j) {
      if (j == column || row[j].is_zero()) continue;
      shift = any ? std::min(shift, row[j].min_exponent()) : row[j].min_exponent();
      any = true;
    }
    std::vector<IntPolynomial> kept;
    for (std::size_t j = 0; j < g; ++j) {
      if (j != column) kept.push_back(row[j].to_polynomial(-shift));
    }
    mp.rows.push_back(std::move(kept));
  }
  const std::size_t r = mp.rows.size();
  if (r < mp.size) return mp;  // no maximal minors: Delta = 0
  std::vector<bool> mask(r, false);
  std::fill(mask.begin(), mask.begin() + static_cast<long>(mp.size), true);
  do {
    std::vector<std::size_t> pick;
    for (std::size_t i = 0; i < r; ++i) {
      if (mask[i]) pick.push_back(i);
    }
    mp.choices.push_back(std::move(pick));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return mp;
}

IntPolynomial minor(const MinorProblem& mp, std::size_t index) {
  std::vector<std::vector<IntPolynomial>> m;
  m.reserve(mp.size);
  for (std::size_t i : mp.choices[index]) m.push_back(mp.rows[i]);
  return polynomial_determinant(std::move(m));
}

// Deleting a column of weight w gives Delta (t^w - 1) / (t - 1).
IntPolynomial combine(const MinorProblem& mp, const std::vector<IntPolynomial>& minors) {
  IntPolynomial acc;
  for (const auto& m : minors) acc = gcd(acc, m);
  if (mp.weight != 1 && !acc.is_zero()) {
    std::vector<BigInt> cyclotomic(static_cast<std::size_t>(mp.weight), BigInt(1));
    acc = divide_exact(acc, IntPolynomial(cyclotomic));
  }
  return normalize_alexander(acc);
}

}  // namespace

IntPolynomial alexander_polynomial_serial(const GroupPresentation& p) {
  const MinorProblem mp = prepare(p, std::nullopt);
  std::vector<IntPolynomial> minors;
  for (std::size_t i = 0; i < mp.choices.size(); ++i) minors.push_back(minor(mp, i));
  return combine(mp, minors);
}

IntPolynomial alexander_polynomial(const GroupPresentation& p) {
  const MinorProblem mp = prepare(p, std::nullopt);
  std::vector<IntPolynomial> minors(mp.choices.size());
  const long count = static_cast<long>(mp.choices.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) minors[static_cast<std::size_t>(i)] = minor(mp, static_cast<std::size_t>(i));
  return combine(mp, minors);
}

IntPolynomial alexander_polynomial_deleting(const GroupPresentation& p, std::size_t column) {
  const MinorProblem mp = prepare(p, column);
  std::vector<IntPolynomial> minors;
  for (std::size_t i = 0; i < mp.choices.size(); ++i) minors.push_back(minor(mp, i));
  return combine(mp, minors);
}

ObstructionReport biorder_flags(const IntPolynomial& delta) {
  if (delta.is_zero()) throw DomainError("biorder_flags of the zero polynomial");
  ObstructionReport r;
  r.delta = normalize_alexander(delta);
  r.degree = r.delta.degree();
  r.positive_real_roots = positive_real_root_count(r.delta);
  r.unchecked_hypotheses.push_back("rationally homologically fibered (deg Delta = 2 g(K)); genus not computed");
  if (r.degree == 0) {
    r.notes.push_back("trivial polynomial: no conclusion");
    return r;
  }
  const long distinct_degree = square_free_part(r.delta).degree();
  r.no_positive_roots_not_biorderable = r.positive_real_roots == 0;
  r.all_roots_positive_candidate = static_cast<long>(r.positive_real_roots) == distinct_degree;
  if (r.no_positive_roots_not_biorderable) {
    r.notes.push_back("no positive real roots: not bi-orderable if the fibering hypothesis holds");
  } else if (r.all_roots_positive_candidate) {
    r.notes.push_back("all roots positive real: necessary condition for bi-orderability met");
  }
  return r;
}

}  // namespace gentor
