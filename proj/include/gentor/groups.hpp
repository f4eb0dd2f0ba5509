// Words in free groups and finitely presented groups.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gentor/diagrams.hpp"
#include "gentor/exact.hpp"

namespace gentor {

/// x_gen^{+-1}
struct Letter {
  std::size_t gen = 0;
  int exp = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// x_gen^exp with exp != 0.
struct Syllable {
  std::size_t gen = 0;
  long exp = 1;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// A word over generator indices, stored as syllables so that large powers
/// stay compact. Construction does not reduce; see free_reduce.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Syllable> syllables);

  static Word generator(std::size_t gen, long exp = 1);
  static Word from_letters(const std::vector<Letter>& letters);

  const std::vector<Syllable>& syllables() const noexcept { return syllables_; }
  std::vector<Letter> letters() const;
  bool empty() const noexcept { return syllables_.empty(); }
  /// Number of letters, i.e. the sum of |exp|.
  std::size_t length() const noexcept;
  long exponent_sum(std::size_t gen) const;
  long exponent_sum() const;
  /// Largest generator index used, or nullopt for the empty word.
  std::optional<std::size_t> max_generator() const;

  Word inverse() const;
  Word power(long k) const;
  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

  /// Syllable-wise equality (not equality in the free group).
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Syllable> syllables_;
};

/// Unique freely reduced representative; adjacent powers of one generator merge.
Word free_reduce(const Word& w);

/// Free reduction followed by removal of inverse prefix/suffix pairs.
Word cyclic_reduce(const Word& w);

/// Same cyclic word up to rotation, or rotation of the inverse.
bool cyclically_equivalent(const Word& a, const Word& b, bool allow_inverse = true);

struct Marking {
  std::string name;
  Word word;
  friend bool operator==(const Marking&, const Marking&) = default;
};

/// Generators are lowercase identifiers ([a-z][a-z0-9_]*); in text the
/// uppercase spelling denotes the inverse.
class GroupPresentation {
 public:
  GroupPresentation() = default;
  GroupPresentation(std::vector<std::string> generators, std::vector<Word> relators,
                    std::vector<Marking> markings = {});

  const std::vector<std::string>& generators() const noexcept { return generators_; }
  const std::vector<Word>& relators() const noexcept { return relators_; }
  const std::vector<Marking>& markings() const noexcept { return markings_; }

  std::size_t generator_index(std::string_view name) const;
  const Word* marking(std::string_view name) const;
  void set_marking(const std::string& name, Word w);
  void add_relator(Word w);

  /// Throws DomainError when w uses an undeclared generator.
  void check_word(const Word& w) const;

  /// "x1 x2 X1^3"; the empty word is "1".
  std::string format(const Word& w) const;
  Word parse_word(std::string_view text) const;

  /// "<x1,x2 | x1 x2 X1 X2>; meridian=x1; longitude=..."
  std::string str() const;
  static GroupPresentation parse(std::string_view text);

  friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;

 private:
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
  std::vector<Marking> markings_;
};

/// Invariant factors of H_1, factors of 1 dropped, 0 for each free summand.
struct AbelianInvariants {
  std::vector<BigInt> factors;
  std::string str() const;
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// Wirtinger presentation: generator x_k per arc, one relator per crossing,
/// "meridian" = generator of the arc through edge 1 and the 0-framed
/// "longitude" marked alongside.
GroupPresentation wirtinger(const PlanarDiagram& d);

/// 0-framed longitude read from edge 1, in Wirtinger generators.
Word longitude(const PlanarDiagram& d);

/// Adds the relator meridian^p longitude^q. Requires a reduced slope, p >= 0.
GroupPresentation fill(const GroupPresentation& p, const Slope& slope);

/// Exponent-sum matrix, generators x relators.
IntegerMatrix relation_matrix(const GroupPresentation& p);

AbelianInvariants h1(const GroupPresentation& p);

/// Order of w in H_1 (0 = infinite).
BigInt element_h1_order(const GroupPresentation& p, const Word& w);

struct TietzeResult {
  GroupPresentation presentation;
  std::vector<std::string> log;
};

/// At most `budget` moves of relator-driven generator elimination and
/// redundant-relator removal. Markings are rewritten through eliminations.
TietzeResult tietze_simplify(const GroupPresentation& p, std::size_t budget);

}  // namespace gentor
