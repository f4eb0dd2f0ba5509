#include <algorithm>
#include <numeric>

#include "gentor/groups.hpp"

namespace gentor {

namespace {

struct Working {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  std::vector<Marking> markings;
};

Word substitute(const Word& w, std::size_t gen, const Word& replacement) {
  Word out;
  for (const auto& s : w.syllables()) {
    if (s.gen == gen) {
      out *= replacement.power(s.exp);
    } else {
      out *= Word::generator(s.gen > gen ? s.gen - 1 : s.gen, s.exp);
    }
  }
  return free_reduce(out);
}

struct Candidate {
  std::size_t relator;
  std::size_t gen;
};

// A generator occurring exactly once (as g or g^-1) in a relator can be solved for.
// Shortest relator first, then the highest-index generator.
std::optional<Candidate> find_elimination(const Working& w) {
  std::vector<std::size_t> order(w.relators.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return w.relators[a].length() < w.relators[b].length();
  });
  for (std::size_t r : order) {
    std::vector<std::size_t> occurrences(w.generators.size(), 0);
    for (const auto& s : w.relators[r].syllables()) occurrences[s.gen] += static_cast<std::size_t>(std::abs(s.exp));
    for (std::size_t g = w.generators.size(); g-- > 0;) {
      if (occurrences[g] == 1) return Candidate{r, g};
    }
  }
  return std::nullopt;
}

}  // namespace

TietzeResult tietze_simplify(const GroupPresentation& p, std::size_t budget) {
  Working w{p.generators(), p.relators(), p.markings()};
  TietzeResult result;
  std::size_t moves = 0;
  auto describe = [&](const Word& word) {
    return GroupPresentation(w.generators, {}).format(word);
  };

  while (moves < budget) {
    bool changed = false;
    for (auto& r : w.relators) r = cyclic_reduce(r);

    for (std::size_t i = 0; i < w.relators.size() && moves < budget;) {
      if (w.relators[i].empty()) {
        result.log.push_back("drop trivial relator " + std::to_string(i + 1));
        w.relators.erase(w.relators.begin() + static_cast<long>(i));
        ++moves;
        changed = true;
        continue;
      }
      bool duplicate = false;
      for (std::size_t j = 0; j < i; ++j) {
        if (cyclically_equivalent(w.relators[i], w.relators[j])) {
          result.log.push_back("drop relator " + std::to_string(i + 1) + " (cyclic conjugate of relator " +
                               std::to_string(j + 1) + " or its inverse)");
          duplicate = true;
          break;
        }
      }
      if (duplicate) {
        w.relators.erase(w.relators.begin() + static_cast<long>(i));
        ++moves;
        changed = true;
        continue;
      }
      ++i;
    }
    if (moves >= budget) break;

    auto candidate = find_elimination(w);
    if (!candidate) {
      if (!changed) break;
      continue;
    }
    const Word& rel = w.relators[candidate->relator];
    const std::vector<Letter> letters = rel.letters();
    std::size_t pos = 0;
    while (letters[pos].gen != candidate->gen) ++pos;
    std::vector<Letter> rest;
    for (std::size_t k = 1; k < letters.size(); ++k) rest.push_back(letters[(pos + k) % letters.size()]);
    // g^e * rest = 1  =>  g = rest^{-e}
    const Word replacement = free_reduce(Word::from_letters(rest).power(-letters[pos].exp));
    result.log.push_back("eliminate " + w.generators[candidate->gen] + " = " + describe(replacement) +
                         " using relator " + std::to_string(candidate->relator + 1));

    w.relators.erase(w.relators.begin() + static_cast<long>(candidate->relator));
    // The replacement is expressed in the old numbering; shift it first.
    Word shifted = substitute(replacement, candidate->gen, Word{});
    for (auto& r : w.relators) r = substitute(r, candidate->gen, shifted);
    for (auto& m : w.markings) m.word = substitute(m.word, candidate->gen, shifted);
    w.generators.erase(w.generators.begin() + static_cast<long>(candidate->gen));
    ++moves;
  }
  for (auto& r : w.relators) r = cyclic_reduce(r);
  result.presentation = GroupPresentation(std::move(w.generators), std::move(w.relators), std::move(w.markings));
  return result;
}

}  // namespace gentor
