// Bounded search for generalized torsion certificates.
//
// Candidates are tuples of conjugators (first one fixed to 1) drawn from all
// reduced words up to a length bound in shortlex order. Each candidate
// product is tested by breadth-first shortening: insert a cyclic piece of a
// relator (or its inverse) wherever that makes the word shorter. Every
// insertion is recorded, so a success yields a checkable derivation.
#include <algorithm>
#include <climits>
#include <deque>
#include <set>

#include "gentor/gentorsion.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gentor {

namespace {

// Letters are +-(gen + 1).
using Letters = std::vector<int>;

Letters to_letters(const Word& w) {
  Letters out;
  for (const auto& s : w.syllables()) {
    const int code = static_cast<int>(s.gen) + 1;
    for (long i = 0; i < std::abs(s.exp); ++i) out.push_back(s.exp > 0 ? code : -code);
  }
  return out;
}

Word to_word(const Letters& l) {
  std::vector<Letter> letters;
  letters.reserve(l.size());
  for (int c : l) letters.push_back({static_cast<std::size_t>(std::abs(c) - 1), c > 0 ? 1 : -1});
  return free_reduce(Word::from_letters(letters));
}

void push_reduced(Letters& out, int c) {
  if (!out.empty() && out.back() == -c) {
    out.pop_back();
  } else {
    out.push_back(c);
  }
}

Letters inverse(const Letters& l) {
  Letters out(l.rbegin(), l.rend());
  for (auto& c : out) c = -c;
  return out;
}

// A piece t is a rotation z y of r^tau = y z.
struct Piece {
  Letters letters;
  Letters y_inverse;
  std::size_t relator;
  int tau;
};

std::vector<Piece> pieces_of(const GroupPresentation& p) {
  std::vector<Piece> out;
  std::set<std::pair<std::size_t, Letters>> seen;
  for (std::size_t j = 0; j < p.relators().size(); ++j) {
    const Letters base = to_letters(free_reduce(p.relators()[j]));
    if (base.empty()) continue;
    for (int tau : {1, -1}) {
      const Letters r = tau > 0 ? base : inverse(base);
      for (std::size_t t = 0; t < r.size(); ++t) {
        Letters piece(r.begin() + static_cast<long>(t), r.end());
        piece.insert(piece.end(), r.begin(), r.begin() + static_cast<long>(t));
        if (!seen.insert({j, piece}).second) continue;
        out.push_back({piece, inverse(Letters(r.begin(), r.begin() + static_cast<long>(t))), j, tau});
      }
    }
  }
  return out;
}

// All freely reduced words of length <= max_len, shortlex.
std::vector<Letters> reduced_words(std::size_t generators, std::size_t max_len) {
  std::vector<int> alphabet;
  for (std::size_t g = 1; g <= generators; ++g) {
    alphabet.push_back(static_cast<int>(g));
    alphabet.push_back(-static_cast<int>(g));
  }
  std::vector<Letters> all{{}};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t level_end = all.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (int c : alphabet) {
        if (!all[i].empty() && all[i].back() == -c) continue;
        Letters next = all[i];
        next.push_back(c);
        all.push_back(std::move(next));
      }
    }
    level_begin = level_end;
  }
  return all;
}

struct Step {
  Letters conjugator;
  std::size_t relator;
  int sign;
};

constexpr std::size_t kStateCap = 20'000;

// Breadth-first shortening of w to the empty word using at most max_steps
// insertions. Returns the derivation w = prod (u r^s u^-1).
std::optional<std::vector<Step>> shorten_to_identity(const Letters& w, const std::vector<Piece>& pieces,
                                                     std::size_t max_steps) {
  if (w.empty()) return std::vector<Step>{};
  struct Node {
    Letters word;
    std::vector<Step> steps;
  };
  std::deque<Node> queue{{w, {}}};
  std::set<Letters> visited{w};
  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    if (node.steps.size() >= max_steps) continue;
    for (std::size_t i = 0; i <= node.word.size(); ++i) {
      for (const auto& piece : pieces) {
        Letters next(node.word.begin(), node.word.begin() + static_cast<long>(i));
        for (int c : piece.letters) push_reduced(next, c);
        for (std::size_t k = i; k < node.word.size(); ++k) push_reduced(next, node.word[k]);
        if (next.size() >= node.word.size()) continue;
        if (!visited.insert(next).second) continue;
        // u v = (u t^-1 u^-1) (u t v) and t^-1 = y^-1 r^-tau y.
        Letters conj(node.word.begin(), node.word.begin() + static_cast<long>(i));
        for (int c : piece.y_inverse) push_reduced(conj, c);
        std::vector<Step> steps = node.steps;
        steps.push_back({std::move(conj), piece.relator, -piece.tau});
        if (next.empty()) return steps;
        if (visited.size() > kStateCap) return std::nullopt;
        queue.push_back({std::move(next), std::move(steps)});
      }
    }
  }
  return std::nullopt;
}

struct Plan {
  Letters element;
  std::vector<Letters> words;
  std::vector<Piece> pieces;
  // (k, number of tuples examined for this k)
  std::vector<std::pair<std::size_t, std::size_t>> batches;
};

std::optional<Plan> make_plan(const GroupPresentation& p, const Word& g, const SearchLimits& limits) {
  p.check_word(g);
  Plan plan;
  plan.element = to_letters(free_reduce(g));
  if (plan.element.empty()) return std::nullopt;
  const BigInt h = element_h1_order(p, g);
  if (h == 0) return std::nullopt;
  plan.words = reduced_words(p.generators().size(), limits.max_conjugator_length);
  plan.pieces = pieces_of(p);
  std::size_t budget = limits.max_candidates;
  for (std::size_t k = 1; k <= limits.max_factors && budget > 0; ++k) {
    if (BigInt(static_cast<unsigned long>(k)) % h != 0) continue;
    std::size_t tuples = 1;
    for (std::size_t i = 1; i < k; ++i) {
      if (tuples > budget / plan.words.size()) {
        tuples = budget;
        break;
      }
      tuples *= plan.words.size();
    }
    tuples = std::min(tuples, budget);
    plan.batches.push_back({k, tuples});
    budget -= tuples;
  }
  return plan;
}

// Conjugators of tuple `index` among k-tuples, first entry fixed to 1.
std::vector<std::size_t> decode(std::size_t index, std::size_t k, std::size_t base) {
  std::vector<std::size_t> digits(k, 0);
  for (std::size_t pos = k; pos-- > 1;) {
    digits[pos] = index % base;
    index /= base;
  }
  return digits;
}

std::optional<std::vector<Step>> try_tuple(const Plan& plan, std::size_t k, std::size_t index,
                                           std::size_t max_steps) {
  const auto digits = decode(index, k, plan.words.size());
  Letters product;
  for (std::size_t d : digits) {
    const Letters& c = plan.words[d];
    for (int x : c) push_reduced(product, x);
    for (int x : plan.element) push_reduced(product, x);
    for (auto it = c.rbegin(); it != c.rend(); ++it) push_reduced(product, -*it);
  }
  return shorten_to_identity(product, plan.pieces, max_steps);
}

GenTorsionCertificate assemble(const GroupPresentation& p, const Word& g, const Plan& plan, std::size_t k,
                               std::size_t index, const std::vector<Step>& steps) {
  GenTorsionCertificate c;
  c.group = p;
  c.element = free_reduce(g);
  for (std::size_t d : decode(index, k, plan.words.size())) c.conjugators.push_back(to_word(plan.words[d]));
  for (const auto& s : steps) c.derivation.push_back({s.relator, to_word(s.conjugator), s.sign});
  return c;
}

}  // namespace

std::optional<GenTorsionCertificate> search_certificate_serial(const GroupPresentation& p, const Word& g,
                                                               const SearchLimits& limits) {
  auto plan = make_plan(p, g, limits);
  if (!plan) return std::nullopt;
  for (const auto& [k, tuples] : plan->batches) {
    for (std::size_t i = 0; i < tuples; ++i) {
      if (auto steps = try_tuple(*plan, k, i, limits.max_factors)) {
        return assemble(p, g, *plan, k, i, *steps);
      }
    }
  }
  return std::nullopt;
}

std::optional<GenTorsionCertificate> search_certificate(const GroupPresentation& p, const Word& g,
                                                        const SearchLimits& limits) {
  auto plan = make_plan(p, g, limits);
  if (!plan) return std::nullopt;
  for (const auto& [k, tuples] : plan->batches) {
    const long count = static_cast<long>(tuples);
    long best = LONG_MAX;
#pragma omp parallel for schedule(dynamic, 16) reduction(min : best)
    for (long i = 0; i < count; ++i) {
      if (i >= best) continue;
      if (try_tuple(*plan, k, static_cast<std::size_t>(i), limits.max_factors)) best = std::min(best, i);
    }
    if (best != LONG_MAX) {
      const auto index = static_cast<std::size_t>(best);
      auto steps = try_tuple(*plan, k, index, limits.max_factors);
      return assemble(p, g, *plan, k, index, *steps);
    }
  }
  return std::nullopt;
}

}  // namespace gentor
