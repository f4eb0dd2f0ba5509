// Seeded generators and small oracles shared by the test binaries.
#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string_view>
#include <vector>

#include "gentor/groups.hpp"

namespace testing {

inline std::uint64_t base_seed() {
  const char* s = std::getenv("GENTOR_SEED");
  return s ? std::strtoull(s, nullptr, 10) : 20261015ULL;
}

/// Independent stream per test so that adding a test does not shift others.
inline std::mt19937_64 make_rng(std::string_view salt) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : salt) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ULL;
  return std::mt19937_64(base_seed() ^ h);
}

inline long uniform(std::mt19937_64& g, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(g);
}

/// Letters as +-(gen + 1); reduction by a stack, independent of gentor::free_reduce.
inline std::vector<int> oracle_letters(const gentor::Word& w) {
  std::vector<int> out;
  for (const auto& s : w.syllables()) {
    const int code = static_cast<int>(s.gen) + 1;
    for (long i = 0; i < (s.exp < 0 ? -s.exp : s.exp); ++i) {
      const int c = s.exp > 0 ? code : -code;
      if (!out.empty() && out.back() == -c) {
        out.pop_back();
      } else {
        out.push_back(c);
      }
    }
  }
  return out;
}

inline gentor::Word random_word(std::mt19937_64& g, std::size_t generators, std::size_t max_len) {
  std::vector<gentor::Letter> letters;
  const auto len = static_cast<std::size_t>(uniform(g, 0, static_cast<long>(max_len)));
  for (std::size_t i = 0; i < len; ++i) {
    letters.push_back({static_cast<std::size_t>(uniform(g, 0, static_cast<long>(generators) - 1)),
                       uniform(g, 0, 1) ? 1 : -1});
  }
  return gentor::Word::from_letters(letters);
}

/// Random nonzero tangle entries with sum of |a_i| <= max_crossings.
inline std::vector<long> random_entries(std::mt19937_64& g, long max_crossings) {
  std::vector<long> entries;
  long budget = uniform(g, 1, max_crossings);
  while (budget > 0) {
    const long a = uniform(g, 1, budget);
    entries.push_back(uniform(g, 0, 1) ? a : -a);
    budget -= a;
  }
  return entries;
}

}  // namespace testing
