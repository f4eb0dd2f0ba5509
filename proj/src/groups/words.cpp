#include <algorithm>

#include "gentor/groups.hpp"

namespace gentor {

Word::Word(std::vector<Syllable> syllables) : syllables_(std::move(syllables)) {
  std::erase_if(syllables_, [](const Syllable& s) { return s.exp == 0; });
}

Word Word::generator(std::size_t gen, long exp) { return Word({Syllable{gen, exp}}); }

Word Word::from_letters(const std::vector<Letter>& letters) {
  std::vector<Syllable> s;
  s.reserve(letters.size());
  for (const auto& l : letters) s.push_back({l.gen, l.exp});
  return Word(std::move(s));
}

std::vector<Letter> Word::letters() const {
  std::vector<Letter> out;
  out.reserve(length());
  for (const auto& s : syllables_) {
    const int e = s.exp > 0 ? 1 : -1;
    for (long k = 0; k < std::abs(s.exp); ++k) out.push_back({s.gen, e});
  }
  return out;
}

std::size_t Word::length() const noexcept {
  std::size_t n = 0;
  for (const auto& s : syllables_) n += static_cast<std::size_t>(std::abs(s.exp));
  return n;
}

long Word::exponent_sum(std::size_t gen) const {
  long e = 0;
  for (const auto& s : syllables_) {
    if (s.gen == gen) e += s.exp;
  }
  return e;
}

long Word::exponent_sum() const {
  long e = 0;
  for (const auto& s : syllables_) e += s.exp;
  return e;
}

std::optional<std::size_t> Word::max_generator() const {
  std::optional<std::size_t> m;
  for (const auto& s : syllables_) {
    if (!m || s.gen > *m) m = s.gen;
  }
  return m;
}

Word Word::inverse() const {
  std::vector<Syllable> s(syllables_.rbegin(), syllables_.rend());
  for (auto& x : s) x.exp = -x.exp;
  return Word(std::move(s));
}

Word Word::power(long k) const {
  if (k == 0 || syllables_.empty()) return {};
  if (syllables_.size() == 1) return Word::generator(syllables_[0].gen, syllables_[0].exp * k);
  const Word base = k > 0 ? *this : inverse();
  Word out;
  out.syllables_.reserve(base.syllables_.size() * static_cast<std::size_t>(std::abs(k)));
  for (long i = 0; i < std::abs(k); ++i) out *= base;
  return out;
}

Word& Word::operator*=(const Word& rhs) {
  syllables_.insert(syllables_.end(), rhs.syllables_.begin(), rhs.syllables_.end());
  return *this;
}

Word free_reduce(const Word& w) {
  std::vector<Syllable> stack;
  stack.reserve(w.syllables().size());
  for (const auto& s : w.syllables()) {
    if (!stack.empty() && stack.back().gen == s.gen) {
      stack.back().exp += s.exp;
      if (stack.back().exp == 0) stack.pop_back();
    } else {
      stack.push_back(s);
    }
  }
  return Word(std::move(stack));
}

Word cyclic_reduce(const Word& w) {
  std::vector<Syllable> s = free_reduce(w).syllables();
  while (s.size() >= 2 && s.front().gen == s.back().gen) {
    s.front().exp += s.back().exp;
    s.pop_back();
    if (s.front().exp == 0) s.erase(s.begin());
  }
  return Word(std::move(s));
}

namespace {

bool is_rotation(const std::vector<Letter>& a, const std::vector<Letter>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  const std::size_t n = a.size();
  for (std::size_t shift = 0; shift < n; ++shift) {
    bool match = true;
    for (std::size_t i = 0; i < n && match; ++i) match = a[(i + shift) % n] == b[i];
    if (match) return true;
  }
  return false;
}

}  // namespace

bool cyclically_equivalent(const Word& a, const Word& b, bool allow_inverse) {
  const auto la = cyclic_reduce(a).letters();
  const Word rb = cyclic_reduce(b);
  if (is_rotation(la, rb.letters())) return true;
  return allow_inverse && is_rotation(la, rb.inverse().letters());
}

}  // namespace gentor
