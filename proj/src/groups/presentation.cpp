#include <algorithm>
#include <cctype>
#include <sstream>

#include "gentor/groups.hpp"

namespace gentor {

namespace {

bool valid_name(std::string_view name) {
  if (name.empty() || !std::islower(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::islower(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) ||
           c == '_';
  });
}

std::string upper(std::string_view name) {
  std::string out(name);
  for (auto& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

std::string lower(std::string_view name) {
  std::string out(name);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

}  // namespace

GroupPresentation::GroupPresentation(std::vector<std::string> generators, std::vector<Word> relators,
                                     std::vector<Marking> markings)
    : generators_(std::move(generators)), relators_(std::move(relators)), markings_(std::move(markings)) {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (!valid_name(generators_[i])) {
      throw DomainError("invalid generator name '" + generators_[i] + "'");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (generators_[i] == generators_[j]) {
        throw DomainError("duplicate generator '" + generators_[i] + "'");
      }
    }
  }
  for (const auto& r : relators_) check_word(r);
  for (const auto& m : markings_) check_word(m.word);
}

std::size_t GroupPresentation::generator_index(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i] == name) return i;
  }
  throw DomainError("unknown generator '" + std::string(name) + "'");
}

const Word* GroupPresentation::marking(std::string_view name) const {
  for (const auto& m : markings_) {
    if (m.name == name) return &m.word;
  }
  return nullptr;
}

void GroupPresentation::set_marking(const std::string& name, Word w) {
  check_word(w);
  for (auto& m : markings_) {
    if (m.name == name) {
      m.word = std::move(w);
      return;
    }
  }
  markings_.push_back({name, std::move(w)});
}

void GroupPresentation::add_relator(Word w) {
  check_word(w);
  relators_.push_back(std::move(w));
}

void GroupPresentation::check_word(const Word& w) const {
  if (auto m = w.max_generator(); m && *m >= generators_.size()) {
    throw DomainError("word uses generator index " + std::to_string(*m) + " outside an alphabet of " +
                      std::to_string(generators_.size()));
  }
}

std::string GroupPresentation::format(const Word& w) const {
  check_word(w);
  if (w.empty()) return "1";
  std::string out;
  for (const auto& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    const std::string& name = generators_[s.gen];
    out += s.exp > 0 ? name : upper(name);
    if (std::abs(s.exp) > 1) out += "^" + std::to_string(std::abs(s.exp));
  }
  return out;
}

Word GroupPresentation::parse_word(std::string_view text) const {
  text = trim(text);
  if (text.empty() || text == "1") return {};
  std::vector<Syllable> syllables;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    long count = 1;
    if (auto caret = token.find('^'); caret != std::string::npos) {
      const std::string digits = token.substr(caret + 1);
      if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw DomainError("bad exponent in token '" + token + "'");
      }
      count = std::stol(digits);
      if (count == 0) throw DomainError("zero exponent in token '" + token + "'");
      token.erase(caret);
    }
    const std::string name = lower(token);
    const bool inverse = token != name;
    if (inverse && token != upper(name)) throw DomainError("mixed-case token '" + token + "'");
    syllables.push_back({generator_index(name), inverse ? -count : count});
  }
  return Word(std::move(syllables));
}

std::string GroupPresentation::str() const {
  std::string out = "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ',';
    out += generators_[i];
  }
  out += " | ";
  for (std::size_t i = 0; i < relators_.size(); ++i) {
    if (i) out += ", ";
    out += format(relators_[i]);
  }
  out += '>';
  for (const auto& m : markings_) out += "; " + m.name + "=" + format(m.word);
  return out;
}

GroupPresentation GroupPresentation::parse(std::string_view text) {
  text = trim(text);
  if (text.empty() || text.front() != '<') throw DomainError("presentation must start with '<'");
  const auto close = text.find('>');
  const auto bar = text.find('|');
  if (close == std::string_view::npos || bar == std::string_view::npos || bar > close) {
    throw DomainError("presentation must look like <gens | relators>");
  }
  std::vector<std::string> gens;
  if (auto g = trim(text.substr(1, bar - 1)); !g.empty()) {
    for (auto part : split(g, ',')) gens.emplace_back(trim(part));
  }
  GroupPresentation p(std::move(gens), {});
  if (auto r = trim(text.substr(bar + 1, close - bar - 1)); !r.empty()) {
    for (auto part : split(r, ',')) p.relators_.push_back(p.parse_word(part));
  }
  auto rest = trim(text.substr(close + 1));
  if (!rest.empty()) {
    if (rest.front() != ';') throw DomainError("expected ';' before markings");
    for (auto part : split(rest.substr(1), ';')) {
      part = trim(part);
      const auto eq = part.find('=');
      if (eq == std::string_view::npos) throw DomainError("marking must look like name=word");
      p.markings_.push_back({std::string(trim(part.substr(0, eq))), p.parse_word(part.substr(eq + 1))});
    }
  }
  return p;
}

std::string AbelianInvariants::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += ",";
    out += factors[i].get_str();
  }
  return out + "]";
}

IntegerMatrix relation_matrix(const GroupPresentation& p) {
  IntegerMatrix m(p.generators().size(), p.relators().size());
  for (std::size_t j = 0; j < p.relators().size(); ++j) {
    for (const auto& s : p.relators()[j].syllables()) m(s.gen, j) += s.exp;
  }
  return m;
}

AbelianInvariants h1(const GroupPresentation& p) {
  const IntegerMatrix m = relation_matrix(p);
  const SnfDecomposition dec = snf(m);
  AbelianInvariants inv;
  for (const auto& d : dec.diagonal()) {
    if (d != 1) inv.factors.push_back(d);
  }
  for (std::size_t i = std::min(m.rows(), m.cols()); i < m.rows(); ++i) inv.factors.emplace_back(0);
  return inv;
}

BigInt element_h1_order(const GroupPresentation& p, const Word& w) {
  p.check_word(w);
  std::vector<BigInt> v(p.generators().size(), BigInt(0));
  for (const auto& s : w.syllables()) v[s.gen] += s.exp;
  return coker_element_order(relation_matrix(p), v);
}

GroupPresentation fill(const GroupPresentation& p, const Slope& slope) {
  const Word* mu = p.marking("meridian");
  const Word* lambda = p.marking("longitude");
  if (!mu || !lambda) throw DomainError("fill needs marked meridian and longitude");
  if (!slope.reduced()) throw DomainError("slope " + slope.str() + " is not reduced");
  if (slope.p < 0) throw DomainError("slope " + slope.str() + " must have p >= 0");
  GroupPresentation out = p;
  out.add_relator(free_reduce(mu->power(slope.p) * lambda->power(slope.q)));
  return out;
}

}  // namespace gentor
