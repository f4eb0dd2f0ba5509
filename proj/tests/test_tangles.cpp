#include <doctest.h>

#include <set>

#include "gentor/tangles.hpp"
#include "support.hpp"

using namespace gentor;

TEST_CASE("cf_eval examples") {
  CHECK(cf_eval(TangleWord({5})) == Fraction(5));
  CHECK(cf_eval(TangleWord({2, -2, 2})) == Fraction(4, 3));
  CHECK(cf_eval(TangleWord({2, -2, 6, -7, 1})) == Fraction(93, 64));
  CHECK(cf_eval(TangleWord({-6, 4})) == Fraction(-23, 4));
  CHECK(cf_eval(TangleWord({-6, 4}, Convention::Reversed)) == Fraction(23, 6));
  CHECK(cf_eval(TangleWord({2, -2, 2}, Convention::Negative)) == Fraction(12, 5));
}

TEST_CASE("cf_eval reports the position of a vanishing tail") {
  try {
    (void)cf_eval(TangleWord({2, 1, -1}));
    FAIL("expected an evaluation error");
  } catch (const EvaluationError& e) {
    CHECK(e.position() == 2);
  }
}

TEST_CASE("tangle word validation and text form") {
  CHECK_THROWS_AS(TangleWord({}), DomainError);
  CHECK_THROWS_AS(TangleWord({2, 0}), DomainError);
  CHECK(TangleWord::parse("[2,-2,2]") == TangleWord({2, -2, 2}));
  CHECK(TangleWord::parse("[2,-2,2]@default") == TangleWord({2, -2, 2}));
  CHECK(TangleWord::parse(" [ -6 , 4 ]@reversed") == TangleWord({-6, 4}, Convention::Reversed));
  CHECK(TangleWord({3, 1}, Convention::Negative).str() == "[3,1]@negative");
  CHECK(TangleWord({3, 1}).str() == "[3,1]");
  CHECK_THROWS_AS(TangleWord::parse("[2,-2"), DomainError);
  CHECK_THROWS_AS(TangleWord::parse("[2]@sideways"), DomainError);
}

TEST_CASE("cf_expand inverts cf_eval") {
  CHECK(cf_expand(Fraction(17, 6)) == std::vector<long>{2, 1, 5});
  CHECK(cf_expand(Fraction(5, 3)) == std::vector<long>{1, 1, 2});
  CHECK(cf_expand(Fraction(1, 3)) == std::vector<long>{0, 3});
  auto g = testing::make_rng("cf-expand");
  for (int trial = 0; trial < 300; ++trial) {
    const Fraction x(testing::uniform(g, -200, 200), testing::uniform(g, 1, 60));
    const auto e = cf_expand(x);
    // Leading zero entries are allowed here, so evaluate by hand.
    Fraction v(e.back());
    for (auto it = e.rbegin() + 1; it != e.rend(); ++it) v = Fraction(*it) + v.reciprocal();
    CHECK(v == x);
  }
}

TEST_CASE("positive words give numerator > denominator > 0") {
  auto g = testing::make_rng("cf-positive");
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<long> e{testing::uniform(g, 2, 7)};
    const long extra = testing::uniform(g, 0, 5);
    for (long i = 0; i < extra; ++i) e.push_back(testing::uniform(g, 1, 7));
    const Fraction f = cf_eval(TangleWord(e));
    CHECK(f.num() > f.den());
    CHECK(f.den() > 0);
  }
}

TEST_CASE("K_n descriptors") {
  CHECK(kn_descriptor(2).fractions() == std::vector<Fraction>{Fraction(5, 3), Fraction(17, 6)});
  CHECK(kn_descriptor(4).str() == "M(5/3,5/3,5/3,17/6)");
  CHECK_THROWS_AS(kn_descriptor(1), DomainError);
  CHECK(gcd_alpha(kn_descriptor(2)) == 3);
  CHECK(gcd_alpha(kn_descriptor(7)) == 3);
  CHECK(gcd_alpha(MontesinosDescriptor({Fraction(1, 2), Fraction(1, 3)})) == 1);
  CHECK_THROWS_AS(gcd_alpha(MontesinosDescriptor({})), DomainError);
  for (long n = 2; n <= 64; ++n) {
    const auto d = kn_descriptor(n);
    CHECK(gcd_alpha(d) == 3);
    CHECK(d.size() == static_cast<std::size_t>(n));
    for (const auto& f : d.fractions()) CHECK((f.den() == 3 || f.den() == 6));
  }
}

TEST_CASE("Montesinos descriptor text form") {
  const auto d = MontesinosDescriptor::parse("M(5/3, 5/3, 17/6)");
  CHECK(d == kn_descriptor(3));
  CHECK(MontesinosDescriptor::parse(d.str()) == d);
  CHECK_THROWS_AS(MontesinosDescriptor::parse("M(1/1)"), DomainError);
  CHECK_THROWS_AS(MontesinosDescriptor::parse("N(1/3)"), DomainError);
  // Stored verbatim, not reduced mod 1.
  CHECK(MontesinosDescriptor::parse("M(17/6)").fractions()[0] == Fraction(17, 6));
}

TEST_CASE("lm_criteria") {
  const auto both = lm_criteria(kn_descriptor(4), Slope{30, 1});
  CHECK(both.hypothesis_checks.at("gcd_alpha_nontrivial"));
  CHECK(both.hypothesis_checks.at("p_even"));
  REQUIRE(both.conclusions.size() == 2);
  CHECK(both.conclusions[0].holds);
  CHECK(both.conclusions[1].holds);

  const auto odd = lm_criteria(kn_descriptor(4), Slope{31, 1});
  CHECK(odd.conclusions[0].holds);
  CHECK_FALSE(odd.conclusions[1].holds);

  const auto coprime = lm_criteria(MontesinosDescriptor({Fraction(1, 2), Fraction(1, 3)}), std::nullopt);
  CHECK_FALSE(coprime.hypothesis_checks.at("gcd_alpha_nontrivial"));
  for (const auto& c : coprime.conclusions) CHECK_FALSE(c.holds);

  CHECK_THROWS_AS(lm_criteria(kn_descriptor(4), Slope{30, 4}), DomainError);

  // A conclusion that holds has every listed hypothesis true.
  for (const auto& report : {both, odd, coprime}) {
    for (const auto& c : report.conclusions) {
      if (!c.holds) continue;
      for (const auto& h : c.hypotheses) CHECK(report.hypothesis_checks.at(h));
    }
  }
}

TEST_CASE("two-bridge normalization and classification") {
  CHECK(two_bridge_normalize(Fraction(93, 64)) == Fraction(93, 64));
  CHECK(two_bridge_normalize(Fraction(93, -29)) == Fraction(93, 64));
  CHECK_THROWS_AS(two_bridge_normalize(Fraction(4, 1)), DomainError);
  CHECK_THROWS_AS(two_bridge_normalize(Fraction(1, 1)), DomainError);
  CHECK(two_bridge_equivalent(Fraction(7, 2), Fraction(7, 4)));
  CHECK_FALSE(two_bridge_equivalent(Fraction(7, 2), Fraction(7, 3)));
  CHECK(two_bridge_equivalent(Fraction(93, 64), Fraction(93, 64)));
  CHECK(two_bridge_equivalent(Fraction(7, 2), Fraction(7, 5), true));
  CHECK_FALSE(two_bridge_equivalent(Fraction(7, 2), Fraction(7, 5)));
  CHECK(is_two_bridge_torus(Fraction(5, 1)));
  CHECK_FALSE(is_two_bridge_torus(Fraction(93, 64)));
  CHECK(is_two_bridge_torus(Fraction(7, 6)));
  CHECK_FALSE(is_two_bridge_torus(Fraction(5, 2)));
}

TEST_CASE("two_bridge_equivalent is an equivalence relation") {
  auto g = testing::make_rng("two-bridge-equivalence");
  for (int trial = 0; trial < 300; ++trial) {
    const long p = 2 * testing::uniform(g, 1, 20) + 1;
    auto pick = [&] {
      long q;
      do {
        q = testing::uniform(g, -3 * p, 3 * p);
      } while (std::gcd(q, p) != 1);
      return Fraction(p, q);
    };
    const Fraction a = pick(), b = pick(), c = pick();
    CHECK(two_bridge_equivalent(a, a));
    CHECK(two_bridge_equivalent(a, b) == two_bridge_equivalent(b, a));
    if (two_bridge_equivalent(a, b) && two_bridge_equivalent(b, c)) CHECK(two_bridge_equivalent(a, c));
    for (bool mirror : {false, true}) {
      CHECK(two_bridge_equivalent(a, b, mirror) == two_bridge_equivalent(b, a, mirror));
      if (two_bridge_equivalent(a, b, mirror) && two_bridge_equivalent(b, c, mirror)) {
        CHECK(two_bridge_equivalent(a, c, mirror));
      }
    }
  }
}

TEST_CASE("convention search for the K_n bracket words (frozen result)") {
  // Registered conventions crossed with sign variants of the entries; a
  // variant "matches" exactly, or only modulo 1 as a Montesinos parameter.
  struct Variant {
    std::string name;
    std::vector<long> entries;
  };
  auto variants = [](const std::vector<long>& w) {
    std::vector<long> neg, alt;
    for (std::size_t i = 0; i < w.size(); ++i) {
      neg.push_back(-w[i]);
      alt.push_back(i % 2 ? -w[i] : w[i]);
    }
    return std::vector<Variant>{{"as-is", w}, {"negated", neg}, {"alternating", alt}};
  };
  std::set<std::string> exact, mod_one;
  for (const auto& [word, target] : {std::pair{kKnTangleWord, Fraction(5, 3)}, std::pair{kKnLastTangleWord, Fraction(17, 6)}}) {
    for (Convention c : {Convention::Default, Convention::Reversed, Convention::Negative}) {
      for (const auto& v : variants(word)) {
        for (bool reciprocal : {false, true}) {
          Fraction f = cf_eval(TangleWord(v.entries, c));
          if (reciprocal) {
            if (f.is_zero()) continue;
            f = f.reciprocal();
          }
          const std::string key = TangleWord(word).str() + "@" + std::string(convention_name(c)) + "/" + v.name +
                                  (reciprocal ? "/reciprocal" : "");
          if (f == target) exact.insert(key);
          if ((f - target).is_integer()) mod_one.insert(key);
        }
      }
    }
  }
  CHECK(exact.empty());
  CHECK(mod_one == std::set<std::string>{"[2,-2,2]@default/negated", "[2,-2,2]@reversed/negated",
                                         "[-6,4]@reversed/as-is", "[-6,4]@reversed/alternating"});
}
