#include <doctest.h>

#include <numeric>

#include "gentor/gentorsion.hpp"
#include "gentor/grid.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace gentor;
using testing::oracle_lhs;
using testing::oracle_rhs;

TEST_CASE("canonicalize") {
  const SingularDiskDatum pos{6, 0, "test"};
  const auto a = canonicalize(pos, Slope{13, 2});
  CHECK(a.datum == pos);
  CHECK(a.slope == Slope{13, 2});
  CHECK_FALSE(a.mirrored);

  const auto b = canonicalize({0, 6, "test"}, Slope{13, -2});
  CHECK(b.datum.positive_punctures == 6);
  CHECK(b.datum.negative_punctures == 0);
  CHECK(b.slope == Slope{13, 2});
  CHECK(b.mirrored);

  CHECK_THROWS_AS(canonicalize({3, 2, "test"}, Slope{5, 1}), DomainError);

  for (const auto& d : {SingularDiskDatum{4, 0, ""}, SingularDiskDatum{0, 4, ""}, SingularDiskDatum{0, 0, ""}}) {
    for (const Slope s : {Slope{9, 2}, Slope{9, -2}}) {
      const auto once = canonicalize(d, s);
      const auto twice = canonicalize(once.datum, once.slope);
      CHECK(twice.datum == once.datum);
      CHECK(twice.slope == once.slope);
    }
  }
}

TEST_CASE("universal presentation") {
  CHECK(universal_presentation(0, Slope{5, 1}).str() == "<m | m^5>; meridian=m");
  CHECK(universal_presentation(1, Slope{3, 1}).str() == "<m,a1 | m^2 a1 m A1>; meridian=m");
  CHECK_THROWS_AS(universal_presentation(2, Slope{5, -1}), DomainError);
  CHECK_THROWS_AS(universal_presentation(2, Slope{0, 1}), DomainError);
  for (long n = 0; n <= 5; ++n) {
    for (const Slope s : {Slope{7, 1}, Slope{11, 3}}) {
      const auto u = universal_presentation(n, s);
      std::vector<BigInt> expected{s.p};
      for (long i = 0; i < n; ++i) expected.emplace_back(0);
      CHECK(h1(u).factors == expected);
      CHECK(element_h1_order(u, Word::generator(0)) == s.p);
    }
  }
}

TEST_CASE("derive_certificate examples") {
  const auto zero = derive_certificate(0, Slope{4, 1});
  CHECK(zero.conjugators == std::vector<Word>(4, Word{}));
  CHECK(check_certificate(zero).pass);

  const auto small = derive_certificate(1, Slope{3, 2});
  const auto& g = small.group;
  REQUIRE(small.conjugators.size() == 3);
  CHECK(g.format(small.conjugators[0]) == "1");
  CHECK(g.format(small.conjugators[1]) == "m a1");
  CHECK(g.format(small.conjugators[2]) == "a1");
  CHECK(free_reduce(conjugate_product(small.element, small.conjugators)) ==
        free_reduce(g.parse_word("m^3 M a1 m A1 M a1 m A1")));
  CHECK(check_certificate(small).pass);

  const auto big = derive_certificate(6, Slope{13, 2});
  CHECK(big.conjugators.size() == 13);
  CHECK(big.conjugators[0].empty());
  CHECK(check_certificate(big).pass);

  CHECK_THROWS_AS(derive_certificate(6, Slope{11, 2}), ThresholdError);
  CHECK_THROWS_AS(derive_certificate(0, Slope{1, 1}), DomainError);
}

TEST_CASE("certificate grid: n in 0..12, q in 1..3, qn <= p <= qn + 40") {
  std::vector<long> ns(13);
  std::iota(ns.begin(), ns.end(), 0);
  const auto cells = certificate_grid(ns, 3, 40);
  std::size_t expected = 0;
  for (long n : ns) {
    for (long q = 1; q <= 3; ++q) {
      for (long p = std::max(2L, q * n); p <= q * n + 40; ++p) expected += std::gcd(p, q) == 1;
    }
  }
  CHECK(cells.size() == expected);
  for (const auto& c : cells) {
    INFO("n=" << c.n << " p=" << c.p << " q=" << c.q << " " << c.failure);
    CHECK(c.ok());
  }
  CHECK(cells == certificate_grid_serial(ns, 3, 40));
}

TEST_CASE("threshold monotonicity over the grid") {
  for (long n : {1L, 3L, 6L}) {
    for (long q = 1; q <= 3; ++q) {
      bool succeeded = false;
      for (long p = 2; p <= q * n + 20; ++p) {
        if (std::gcd(p, q) != 1) continue;
        bool ok = false;
        try {
          ok = check_certificate(derive_certificate(n, Slope{p, q})).pass;
        } catch (const ThresholdError&) {
          ok = false;
        }
        if (succeeded) CHECK(ok);
        succeeded = succeeded || ok;
        CHECK(ok == (p >= q * n));
      }
    }
  }
}

TEST_CASE("check_certificate failure modes") {
  auto c = derive_certificate(2, Slope{7, 1});
  auto deleted = c;
  deleted.conjugators.pop_back();
  auto v = check_certificate(deleted);
  CHECK_FALSE(v.pass);
  CHECK_FALSE(v.residual.empty());

  auto trivial = c;
  trivial.element = Word{};
  CHECK(check_certificate(trivial).reason == "element trivial");

  auto none = c;
  none.conjugators.clear();
  CHECK(check_certificate(none).reason == "no conjugators");

  auto bad_index = c;
  bad_index.derivation[0].relator = 4;
  CHECK_FALSE(check_certificate(bad_index).pass);

  auto bad_sign = c;
  bad_sign.derivation[0].sign = 2;
  CHECK_FALSE(check_certificate(bad_sign).pass);

  auto foreign = c;
  foreign.conjugators[0] = Word::generator(9);
  CHECK_FALSE(check_certificate(foreign).pass);
}

TEST_CASE("check_certificate soundness under 100 random mutations") {
  auto g = testing::make_rng("mutations");
  int done = 0, deletions = 0;
  while (done < 100) {
    const long n = testing::uniform(g, 0, 6), q = testing::uniform(g, 1, 3);
    const long p = q * n + testing::uniform(g, 0, 10);
    if (p < 2 || std::gcd(p, q) != 1) continue;
    auto c = derive_certificate(n, Slope{p, q});
    auto& conj = c.conjugators;
    const auto i = static_cast<std::size_t>(testing::uniform(g, 0, static_cast<long>(conj.size()) - 1));
    const long kind = testing::uniform(g, 0, 2);
    if (kind == 0) {
      conj.erase(conj.begin() + static_cast<long>(i));
      ++deletions;
    } else if (kind == 1) {
      const auto j = static_cast<std::size_t>(testing::uniform(g, 0, static_cast<long>(conj.size()) - 1));
      std::swap(conj[i], conj[j]);
    } else {
      conj[i] = conj[i].inverse();
    }
    const Verdict v = check_certificate(c);
    const bool equal = oracle_lhs(c) == oracle_rhs(c);
    INFO("n=" << n << " p=" << p << " q=" << q << " kind=" << kind);
    CHECK(v.pass == equal);
    if (kind == 0) CHECK_FALSE(v.pass);  // exponent sum of m drops to p - 1
    if (v.pass) CHECK(testing::oracle_letters(c.group.relators()[0]) == oracle_lhs(c));
    ++done;
  }
  CHECK(deletions > 10);
}

TEST_CASE("order_bounds") {
  const auto z5 = GroupPresentation::parse("<x | x^5>");
  const auto r = order_bounds(z5, Word::generator(0), derive_certificate(0, Slope{5, 1}));
  REQUIRE(r.order_exact);
  CHECK(*r.order_exact == 5);

  const auto u = derive_certificate(6, Slope{13, 2});
  const auto r13 = order_bounds(u.group, u.element, u);
  REQUIRE(r13.order_exact);
  CHECK(*r13.order_exact == 13);
  CHECK(r13.element_nontrivial);

  const auto free = order_bounds(GroupPresentation::parse("<x | >"), Word::generator(0), std::nullopt);
  CHECK(free.element_nontrivial);
  CHECK_FALSE(free.order_upper);
  CHECK(free.order_lower_infinite);
  CHECK_FALSE(free.order_exact);
  CHECK(std::find(free.notes.begin(), free.notes.end(), "no generalized torsion detected") != free.notes.end());

  // A certificate for another element is not used as an upper bound.
  const auto other = order_bounds(u.group, Word::generator(0, 2), u);
  CHECK_FALSE(other.order_upper);

  // Trivial H_1 image: no nontriviality claim, no exact order.
  const auto perfect = GroupPresentation::parse("<x,y | x y X Y y, y x Y X x>");
  const auto rp = order_bounds(perfect, Word::generator(0), std::nullopt);
  CHECK_FALSE(rp.element_nontrivial);
  CHECK_FALSE(rp.order_exact);
}

TEST_CASE("kn_report") {
  const auto k2 = kn_report(2, Slope{16, 1});
  CHECK(k2.disk.positive_punctures == 8);
  CHECK(k2.certificate.conjugators.size() == 16);
  REQUIRE(k2.report.order_exact);
  CHECK(*k2.report.order_exact == 16);
  CHECK(k2.verdict.pass);

  const auto k4 = kn_report(4, Slope{30, 1});
  CHECK(k4.disk.positive_punctures == 12);
  CHECK(*k4.report.order_exact == 30);
  REQUIRE(k4.criteria.conclusions.size() == 2);
  CHECK(k4.criteria.conclusions[1].holds);
  CHECK(*k4.report.threshold_used == Fraction(12));
  CHECK(std::find(k4.report.notes.begin(), k4.report.notes.end(), threshold_note(4)) != k4.report.notes.end());
  CHECK(threshold_note(4).find("2n-4 = 4") != std::string::npos);
  CHECK(threshold_note(4).find("2n+4 = 12") != std::string::npos);

  const auto odd = kn_report(4, Slope{31, 1});
  CHECK(*odd.report.order_exact == 31);
  CHECK_FALSE(odd.criteria.conclusions[1].holds);

  CHECK_THROWS_AS(kn_report(3, Slope{9, 1}), ThresholdError);
  CHECK_THROWS_AS(kn_report(1, Slope{9, 1}), DomainError);
  CHECK_THROWS_AS(kn_report(2, Slope{16, 2}), DomainError);
}

TEST_CASE("search_certificate") {
  const SearchLimits tiny{3, 0};
  const auto z3 = GroupPresentation::parse("<x | x^3>");
  const auto c = search_certificate(z3, Word::generator(0), tiny);
  REQUIRE(c);
  CHECK(c->conjugators == std::vector<Word>(3, Word{}));
  CHECK(check_certificate(*c).pass);

  CHECK_FALSE(search_certificate(GroupPresentation::parse("<x | >"), Word::generator(0), {8, 4}));
  CHECK_FALSE(search_certificate(z3, Word{}, tiny));

  const auto u = universal_presentation(1, Slope{3, 2});
  const auto cu = search_certificate(u, Word::generator(0), {3, 3});
  REQUIRE(cu);
  CHECK(cu->conjugators.size() == 3);
  CHECK(check_certificate(*cu).pass);
  CHECK(order_bounds(u, Word::generator(0), cu).order_exact == BigInt(3));

  // Klein bottle group: b a b A = 1, so b is generalized torsion of order 2.
  const auto klein = GroupPresentation::parse("<a,b | a b A b>");
  const auto ck = search_certificate(klein, klein.parse_word("b"), {2, 1});
  REQUIRE(ck);
  CHECK(ck->conjugators.size() == 2);
  CHECK(check_certificate(*ck).pass);
}

TEST_CASE("search_certificate: parallel and serial agree") {
  struct Case {
    std::string group, element;
    SearchLimits limits;
  };
  const std::vector<Case> cases{{"<x | x^3>", "x", {3, 1}},
                                {"<a,b | a b A b>", "b", {2, 2}},
                                {"<a,b | a b A b>", "a", {4, 1}},
                                {"<x,y | x^2 Y^3>", "x y", {2, 1}},
                                {"<m,a1 | m^2 a1 m A1>", "m", {3, 2}}};
  for (const auto& c : cases) {
    const auto p = GroupPresentation::parse(c.group);
    const Word w = p.parse_word(c.element);
    const auto par = search_certificate(p, w, c.limits);
    const auto ser = search_certificate_serial(p, w, c.limits);
    INFO(c.group << " " << c.element);
    REQUIRE(par.has_value() == ser.has_value());
    if (par) {
      CHECK(par->conjugators == ser->conjugators);
      CHECK(par->derivation == ser->derivation);
      CHECK(check_certificate(*par).pass);
    }
  }
}
