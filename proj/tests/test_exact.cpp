#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>

#include "gentor/exact.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace gentor;
using namespace testing;

namespace {

IntegerMatrix random_matrix(std::mt19937_64& g, std::size_t max_dim, long bound) {
  const auto r = static_cast<std::size_t>(testing::uniform(g, 0, static_cast<long>(max_dim)));
  const auto c = static_cast<std::size_t>(testing::uniform(g, 0, static_cast<long>(max_dim)));
  IntegerMatrix m(r, c);
  // Sparse-ish entries make rank deficiency and nontrivial factors common.
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = testing::uniform(g, 0, 2) ? testing::uniform(g, -bound, bound) : 0;
  }
  return m;
}

}  // namespace

TEST_CASE("fraction normalization and parsing") {
  CHECK(Fraction(6, -4) == Fraction(-3, 2));
  CHECK(Fraction(6, -4).str() == "-3/2");
  CHECK(Fraction::parse("17/6") == Fraction(17, 6));
  CHECK(Fraction::parse("-5").is_integer());
  CHECK_THROWS_AS(Fraction(1, 0), DomainError);
  CHECK_THROWS_AS(Fraction::parse("1/x"), DomainError);
  CHECK(Fraction(1, 3) + Fraction(1, 6) == Fraction(1, 2));
  CHECK(Fraction(5, 3) < Fraction(17, 6));
  CHECK(Fraction(-2, 3).reciprocal() == Fraction(-3, 2));
}

TEST_CASE("snf examples") {
  const auto id = snf(IntegerMatrix::identity(2));
  CHECK(id.D == IntegerMatrix::identity(2));
  CHECK(id.U == IntegerMatrix::identity(2));
  CHECK(id.V == IntegerMatrix::identity(2));

  const IntegerMatrix m{{4, 6}, {2, 2}};
  const auto dec = snf(m);
  CHECK(dec.diagonal() == std::vector<BigInt>{2, 2});
  CHECK(dec.U * m * dec.V == dec.D);

  CHECK(snf(IntegerMatrix{{0}}).D == IntegerMatrix{{0}});
  const auto empty = snf(IntegerMatrix(0, 3));
  CHECK(empty.D.rows() == 0);
  CHECK(empty.V.rows() == 3);
}

TEST_CASE("snf property: 500 random matrices up to 6x6") {
  auto g = testing::make_rng("snf");
  for (int trial = 0; trial < 500; ++trial) {
    const IntegerMatrix m = random_matrix(g, 6, 9);
    const SnfDecomposition dec = snf(m);
    INFO("M = " << m.str());
    REQUIRE(dec.U.rows() == m.rows());
    REQUIRE(dec.V.rows() == m.cols());
    CHECK(abs(determinant(dec.U)) == 1);
    CHECK(abs(determinant(dec.V)) == 1);
    CHECK(dec.U * m * dec.V == dec.D);
    CHECK(dec.D.is_diagonal());
    const auto d = dec.diagonal();
    for (std::size_t i = 0; i < d.size(); ++i) {
      CHECK(d[i] >= 0);
      if (i + 1 < d.size() && d[i] != 0) CHECK(d[i + 1] % d[i] == 0);
      if (i + 1 < d.size() && d[i] == 0) CHECK(d[i + 1] == 0);
    }
    if (m.rows() == m.cols() && m.rows() > 0) {
      const BigInt det = determinant(m);
      BigInt prod = 1;
      for (const auto& x : d) prod *= x;
      CHECK(abs(det) == prod);
    }
    // d_1 ... d_k equals the k-th determinantal divisor.
    if (m.rows() <= 4 && m.cols() <= 4) {
      BigInt prod = 1;
      for (std::size_t k = 1; k <= d.size(); ++k) {
        prod *= d[k - 1];
        CHECK(determinantal_divisor(m, k) == prod);
      }
    }
  }
}

TEST_CASE("determinant agrees with cofactor expansion") {
  auto g = testing::make_rng("det");
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(testing::uniform(g, 1, 5));
    IntegerMatrix m(n, n);
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j) = testing::uniform(g, -9, 9);
    }
    CHECK(determinant(m) == cofactor_det(a));
  }
}

TEST_CASE("coker element order") {
  const IntegerMatrix five{{5}};
  const std::vector<BigInt> one{1}, zero{0}, three{3};
  CHECK(coker_element_order(five, one) == 5);
  CHECK(coker_element_order(five, zero) == 1);
  CHECK(coker_element_order(IntegerMatrix(1, 0), three) == 0);
  CHECK_THROWS_AS(coker_element_order(five, std::vector<BigInt>{1, 2}), DomainError);

  auto g = testing::make_rng("coker");
  for (int trial = 0; trial < 200; ++trial) {
    IntegerMatrix m = random_matrix(g, 4, 6);
    if (m.rows() == 0) continue;
    std::vector<BigInt> v(m.rows());
    for (auto& x : v) x = testing::uniform(g, -5, 5);
    const BigInt ord = coker_element_order(m, v);
    for (long k = 1; k <= 4; ++k) {
      std::vector<BigInt> kv = v;
      for (auto& x : kv) x *= k;
      const BigInt ordk = coker_element_order(m, kv);
      if (ord == 0) {
        CHECK(ordk == 0);
      } else {
        CHECK((ordk * k) % ord == 0);
      }
    }
    if (ord != 0) {
      std::vector<BigInt> tv = v;
      for (auto& x : tv) x *= ord;
      CHECK(coker_element_order(m, tv) == 1);
    }
    // Lattice vectors have order 1.
    std::vector<BigInt> lattice(m.rows(), BigInt(0));
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const long c = testing::uniform(g, -3, 3);
      for (std::size_t i = 0; i < m.rows(); ++i) lattice[i] += c * m(i, j);
    }
    CHECK(coker_element_order(m, lattice) == 1);
  }
}

TEST_CASE("polynomial arithmetic") {
  const IntPolynomial a{1, -1, 1};  // t^2 - t + 1
  const IntPolynomial b{1, 1};      // t + 1
  CHECK((a * b) == IntPolynomial{1, 0, 0, 1});
  CHECK(a.str() == "t^2 - t + 1");
  CHECK(IntPolynomial{1, -3, 1}.str() == "t^2 - 3t + 1");
  CHECK(IntPolynomial{}.str() == "0");
  CHECK(a(BigInt(-1)) == 3);
  CHECK(a.degree() == 2);
  CHECK(IntPolynomial{}.degree() == -1);
  CHECK(IntPolynomial{0, 0, 2, 4}.shift_down() == IntPolynomial{2, 4});
  CHECK(IntPolynomial{2, 4, -6}.content() == 2);
  CHECK(IntPolynomial{-2, -4}.primitive_part() == IntPolynomial{1, 2});
  CHECK(divide_exact(a * b, b) == a);
  CHECK_THROWS_AS(divide_exact(a, b), DomainError);

  const auto pd = pseudo_divide(IntPolynomial{1, 0, 3}, IntPolynomial{1, 2});
  CHECK(pd.multiplier * IntPolynomial{1, 0, 3} == pd.quotient * IntPolynomial{1, 2} + pd.remainder);

  const IntPolynomial x1{-1, 1}, x2{2, 1};
  CHECK(gcd(x1 * x1 * x2, x1 * IntPolynomial{5, 1}) == x1);
  CHECK(square_free_part(x1 * x1 * x2) == x1 * x2);
  CHECK(square_free_part(BigInt(-6) * x1 * x1) == x1);
}

TEST_CASE("sturm examples") {
  CHECK(positive_real_root_count(IntPolynomial{1, 0, 1}) == 0);
  CHECK(positive_real_root_count(IntPolynomial{1, -3, 1}) == 2);
  CHECK(positive_real_root_count(IntPolynomial{1, -1, 1}) == 0);
  CHECK(positive_real_root_count(IntPolynomial{5}) == 0);
  CHECK(positive_real_root_count(IntPolynomial{0, 1}) == 0);  // root at 0 is excluded
  CHECK_THROWS_AS(positive_real_root_count(IntPolynomial{}), DomainError);
}

TEST_CASE("sturm property: 200 random polynomials against exact bisection") {
  auto g = testing::make_rng("sturm");
  int tested = 0;
  while (tested < 200) {
    const long deg = testing::uniform(g, 1, 8);
    std::vector<BigInt> c(static_cast<std::size_t>(deg) + 1);
    for (auto& x : c) x = testing::uniform(g, -9, 9);
    if (c.back() == 0) continue;
    const IntPolynomial p(c);
    QPoly q = to_q(p);
    // The oracle needs a square-free input; discard the rare repeated-root case.
    if (qgcd_degree(q, qderiv(q)) != 0) continue;
    INFO("p = " << p.str());
    CHECK(positive_real_root_count(p) == oracle_positive_roots(q));
    ++tested;
  }
}

TEST_CASE("sturm property: products with known roots and multiplicities") {
  auto g = testing::make_rng("sturm-known");
  for (int trial = 0; trial < 100; ++trial) {
    IntPolynomial p{testing::uniform(g, 1, 3)};
    std::vector<mpq_class> roots;
    const long factors = testing::uniform(g, 0, 4);
    for (long i = 0; i < factors; ++i) {
      const long num = testing::uniform(g, -6, 6), den = testing::uniform(g, 1, 4);
      const long mult = testing::uniform(g, 1, 3);
      for (long k = 0; k < mult; ++k) p = p * IntPolynomial{-num, den};
      roots.emplace_back(num, den);
      roots.back().canonicalize();
    }
    // Quadratics without real roots.
    const long quads = testing::uniform(g, 0, 2);
    for (long i = 0; i < quads; ++i) {
      const long b = testing::uniform(g, -3, 3);
      p = p * IntPolynomial{b * b + testing::uniform(g, 1, 5), b, 1};
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    const auto expected = std::count_if(roots.begin(), roots.end(), [](const mpq_class& r) { return r > 0; });
    INFO("p = " << p.str());
    CHECK(positive_real_root_count(p) == static_cast<std::size_t>(expected));
  }
}
