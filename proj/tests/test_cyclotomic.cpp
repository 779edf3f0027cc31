#include <random>

#include "doctest.h"
#include "kwj/cyclotomic.hpp"
#include "kwj/matrix.hpp"
#include "oracles.hpp"

using namespace kwj;

namespace {

CycElem random_elem(std::mt19937_64& rng, unsigned n) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  std::vector<Rational> c(euler_phi(n));
  for (auto& q : c) {
    q = Rational(num(rng), den(rng));
    q.canonicalize();
  }
  return CycElem(n, c);
}

}  // namespace

TEST_CASE("cyclotomic polynomials match the Mobius product") {
  for (unsigned n = 1; n <= 30; ++n) {
    auto expect = oracle::cyclotomic(n);
    const IntPoly& got = cyclotomic_polynomial(n);
    REQUIRE(got.size() == expect.size());
    for (size_t k = 0; k < got.size(); ++k) CHECK(got[k] == Integer(static_cast<long>(expect[k])));
    CHECK(got.size() - 1 == euler_phi(n));
  }
  CHECK(cyclotomic_polynomial(1) == IntPoly{-1, 1});
  CHECK(cyclotomic_polynomial(4) == IntPoly{1, 0, 1});
  CHECK(cyclotomic_polynomial(12) == IntPoly{1, 0, -1, 0, 1});
}

TEST_CASE("zeta powers") {
  CHECK(zeta(1, 0).is_one());
  CHECK(zeta(3, 3).is_one());
  auto z32 = zeta(3, 2);
  CHECK(z32.coeffs() == std::vector<Rational>{-1, -1});
  for (unsigned n = 1; n <= 12; ++n)
    for (long k = -n; k <= long(2 * n); ++k) CHECK((zeta(n, k) * zeta(n, n - k)).is_one());
}

TEST_CASE("zeta is a root of its cyclotomic polynomial") {
  for (unsigned n = 1; n <= 24; ++n) {
    const IntPoly& phi = cyclotomic_polynomial(n);
    CycElem acc(n);
    for (size_t k = 0; k < phi.size(); ++k) acc += CycElem(n, Rational(phi[k])) * zeta(n, k);
    CHECK(acc.is_zero());
  }
}

TEST_CASE("q-integers") {
  auto q = zeta(5, 2);
  CHECK(q_int(0, q).is_zero());
  CHECK(q_int(1, q).is_one());
  CHECK(q_int(3, zeta(3, 1)).is_zero());
  CHECK(q_int(7, CycElem(3, 1L)) == CycElem(3, 7L));
  std::mt19937_64 rng(7);
  for (unsigned n : {3u, 4u, 5u, 7u}) {
    CycElem qq = random_elem(rng, n);
    for (unsigned i = 0; i <= 20; ++i)
      for (unsigned j = 0; j <= 20; ++j)
        CHECK(q_int(i + j, qq) == q_int(i, qq) + qq.pow(i) * q_int(j, qq));
  }
}

TEST_CASE("arithmetic examples") {
  auto z = zeta(3, 1);
  CycElem one(3, 1L);
  CHECK((one - z) * (one - zeta(3, 2)) == CycElem(3, 3L));
  CHECK(zeta(4, 1).pow(2) == CycElem(4, -1L));
  CycElem a = CycElem(3, 2L) + z;
  CHECK((a * a.inv()).is_one());
  CHECK_THROWS_AS(CycElem(5).inv(), DivisionByZero);
  CHECK_THROWS_AS(CycElem(3, 1L) / CycElem(3), DivisionByZero);
}

TEST_CASE("field axioms against the complex embedding") {
  std::mt19937_64 rng(11);
  for (unsigned n : {1u, 2u, 3u, 4u, 5u, 6u, 8u, 9u, 12u}) {
    for (int t = 0; t < 30; ++t) {
      CycElem a = random_elem(rng, n), b = random_elem(rng, n), c = random_elem(rng, n);
      CHECK(oracle::near(oracle::to_complex(a * b), oracle::to_complex(a) * oracle::to_complex(b)));
      CHECK(oracle::near(oracle::to_complex(a + b), oracle::to_complex(a) + oracle::to_complex(b)));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      if (!a.is_zero()) {
        CHECK((a * a.inv()).is_one());
        CHECK(oracle::near(oracle::to_complex(a.inv()), 1.0 / oracle::to_complex(a)));
      }
    }
  }
}

TEST_CASE("embedding") {
  CHECK(CycElem(1, 1L).embed(3).is_one());
  CHECK(zeta(2, 1).embed(4) == zeta(4, 2));
  CHECK(zeta(2, 1).embed(4) == CycElem(4, -1L));
  CHECK(zeta(3, 1).embed(6) == zeta(6, 2));
  CHECK_THROWS_AS(zeta(3, 1).embed(4), std::invalid_argument);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    CycElem a = random_elem(rng, 3), b = random_elem(rng, 3);
    CHECK((a * b).embed(12) == a.embed(12) * b.embed(12));
    CHECK((a + b).embed(12) == a.embed(12) + b.embed(12));
  }
  // mixed orders land in the lcm
  CycElem m = zeta(3, 1) + zeta(4, 1);
  CHECK(m.order() == 12);
  CHECK(oracle::near(oracle::to_complex(m), oracle::to_complex(zeta(3, 1)) + oracle::to_complex(zeta(4, 1))));
}

TEST_CASE("literal round trip and parse errors") {
  auto a = CycElem::parse("1/3*z^2 - 2*z + 1", 5);
  CHECK(a.coeffs() == std::vector<Rational>{1, -2, Rational(1, 3), 0});
  CHECK(a.str() == "1/3*z^2 - 2*z + 1");
  CHECK(CycElem::parse(" 1 / 3 * z ^ 2-2 *z+1 ", 5) == a);
  CHECK(CycElem::parse("z^2", 3) == zeta(3, 2));
  CHECK(CycElem::parse("z^-1", 3) == zeta(3, 2));
  CHECK(CycElem::parse("-z", 3).str() == "-z");
  CHECK(CycElem(4).str() == "0");
  std::mt19937_64 rng(5);
  for (unsigned n : {1u, 3u, 4u, 5u, 7u, 12u})
    for (int t = 0; t < 20; ++t) {
      CycElem e = random_elem(rng, n);
      CHECK(CycElem::parse(e.str(), n) == e);
      CHECK(CycElem::parse(e.str(), n).str() == e.str());
    }
  try {
    CycElem::parse("1 + 2*", 3);
    FAIL("expected parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
  }
  CHECK_THROWS_AS(CycElem::parse("", 3), ParseError);
  CHECK_THROWS_AS(CycElem::parse("1/0", 3), ParseError);
  CHECK_THROWS_AS(CycElem::parse("2 3", 3), ParseError);
  CHECK_THROWS_AS(CycElem::parse("y", 3), ParseError);
}

TEST_CASE("exact linear algebra") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 10; ++t) {
    Matrix m(4, 4, 3);
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = 0; j < 4; ++j) m(i, j) = random_elem(rng, 3);
    CHECK(m * m.inverse() == Matrix::identity(4, 3));
  }
  Matrix s(2, 3, 3);
  s(0, 0) = CycElem(3, 1L);
  s(0, 1) = zeta(3, 1);
  s(1, 0) = CycElem(3, 2L);
  s(1, 1) = zeta(3, 1) * CycElem(3, 2L);
  auto ns = nullspace(s);
  CHECK(ns.size() == 2);
  for (const auto& v : ns) {
    Matrix col(3, 1, 3);
    for (size_t i = 0; i < 3; ++i) col(i, 0) = v[i];
    CHECK((s * col).is_zero());
  }
  CHECK(rank(s) == 1);
}
