#include <random>

#include "doctest.h"
#include "kwj/algebras.hpp"
#include "kwj/ncalg.hpp"
#include "oracles.hpp"

using namespace kwj;

namespace {

NcPoly random_poly(std::mt19937_64& rng, int gens, unsigned order, std::size_t max_deg, int terms = 6) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3), g(0, gens - 1);
  std::uniform_int_distribution<std::size_t> deg(0, max_deg);
  NcPoly p;
  for (int t = 0; t < terms; ++t) {
    Word w(deg(rng));
    for (auto& c : w) c = g(rng);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    p.add_term(w, CycElem(order, q));
  }
  return p;
}

std::vector<CycElem> sample_x(unsigned n) { return {CycElem(1, 0L), CycElem(1, 1L), CycElem(1, 2L), zeta(n, 1) + CycElem(n, 1L)}; }

oracle::cd cx(const CycElem& c) { return oracle::to_complex(c); }

}  // namespace

TEST_CASE("Jackson normal forms agree with rightmost-first numeric reduction") {
  std::mt19937_64 rng(11);
  for (unsigned n = 2; n <= 6; ++n)
    for (int r = 0; r < int(n); ++r)
      for (const auto& x : sample_x(n)) {
        Presentation p = jackson(n, r, x);
        auto sys = oracle::jackson(n, r, cx(x));
        for (int t = 0; t < 8; ++t) {
          NcPoly f = random_poly(rng, 3, p.order, 5);
          CHECK(oracle::same(oracle::to_cpoly(nf(f, p)), oracle::cnf(oracle::to_cpoly(f), sys)));
        }
      }
}

TEST_CASE("Jackson rules in words") {
  Presentation p = jackson(5, 2, CycElem(1, 1L));
  NcPoly e0 = p.gen(0), e1 = p.gen(1), e2 = p.gen(2);
  CycElem z2 = zeta(5, 2), z4 = zeta(5, 4), one(5, 1L);
  CHECK(nf(e1 * e0, p) == (e0 * e1) * z2.inv());
  CHECK(nf(e2 * e0, p) == (e0 * e2) * z2);
  CHECK(nf(e2 * e1, p) == (e1 * e2) * z4 + e0 + p.scalar(one - z4));
  CHECK(diamond_check(p).empty());
}

TEST_CASE("diamond check agrees with the numeric overlap count") {
  for (unsigned n = 2; n <= 5; ++n)
    for (int r = 0; r < int(n); ++r)
      for (const auto& x : {CycElem(1, 0L), CycElem(1, 1L), CycElem(1, 3L)}) {
        CHECK(diamond_check(jackson(n, r, x)).empty());
        CHECK(oracle::coverlaps(oracle::jackson(n, r, cx(x))) == 0);
        bool lib = diamond_check(kummer_witt(n, r, x)).empty();
        bool orc = oracle::coverlaps(oracle::kummer_witt(n, r, cx(x))) == 0;
        CHECK(lib == orc);
      }
}

TEST_CASE("Kummer-Witt n = 3 normal forms agree with the numeric oracle") {
  std::mt19937_64 rng(5);
  for (int r = 0; r < 3; ++r)
    for (const auto& x : sample_x(3)) {
      Presentation p = kummer_witt(3, r, x);
      REQUIRE(diamond_check(p).empty());
      auto sys = oracle::kummer_witt(3, r, cx(x));
      for (int t = 0; t < 10; ++t) {
        NcPoly f = random_poly(rng, 3, p.order, 4);
        CHECK(oracle::same(oracle::to_cpoly(nf(f, p)), oracle::cnf(oracle::to_cpoly(f), sys)));
      }
    }
}

TEST_CASE("Kummer-Witt n = 4, r = 2, x = 0 forces e3^2 into the ideal") {
  // e1 R23 + R23 e1 - 4 e3^2 lies in the ideal of R12 and R13
  Presentation p = kummer_witt(4, 2, CycElem(1, 0L));
  NcPoly e1 = p.gen(1), e2 = p.gen(2), e3 = p.gen(3);
  CycElem two(4, 2L), four(4, 4L);
  NcPoly R12 = e1 * e2 + e2 * e1 - e3 * two, R13 = e1 * e3 - e3 * e1, R23 = e2 * e3 + e3 * e2;
  for (const auto& rel : {R12, R13, R23}) CHECK(nf(rel, p).is_zero());
  // identity in the free algebra
  CHECK(e1 * R23 + R23 * e1 - e3 * e3 * four == R12 * e3 + R13 * e2 + e3 * R12 - e2 * R13);
  // e3^2 lies in the ideal yet is a normal word
  CHECK(is_irreducible({3, 3}, *p.sys));
  CHECK(!nf(e3 * e3, p).is_zero());
  CHECK(!diamond_check(p).empty());
  CHECK(oracle::coverlaps(oracle::kummer_witt(4, 2, 0.0)) > 0);
}

TEST_CASE("normal form is linear and idempotent") {
  std::mt19937_64 rng(3);
  for (auto p : {jackson(3, 1, CycElem(1, 1L)), jackson(4, 2, CycElem(1, 0L)), kummer_witt(3, 1, CycElem(1, 2L))}) {
    for (int t = 0; t < 20; ++t) {
      NcPoly f = random_poly(rng, p.generators(), p.order, 5), g = random_poly(rng, p.generators(), p.order, 5);
      CycElem s = zeta(p.order, 1) + CycElem(p.order, 3L);
      CHECK(nf(f + g * s, p) == nf(f, p) + nf(g, p) * s);
      NcPoly once = nf(f, p);
      CHECK(nf(once, p) == once);
      for (const auto& [w, c] : once.terms()) CHECK(is_irreducible(w, *p.sys));
    }
  }
}

TEST_CASE("random reduction order matches the default on confluent systems") {
  std::mt19937_64 rng(8), pick(99);
  for (auto p : {jackson(5, 2, CycElem(1, 1L)), kummer_witt(3, 2, CycElem(1, 1L)), quantum_weyl(zeta(3, 2))}) {
    for (int t = 0; t < 20; ++t) {
      NcPoly f = random_poly(rng, p.generators(), p.order, 6);
      CHECK(nf_random(f, *p.sys, pick) == nf(f, p));
    }
  }
}

TEST_CASE("irreducible Jackson words are the nondecreasing ones") {
  Presentation p = jackson(3, 1, CycElem(1, 1L));
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) CHECK(is_irreducible({a, b, c}, *p.sys) == (a <= b && b <= c));
}

TEST_CASE("relations vanish and evaluate to zero on a point") {
  Presentation p = jackson(3, 1, CycElem(1, 1L));
  auto rels = relations(*p.sys, p.order);
  CHECK(rels.size() == 3);
  for (const auto& rel : rels) CHECK(nf(rel, p).is_zero());
  // e0 = 0, e1 = 1, e2 = c with c = z^2 c + 1 - z^2, so c = 1
  CycElem one(3, 1L);
  Representation pt{3, 1, {Matrix(1, 1, 3), Matrix(1, 1, 3), Matrix(1, 1, 3)}};
  pt.gens[1](0, 0) = one;
  pt.gens[2](0, 0) = one;
  for (const auto& rel : rels) CHECK(eval_rep(rel, pt).is_zero());
}

TEST_CASE("eval_rep multiplies generator matrices in word order") {
  std::mt19937_64 rng(21);
  Representation rep{3, 2, {}};
  for (int g = 0; g < 3; ++g) {
    Matrix m(2, 2, 3);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m(i, j) = CycElem(3, long(rng() % 7) - 3) + zeta(3, g);
    rep.gens.push_back(m);
  }
  auto crep = oracle::to_crep(rep);
  for (int t = 0; t < 10; ++t) {
    NcPoly f = random_poly(rng, 3, 3, 4);
    CHECK(oracle::cnear(oracle::to_cmat(eval_rep(f, rep)), oracle::ceval(oracle::to_cpoly(f), crep)));
  }
}

TEST_CASE("substitution and centrality") {
  Presentation p = jackson(4, 1, CycElem(1, 0L));
  std::vector<NcPoly> id{p.gen(0), p.gen(1), p.gen(2)};
  std::mt19937_64 rng(2);
  NcPoly f = random_poly(rng, 3, p.order, 4);
  CHECK(substitute(f, id, p) == nf(f, p));
  CHECK(is_central(power(p.gen(0), 4, p), p));
  CHECK(!is_central(p.gen(0), p));
  CHECK(commutator(p.gen(0), p.gen(0), p).is_zero());
}

TEST_CASE("JSON round trips") {
  std::mt19937_64 rng(4);
  for (auto p : {jackson(6, 2, zeta(6, 1)), kummer_witt(3, 1, CycElem(1, 2L))}) {
    auto j = presentation_to_json(p);
    Presentation q = presentation_from_json(j);
    CHECK(presentation_to_json(q).dump() == j.dump());
    CHECK(q.sys->rules().size() == p.sys->rules().size());
    NcPoly f = random_poly(rng, p.generators(), p.order, 4);
    CHECK(poly_from_json(poly_to_json(f), p.order) == f);
  }
}
