#include <random>

#include "doctest.h"
#include "kwj/algebras.hpp"
#include "kwj/homlie.hpp"
#include "oracles.hpp"

using namespace kwj;
using oracle::cd;

namespace {

using CVec = std::vector<cd>;

struct NumAlg {
  std::size_t m;
  std::vector<std::vector<CVec>> a;
  std::vector<cd> sigma;
  cd alpha;
};

NumAlg numeric(const CommAlgebra& A, const TwistData& tw) {
  NumAlg N{A.dim, {}, {}, oracle::to_complex(tw.alpha)};
  N.a.assign(A.dim, std::vector<CVec>(A.dim, CVec(A.dim)));
  for (std::size_t i = 0; i < A.dim; ++i)
    for (std::size_t j = 0; j < A.dim; ++j)
      for (std::size_t k = 0; k < A.dim; ++k) N.a[i][j][k] = oracle::to_complex(A.a[i][j][k]);
  for (const auto& l : tw.sigma_diag) N.sigma.push_back(oracle::to_complex(l));
  return N;
}

CVec vmul(const NumAlg& N, const CVec& u, const CVec& v) {
  CVec r(N.m);
  for (std::size_t i = 0; i < N.m; ++i)
    for (std::size_t j = 0; j < N.m; ++j)
      for (std::size_t k = 0; k < N.m; ++k) r[k] += u[i] * v[j] * N.a[i][j][k];
  return r;
}

CVec sig(const NumAlg& N, CVec u) {
  for (std::size_t i = 0; i < N.m; ++i) u[i] *= N.sigma[i];
  return u;
}

// Delta = alpha (id - sigma)
CVec delta(const NumAlg& N, CVec u) {
  for (std::size_t i = 0; i < N.m; ++i) u[i] *= N.alpha * (1.0 - N.sigma[i]);
  return u;
}

CVec sub(CVec a, const CVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

// <a Delta, b Delta> = (sigma(a) Delta(b) - sigma(b) Delta(a)) Delta
CVec nbracket(const NumAlg& N, const CVec& a, const CVec& b) {
  return sub(vmul(N, sig(N, a), delta(N, b)), vmul(N, sig(N, b), delta(N, a)));
}

CVec unit(std::size_t m, std::size_t i) {
  CVec v(m);
  v[i] = 1;
  return v;
}

bool vnear(const CVec& a, const CVec& b, double tol = 1e-8) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol) return false;
  return true;
}

CVec cvec(const Vec& v) {
  CVec r;
  for (const auto& x : v) r.push_back(oracle::to_complex(x));
  return r;
}

bool vec_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("random twisted algebras give hom-Lie algebras") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    TwistedAlgebra ta = random_twisted_algebra(rng);
    const CommAlgebra& A = ta.algebra;
    REQUIRE(A.is_commutative());
    REQUIRE(A.is_associative());
    NumAlg N = numeric(A, ta.twist);
    std::size_t m = A.dim;
    // Delta is a sigma-derivation
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        CVec u = unit(m, i), v = unit(m, j);
        CVec lhs = delta(N, vmul(N, u, v));
        CVec rhs = vmul(N, delta(N, u), v);
        CVec t = vmul(N, sig(N, u), delta(N, v));
        for (std::size_t k = 0; k < m; ++k) rhs[k] += t[k];
        CHECK(vnear(lhs, rhs));
      }
    HomLieAlgebra h = twisted_bracket(A, ta.twist);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        CHECK(vnear(cvec(h.bracket(h.basis(i), h.basis(j))), nbracket(N, unit(m, i), unit(m, j))));
    CHECK(check_antisymmetry(h));
    CHECK(check_hom_jacobi(h).empty());
    // numeric hom-Jacobi on the numeric bracket
    cd q = oracle::to_complex(ta.twist.q_sigma);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k) {
          CVec s(m);
          std::size_t t[3] = {i, j, k};
          for (int c = 0; c < 3; ++c) {
            CVec a = unit(m, t[c]);
            CVec inner = nbracket(N, unit(m, t[(c + 1) % 3]), unit(m, t[(c + 2) % 3]));
            CVec x = nbracket(N, sig(N, a), inner), y = nbracket(N, a, inner);
            for (std::size_t l = 0; l < m; ++l) s[l] += x[l] + q * y[l];
          }
          CHECK(vnear(s, CVec(m)));
        }
  }
}

TEST_CASE("infinitesimal brackets come from the q-derivation of the truncated line") {
  for (unsigned n = 2; n <= 6; ++n)
    for (const CycElem& q : {zeta(5, 1), zeta(7, 2), zeta(12, 5)})
      for (const CycElem& a : {CycElem(1, 2L), CycElem(1, Rational(1, 3))}) {
        HomLieAlgebra h = infinitesimal_homlie(n, q, a);
        // alpha (1 - q^j) = a [j]_q with alpha = a / (1 - q)
        TwistData tw;
        for (unsigned i = 0; i < n; ++i) tw.sigma_diag.push_back(q.pow(i));
        tw.alpha = a / (CycElem(q.order(), 1L) - q);
        tw.q_sigma = CycElem(q.order(), 1L);
        NumAlg N = numeric(truncated_line(n, q.order()), tw);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            CHECK(vnear(cvec(h.bracket(h.basis(i), h.basis(j))), nbracket(N, unit(n, i), unit(n, j))));
        CHECK(check_antisymmetry(h));
        CHECK(check_hom_jacobi(h).empty());
      }
}

TEST_CASE("infinitesimal n = 2 and n = 3 satisfy the plain Jacobi identity") {
  for (unsigned n : {2u, 3u})
    for (const CycElem& q : {zeta(5, 1), zeta(9, 4)}) {
      HomLieAlgebra h = infinitesimal_homlie(n, q, CycElem(1, 3L));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k) CHECK(vec_zero(jacobi_probe(h, i, j, k)));
    }
}

TEST_CASE("infinitesimal n = 4 plain Jacobi sum on (e0, e1, e2)") {
  // <e1,e2> = a q e3, <e0,e3> = a [3] e3, <e2,e0> = -a [2] e2, <e0,e1> = a e1, <e2,e1> = -a q e3,
  // so the cyclic sum is a^2 q ([3] - [2] - 1) e3 = a^2 q (q - 1)(q + 1) e3
  for (const CycElem& q : {zeta(7, 1), zeta(5, 2), zeta(11, 3)})
    for (const CycElem& a : {CycElem(1, 2L), CycElem(1, Rational(-3, 2))}) {
      HomLieAlgebra h = infinitesimal_homlie(4, q, a);
      Vec v = jacobi_probe(h, 0, 1, 2);
      CycElem one(q.order(), 1L);
      CycElem expect = a * a * q * (q - one) * (q + one);
      CHECK(v[0].is_zero());
      CHECK(v[1].is_zero());
      CHECK(v[2].is_zero());
      CHECK(v[3] == expect);
      CHECK(!v[3].is_zero());
    }
}

TEST_CASE("Kummer-Witt hom-Lie algebra is the twisted bracket on the Kummer extension") {
  for (unsigned n = 2; n <= 6; ++n)
    for (int r = 0; r < int(n); ++r)
      for (const CycElem& x : {CycElem(1, 0L), CycElem(1, 1L), CycElem(1, 5L)}) {
        HomLieAlgebra h = kummer_witt_homlie(n, r, x);
        TwistData tw;
        for (unsigned i = 0; i < n; ++i) tw.sigma_diag.push_back(zeta(n, long(r) * i));
        tw.alpha = CycElem(n, 1L);
        tw.q_sigma = CycElem(n, 1L);
        HomLieAlgebra g = twisted_bracket(kummer_extension(n, x), tw);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) CHECK(h.bracket(h.basis(i), h.basis(j)) == g.bracket(g.basis(i), g.basis(j)));
        CHECK(check_hom_jacobi(h).empty());
        if (r == 0)
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) CHECK(vec_zero(h.bracket(h.basis(i), h.basis(j))));
      }
}

TEST_CASE("twisted_bracket rejects a twist that is not an algebra morphism") {
  TwistData tw{{CycElem(3, 1L), zeta(3, 1), zeta(3, 1)}, CycElem(3, 1L), CycElem(3, 1L)};
  CHECK_THROWS_AS(twisted_bracket(truncated_line(3, 3), tw), std::invalid_argument);
}

TEST_CASE("enveloping algebra of the Kummer-Witt hom-Lie algebra has the Kummer-Witt relations") {
  for (unsigned n = 2; n <= 5; ++n)
    for (int r = 0; r < int(n); ++r) {
      CycElem x(1, 3L);
      Presentation u = enveloping(kummer_witt_homlie(n, r, x));
      Presentation w = kummer_witt(n, r, x);
      for (const auto& rule : w.sys->rules()) {
        const NcPoly* rhs = u.sys->rule_for(rule.j, rule.i);
        REQUIRE(rhs != nullptr);
        CHECK(*rhs == rule.rhs);
      }
    }
}

TEST_CASE("enveloping algebra of the infinitesimal n = 2 algebra") {
  // e1 e0 = q^{-1} e0 e1 - q^{-1} a e1
  CycElem q = zeta(5, 1), a(1, 2L);
  Presentation u = enveloping(infinitesimal_homlie(2, q, a));
  NcPoly expect(Word{0, 1}, q.inv());
  expect.add_term(Word{1}, -(q.inv() * a));
  CHECK(*u.sys->rule_for(1, 0) == expect);
  CHECK(u.pbw.value_or(false));
}
