#include "doctest.h"
#include "kwj/findim.hpp"

using namespace kwj;

namespace {

FinDimAlgebra from_table(std::size_t dim, const std::vector<std::vector<std::vector<long>>>& t) {
  FinDimAlgebra A;
  A.dim = dim;
  A.order = 1;
  for (std::size_t i = 0; i < dim; ++i) A.names.push_back("b" + std::to_string(i));
  A.table.assign(dim, std::vector<SparseVec>(dim));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k)
        if (t[i][j][k]) A.table[i][j].push_back({k, CycElem(1, t[i][j][k])});
  return A;
}

// M_2 on the basis u = 1, a = E12, b = E21, h = E11 - E22.
FinDimAlgebra mat2() {
  // a b = E11 = (u + h)/2, b a = E22 = (u - h)/2, a h = -a, h a = a, b h = b, h b = -b, h h = u
  FinDimAlgebra A;
  A.dim = 4;
  A.order = 1;
  A.names = {"1", "a", "b", "h"};
  A.table.assign(4, std::vector<SparseVec>(4));
  CycElem one(1, 1L), half(1, Rational(1, 2)), mhalf(1, Rational(-1, 2));
  for (std::size_t i = 0; i < 4; ++i) {
    A.table[0][i] = {{i, one}};
    A.table[i][0] = {{i, one}};
  }
  A.table[1][2] = {{0, half}, {3, half}};
  A.table[2][1] = {{0, half}, {3, mhalf}};
  A.table[1][3] = {{1, -one}};
  A.table[3][1] = {{1, one}};
  A.table[2][3] = {{2, one}};
  A.table[3][2] = {{2, -one}};
  A.table[3][3] = {{0, one}};
  return A;
}

}  // namespace

TEST_CASE("dual numbers") {
  // 1, e with e^2 = 0
  FinDimAlgebra D = from_table(2, {{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}});
  CHECK(check_unit(D));
  CHECK(check_associative(D));
  auto rad = radical(D);
  CHECK(rad.size() == 1);
  CHECK(nilpotency_index(D, rad) == std::optional<std::size_t>(2));
  CHECK(centre_basis(D).size() == 2);
  FibreClass c = classify(D);
  CHECK(c.kind == FibreKind::Ramified);
  CHECK(c.radical_dim == 1);
  CHECK(c.semisimple_dim == 1);
  CHECK(!is_central_simple(D));
  FinDimAlgebra Q = quotient(D, rad);
  CHECK(Q.dim == 1);
  CHECK(check_unit(Q));
}

TEST_CASE("upper triangular 2 x 2 matrices") {
  // 1, e = E11, n = E12: e e = e, e n = n, n e = 0, n n = 0
  FinDimAlgebra T = from_table(3, {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
                                   {{0, 1, 0}, {0, 1, 0}, {0, 0, 1}},
                                   {{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}});
  CHECK(check_associative(T));
  auto rad = radical(T);
  REQUIRE(rad.size() == 1);
  CHECK(in_span(rad, {CycElem(1), CycElem(1), CycElem(1, 1L)}, 1));
  CHECK(is_two_sided_ideal(T, rad));
  CHECK(centre_basis(T).size() == 1);
  FibreClass c = classify(T);
  CHECK(c.kind == FibreKind::Ramified);
  CHECK(c.semisimple_dim == 2);
  CHECK(c.quotient_centre_dim == 2);
}

TEST_CASE("two by two matrices are central simple") {
  FinDimAlgebra M = mat2();
  CHECK(check_unit(M));
  CHECK(check_associative(M));
  CHECK(radical(M).empty());
  CHECK(centre_basis(M).size() == 1);
  CHECK(is_central_simple(M));
  FibreClass c = classify(M);
  CHECK(c.kind == FibreKind::Azumaya);
  CHECK(c.centre_dim == 1);
  // ideal generated by a is everything
  Vec a = M.basis(1);
  CHECK(ideal_closure(M, {a}).size() == 4);
}

TEST_CASE("product of two fields is semisimple but not central") {
  // 1, e with e^2 = e
  FinDimAlgebra P = from_table(2, {{{1, 0}, {0, 1}}, {{0, 1}, {0, 1}}});
  CHECK(radical(P).empty());
  CHECK(centre_basis(P).size() == 2);
  CHECK(!is_central_simple(P));
  CHECK(classify(P).kind == FibreKind::Ramified);
}

TEST_CASE("non-associative table is detected") {
  // 1, a, b with a a = b, b a = 1 and a b = b b = 0
  FinDimAlgebra N = from_table(3, {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
                                   {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}},
                                   {{0, 0, 1}, {1, 0, 0}, {0, 0, 0}}});
  // (b a) a = a while b (a a) = b b = 0
  CHECK(!check_associative(N));
}

TEST_CASE("isomorphism check") {
  FinDimAlgebra D = from_table(2, {{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}});
  // e -> 3 e is an automorphism of the dual numbers
  CHECK(check_isomorphism(D, D, {D.basis(0), {CycElem(1), CycElem(1, 3L)}}));
  // e -> 1 + e is not
  CHECK(!check_isomorphism(D, D, {D.basis(0), {CycElem(1, 1L), CycElem(1, 1L)}}));
  FinDimAlgebra M = mat2();
  // swapping a and b while fixing h is not multiplicative
  CHECK(!check_isomorphism(M, M, {M.basis(0), M.basis(2), M.basis(1), M.basis(3)}));
  // conjugation by diag(1, -1) sends a -> -a, b -> -b
  Vec ma = M.zero(), mb = M.zero();
  ma[1] = CycElem(1, -1L);
  mb[2] = CycElem(1, -1L);
  CHECK(check_isomorphism(M, M, {M.basis(0), ma, mb, M.basis(3)}));
}

TEST_CASE("span helpers") {
  std::vector<Vec> vs{{CycElem(1, 1L), CycElem(1, 2L)}, {CycElem(1, 2L), CycElem(1, 4L)}};
  CHECK(row_basis(vs, 2, 1).size() == 1);
  CHECK(in_span(vs, {CycElem(1, 3L), CycElem(1, 6L)}, 1));
  CHECK(!in_span(vs, {CycElem(1, 1L), CycElem(1, 0L)}, 1));
  CHECK(is_perfect_square(49));
  CHECK(!is_perfect_square(27));
}
